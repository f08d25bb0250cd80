#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "intertwine/error.hpp"
#include "intertwine/intertwining.hpp"
#include "intertwine/slice.hpp"
#include "oracles.hpp"

using namespace intertwine;
using testing_helpers::coll;
using testing_helpers::labels;
using testing_helpers::sub;

namespace {

Collection t1() { return coll(8, 3, 3, {"135", "136", "137", "146", "147", "157"}); }
Collection t2() { return coll(8, 3, 3, {"135", "136", "137", "357", "147", "157"}); }

// Slices among all maximal non-intertwining families of the cyclic index
// set, found with the oracle alone.
std::vector<Collection> oracle_slices(int n, int l) {
  const auto atoms = oracle::cyclic_index_set(n, l);
  std::vector<std::vector<bool>> ok(atoms.size(), std::vector<bool>(atoms.size()));
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = 0; j < atoms.size(); ++j) ok[i][j] = !oracle::alternate_either(atoms[i], atoms[j]);
  }
  std::vector<std::vector<int>> families;
  oracle::maximal_families(ok, families);
  std::vector<Collection> out;
  for (const auto& f : families) {
    bool slice = false;
    for (int base = 1; base <= n && !slice; ++base) {
      std::set<std::vector<int>> image;
      for (int i : f) image.insert(oracle::gaps(oracle::elems(atoms[static_cast<std::size_t>(i)]), n, base));
      slice = static_cast<long long>(image.size()) == oracle::choose(n - l - 1, l - 1) &&
              static_cast<long long>(f.size()) == oracle::choose(n - l - 1, l - 1);
    }
    if (!slice) continue;
    std::vector<CyclicSubset> members;
    for (int i : f) members.push_back(CyclicSubset::from_mask(n, atoms[static_cast<std::size_t>(i)]));
    out.emplace_back(n, l, l, members);
  }
  return out;
}

}  // namespace

TEST_CASE("compositions") {
  CHECK(compositions(2, 3) == std::vector<Composition>{{0, 0, 2}, {0, 1, 1}, {0, 2, 0},
                                                       {1, 0, 1}, {1, 1, 0}, {2, 0, 0}});
  CHECK(compositions(0, 2) == std::vector<Composition>{{0, 0}});
  for (int total = 0; total <= 6; ++total) {
    for (int parts = 1; parts <= 4; ++parts) {
      CHECK(static_cast<long long>(compositions(total, parts).size()) ==
            oracle::choose(total + parts - 1, parts - 1));
    }
  }
}

TEST_CASE("phi") {
  CHECK(phi(sub(8, "135"), 1) == Composition{0, 0, 2});
  CHECK(phi(sub(8, "157"), 1) == Composition{2, 0, 0});
  CHECK(phi(sub(8, "135"), 1) == phi(sub(8, "357"), 1));
  CHECK(phi(sub(8, "147"), 4) == Composition{1, 0, 1});
  CHECK(phi(sub(8, "147"), 4) == phi(sub(8, "136"), 4));
  CHECK_THROWS_AS(phi(sub(8, "124"), 1), Error);
  CHECK_THROWS_AS(phi(sub(8, "138"), 1), Error);
  for (int n = 4; n <= 10; ++n) {
    for (int l = 2; 2 * l <= n; ++l) {
      for (auto m : oracle::cyclic_index_set(n, l)) {
        for (int base = 1; base <= n; ++base) {
          const auto p = phi(CyclicSubset::from_mask(n, m), base);
          REQUIRE(p == oracle::gaps(oracle::elems(m), n, base));
          int sum = 0;
          for (int x : p) sum += x;
          REQUIRE(sum == n - 2 * l);
        }
      }
    }
  }
}

TEST_CASE("is_slice on the two worked collections") {
  auto cert = is_slice(t1());
  REQUIRE(cert.has_value());
  CHECK(cert->base_point == 1);
  CHECK(cert->image == compositions(2, 3));
  CHECK_FALSE(is_slice(t2()).has_value());
}

TEST_CASE("is_slice reports distinct precondition failures") {
  auto code_of = [](const Collection& c) {
    try {
      is_slice(c);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of(coll(8, 3, 3, {"135", "136"})) == ErrorCode::WrongSize);
  CHECK(code_of(coll(8, 3, 3, {"135", "124"})) == ErrorCode::NotInIndexSet);
  CHECK(code_of(coll(8, 3, 3, {"135", "246", "136", "137", "147", "157"})) ==
        ErrorCode::IntertwiningPair);
}

TEST_CASE("phi collisions of the non-slice cover every base point") {
  const std::set<std::pair<std::string, std::string>> listed[] = {
      {},
      {{"135", "357"}},                      // base 1
      {{"357", "157"}},                      // 2
      {{"357", "157"}},                      // 3
      {{"147", "136"}},                      // 4
      {{"137", "157"}},                      // 5
      {{"137", "135"}},                      // 6
      {{"137", "135"}},                      // 7
      {{"135", "357"}},                      // 8
  };
  for (int base = 1; base <= 8; ++base) {
    const auto found = phi_collisions(t2(), base);
    bool hit = false;
    for (const auto& c : found) {
      for (const auto& [x, y] : listed[base]) {
        if ((c.first.str() == x && c.second.str() == y) || (c.first.str() == y && c.second.str() == x)) {
          hit = true;
          CHECK(phi(c.first, base) == c.value);
          CHECK(phi(c.second, base) == c.value);
        }
      }
    }
    CHECK_MESSAGE(hit, "base " << base);
  }
  CHECK(phi_collisions(t1(), 1).empty());
}

TEST_CASE("standard slice") {
  CHECK(standard_slice(8, 3) == t1());
  CHECK(labels(standard_slice(6, 2)) == std::set<std::string>{"13", "14", "15"});
  for (int n = 4; n <= 12; ++n) {
    for (int l = 2; 2 * l <= n; ++l) {
      const auto s = standard_slice(n, l);
      CHECK(static_cast<long long>(s.size()) == oracle::choose(n - l - 1, l - 1));
      CHECK(is_slice(s).has_value());
    }
  }
  for (int n = 5; n <= 8; ++n) CHECK(is_slice(standard_slice(n, 2)).has_value());
  CHECK_THROWS_AS(standard_slice(5, 3), Error);
  CHECK_THROWS_AS(standard_slice(5, 1), Error);
}

TEST_CASE("construct C_k on T_1 and the hexagon slice") {
  CHECK(labels(construct_ck(t1(), 4)) ==
        std::set<std::string>{"1356", "1346", "1367", "1347", "1246", "1467", "1247", "1457", "1257"});
  CHECK(construct_ck(t1(), 3) == t1());
  CHECK(labels(construct_ck(standard_slice(6, 2), 3)) ==
        std::set<std::string>{"134", "124", "145", "125"});
  CHECK_THROWS_AS(construct_ck(t2(), 4), Error);
  CHECK_THROWS_AS(construct_ck(t1(), 6), Error);
  try {
    construct_ck(t2(), 4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASlice);
  }
}

TEST_CASE("psi") {
  auto cert = *is_slice(t1());
  CHECK(psi({0, 0, 1}, {0, 0, 1}, t1(), cert) == sub(8, "1356"));
  CHECK(psi({0, 0, 0}, {0, 1, 1}, t1(), cert) == sub(8, "136"));
  CHECK_THROWS_AS(psi({0, 0, 1}, {0, 0, 0}, t1(), cert), Error);
  CHECK_THROWS_AS(psi({0, 1}, {0, 1}, t1(), cert), Error);
  std::set<CyclicSubset> images;
  for (const auto& q : compositions(1, 3)) {
    for (const auto& r : compositions(1, 3)) images.insert(psi(q, r, t1(), cert));
  }
  CHECK(images.size() == 9);
}

TEST_CASE("psi lookup catches a corrupted phi") {
  auto cert = *is_slice(t1());
  PhiFn off_by_one = [](const CyclicSubset& t, int base) {
    auto p = phi(t, base);
    std::rotate(p.begin(), p.begin() + 1, p.end());
    return p;
  };
  CHECK_THROWS_AS(construct_ck_via_psi(t1(), 4, off_by_one), Error);
}

TEST_CASE("C_k over every slice, n <= 9, l in {2,3}") {
  int slices_seen = 0;
  for (int l = 2; l <= 3; ++l) {
    for (int n = 2 * l; n <= 9; ++n) {
      for (const Collection& t : oracle_slices(n, l)) {
        ++slices_seen;
        REQUIRE(is_slice(t).has_value());
        for (int k = l; k <= n - l; ++k) {
          const auto ck = construct_ck(t, k);
          const auto expected = oracle::choose(k - 1, l - 1) * oracle::choose(n - k - 1, l - 1);
          REQUIRE(static_cast<long long>(ck.size()) == expected);
          // Filtration done from scratch.
          std::set<oracle::Mask> hats;
          for (const auto& m : t.members()) hats.insert(m.mask());
          std::size_t filtered = 0;
          for (auto m : oracle::l_ple(n, k, l)) {
            if (hats.count(oracle::run_starts(m, n))) {
              ++filtered;
              REQUIRE(ck.contains(CyclicSubset::from_mask(n, m)));
            }
          }
          REQUIRE(filtered == ck.size());
          for (const auto& a : ck.members()) {
            for (const auto& b : ck.members()) REQUIRE_FALSE(oracle::l_intertwine(a.mask(), b.mask(), l));
            REQUIRE(t.contains(hat(a)));
          }
          REQUIRE(construct_ck_via_psi(t, k) == ck);
          const auto prime = construct_ck_prime(t, k);
          REQUIRE(prime.size() == ck.size());
          REQUIRE(is_valid_collection(prime));
        }
      }
    }
  }
  MESSAGE("slices checked: " << slices_seen);
  CHECK(slices_seen > 0);
}

TEST_CASE("l = 2: counts and weak separation") {
  for (int n = 4; n <= 9; ++n) {
    for (int k = 2; k <= n - 2; ++k) {
      const auto ck = construct_ck(standard_slice(n, 2), k);
      CHECK(static_cast<int>(ck.size()) == (k - 1) * (n - k - 1));
      for (const auto& a : ck.members()) {
        for (const auto& b : ck.members()) REQUIRE(weakly_separated(a, b));
      }
    }
  }
}
