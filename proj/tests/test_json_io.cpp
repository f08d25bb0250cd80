#include <doctest.h>

#include <algorithm>
#include <random>

#include "intertwine/api.hpp"
#include "intertwine/dot.hpp"
#include "intertwine/json_io.hpp"
#include "intertwine/slice.hpp"

using namespace intertwine;
using json = nlohmann::json;

TEST_CASE("collections survive a JSON round trip") {
  for (int n = 4; n <= 10; ++n) {
    for (int l = 2; 2 * l <= n; ++l) {
      const Collection t = standard_slice(n, l);
      for (int k = l; k <= n - l; ++k) {
        const Collection c = construct_ck(t, k);
        const json j = io::collection_json(c);
        CHECK(io::collection_from_json(j) == c);
        CHECK(io::collection_from_json(json::parse(j.dump())) == c);
        for (const json& m : j["members"]) CHECK(std::is_sorted(m.begin(), m.end()));
      }
    }
  }
}

TEST_CASE("subset parsing") {
  CHECK(io::subset_from_json(json{6, 1, 3}, 8) == CyclicSubset(8, {1, 3, 6}));
  CHECK(io::subset_from_json(json{{"n", 8}, {"elements", {1, 3}}}, 8) == CyclicSubset(8, {1, 3}));
  CHECK(io::subset_json(CyclicSubset(8, {5, 2})) == json{{"n", 8}, {"elements", {2, 5}}});

  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("no error");
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of([] { io::subset_from_json(json{1, "x"}, 8); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { io::subset_from_json(json("1356"), 8); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { io::subset_from_json(json{{"n", 9}, {"elements", {1}}}, 8); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { io::subset_from_json(json{0, 3}, 8); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { io::collection_from_json(json{{"n", 8}, {"k", 4}}); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { io::collection_from_json(json{{"n", 8}, {"k", "4"}, {"l", 3}, {"members", json::array()}}); }) ==
        ErrorCode::MalformedInput);
  CHECK(code_of([] { io::collection_from_json(json::array()); }) == ErrorCode::MalformedInput);
}

TEST_CASE("error documents") {
  const Error e(ErrorCode::IntertwiningPair, "x", {{1, 3, 5, 6}, {2, 4, 6, 7}});
  const json j = io::error_json(e);
  CHECK(j["ok"] == false);
  CHECK(j["error"] == "intertwining_pair");
  CHECK(j["detail"] == "x");
  CHECK(j["offending"] == json{{1, 3, 5, 6}, {2, 4, 6, 7}});
  CHECK_FALSE(io::error_json(Error(ErrorCode::NotASlice, "y")).contains("offending"));

  CHECK(api::run([]() -> json { throw Error(ErrorCode::MalformedInput, "m"); }).status == 400);
  CHECK(api::run([]() -> json { throw Error(ErrorCode::GuardViolation, "g"); }).status == 422);
  CHECK(api::run([]() -> json { return json::parse("{"); }).status == 400);
  CHECK(api::run([] { return json{{"a", 1}}; }).body == "{\n  \"a\": 1\n}\n");
}

TEST_CASE("quiver JSON uses arrays for single labels and pairs for product labels") {
  const json a = api::quiver("A", {{"m", 3}, {"d", 2}});
  CHECK(a["vertices"][0].is_array());
  CHECK(a["vertices"][0][0].is_number_integer());
  const json pi = api::quiver("pi", {{"ma", 2}, {"mb", 2}, {"d", 2}});
  CHECK(pi["vertices"][0].size() == 2);
  CHECK(pi["vertices"][0][0].is_array());
  for (const json& r : a["relations"]) {
    if (r["kind"] == "zero") CHECK(r.contains("path"));
    else CHECK(r["paths"].size() == 2);
  }
}

TEST_CASE("DOT output does not depend on input order") {
  LabeledQuiver q = tensor_quiver(9, 4, 3);
  const std::string reference = to_dot(q);
  CHECK(reference == to_dot(tensor_quiver(9, 4, 3)));
  std::mt19937 rng(7);
  for (int round = 0; round < 5; ++round) {
    std::shuffle(q.vertices.begin(), q.vertices.end(), rng);
    std::shuffle(q.arrows.begin(), q.arrows.end(), rng);
    CHECK(to_dot(q) == reference);
  }
  CHECK(reference.rfind("digraph", 0) == 0);
  // Vertex lines appear in lexicographic order.
  std::vector<std::string> names;
  for (const Vertex& v : q.vertices) names.push_back(v.str());
  std::sort(names.begin(), names.end());
  std::size_t pos = 0;
  for (const std::string& s : names) {
    const std::size_t at = reference.find("  \"" + s + "\";", pos);
    REQUIRE(at != std::string::npos);
    pos = at;
  }
}
