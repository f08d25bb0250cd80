#include "intertwine/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include "intertwine/error.hpp"
#include "intertwine/intertwining.hpp"
#include "intertwine/strip.hpp"

namespace intertwine {

namespace {

using Bits = std::uint64_t;

Bits bit(int i) { return Bits{1} << i; }

void bron_kerbosch(Bits r, Bits p, Bits x, const std::vector<Bits>& nbr, std::vector<Bits>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  int best = -1;
  for (Bits px = p | x; px != 0; px &= px - 1) {
    const int u = std::countr_zero(px);
    const int c = std::popcount(p & nbr[static_cast<std::size_t>(u)]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (Bits cand = p & ~nbr[static_cast<std::size_t>(pivot)]; cand != 0; cand &= cand - 1) {
    const int v = std::countr_zero(cand);
    const Bits nv = nbr[static_cast<std::size_t>(v)];
    bron_kerbosch(r | bit(v), p & nv, x & nv, nbr, out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

int guard(int atoms, int requested, int fallback, const std::string& what) {
  const int limit = std::min(requested > 0 ? requested : fallback, kHardAtomLimit);
  if (atoms > limit) {
    throw Error(ErrorCode::GuardViolation, what + " has " + std::to_string(atoms) +
                                               " atoms, above the limit of " + std::to_string(limit));
  }
  return limit;
}

std::vector<std::uint32_t> rotation_key(const Collection& c) {
  std::vector<std::uint32_t> best;
  for (int r = 0; r < c.n(); ++r) {
    std::vector<std::uint32_t> key;
    for (const CyclicSubset& m : c.members()) key.push_back(shift(m, r).mask());
    std::sort(key.begin(), key.end());
    if (r == 0 || key < best) best = key;
  }
  return best;
}

std::vector<Collection> families_to_collections(const std::vector<CyclicSubset>& atoms,
                                                const std::vector<std::vector<bool>>& ok, int n, int k,
                                                int l, const EnumOptions& opts) {
  std::vector<Collection> out;
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& family : maximal_compatible_families(static_cast<int>(atoms.size()), ok, opts.workers)) {
    std::vector<CyclicSubset> members;
    for (int i : family) members.push_back(atoms[static_cast<std::size_t>(i)]);
    Collection c(n, k, l, std::move(members));
    if (opts.up_to_rotation && !seen.insert(rotation_key(c)).second) continue;
    out.push_back(std::move(c));
  }
  return out;
}

void record(PropertyResult& p, bool ok, const std::string& what) {
  ++p.checked;
  if (ok) return;
  p.passed = false;
  if (p.failures++ == 0) p.first_failure = what;
}

std::string params(int n, int k, int l) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")";
}

}  // namespace

std::vector<std::vector<int>> maximal_compatible_families(
    int atoms, const std::vector<std::vector<bool>>& compatible, int workers) {
  if (atoms > kHardAtomLimit) throw Error(ErrorCode::GuardViolation, "more than 64 atoms");
  std::vector<Bits> nbr(static_cast<std::size_t>(atoms), 0);
  for (int i = 0; i < atoms; ++i) {
    for (int j = 0; j < atoms; ++j) {
      if (i != j && compatible[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        nbr[static_cast<std::size_t>(i)] |= bit(j);
      }
    }
  }
  std::vector<Bits> found;
  if (atoms > 0) {
    // Split the search at the top level so branches can run independently.
    std::vector<std::tuple<Bits, Bits, Bits>> branches;
    Bits p = atoms == 64 ? ~Bits{0} : bit(atoms) - 1;
    Bits x = 0;
    for (int v = 0; v < atoms; ++v) {
      const Bits nv = nbr[static_cast<std::size_t>(v)];
      branches.emplace_back(bit(v), p & nv, x & nv);
      p &= ~bit(v);
      x |= bit(v);
    }
    std::vector<std::vector<Bits>> results(branches.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t b = next++; b < branches.size(); b = next++) {
        const auto& [r, bp, bx] = branches[b];
        bron_kerbosch(r, bp, bx, nbr, results[b]);
      }
    };
    const int threads = std::max(1, std::min(workers, static_cast<int>(branches.size())));
    if (threads == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    for (auto& r : results) found.insert(found.end(), r.begin(), r.end());
  }
  std::vector<std::vector<int>> out;
  out.reserve(found.size());
  for (Bits r : found) {
    std::vector<int> idx;
    for (; r != 0; r &= r - 1) idx.push_back(std::countr_zero(r));
    out.push_back(std::move(idx));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Collection> enum_maximal_nonintertwining(int n, int l, const EnumOptions& opts) {
  if (l < 2 || n < 2 * l || n > kMaxN) throw Error(ErrorCode::InvalidArgument, "needs l >= 2 and n >= 2l");
  const auto atoms = index_set(n, l, IndexVariant::Cyclic);
  guard(static_cast<int>(atoms.size()), opts.max_atoms, kDefaultIndexAtoms, "cyclic index set");
  std::vector<std::vector<bool>> ok(atoms.size(), std::vector<bool>(atoms.size()));
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = 0; j < atoms.size(); ++j) ok[i][j] = !intertwines_either(atoms[i], atoms[j]);
  }
  return families_to_collections(atoms, ok, n, l, l, opts);
}

OpenQuestionReport enum_maximal_non_l_intertwining(int n, int k, int l, const EnumOptions& opts,
                                                   std::size_t maximum_cap) {
  if (!(2 <= l && l <= k && k <= n - l) || n > kMaxN) {
    throw Error(ErrorCode::InvalidArgument, "needs 2 <= l <= k <= n - l");
  }
  const auto atoms = l_ple_intervals(n, k, l);
  guard(static_cast<int>(atoms.size()), opts.max_atoms, kDefaultSubsAtoms, "Subs(n,k,l)");
  std::vector<std::vector<bool>> ok(atoms.size(), std::vector<bool>(atoms.size()));
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      ok[i][j] = ok[j][i] = !pair_l_intertwines(atoms[i], atoms[j], l);
    }
  }
  const auto all = families_to_collections(atoms, ok, n, k, l, opts);

  OpenQuestionReport rep{n, k, l, static_cast<int>(atoms.size()), static_cast<long long>(all.size()), 0,
                         binomial(k - 1, l - 1) * binomial(n - k - 1, l - 1), {}, {}, false};
  std::map<int, std::size_t> bucket;
  for (const Collection& c : all) {
    const int size = static_cast<int>(c.size());
    auto it = bucket.find(size);
    if (it == bucket.end()) {
      bucket.emplace(size, rep.histogram.size());
      rep.histogram.push_back({size, 1, c});
    } else {
      ++rep.histogram[it->second].count;
    }
    rep.max_size = std::max(rep.max_size, size);
  }
  std::sort(rep.histogram.begin(), rep.histogram.end(),
            [](const SizeBucket& a, const SizeBucket& b) { return a.size < b.size; });
  for (const Collection& c : all) {
    if (static_cast<int>(c.size()) != rep.max_size) continue;
    if (rep.maximum.size() >= maximum_cap) {
      rep.maximum_truncated = true;
      break;
    }
    rep.maximum.push_back(c);
  }
  return rep;
}

bool is_inclusion_maximal(const Collection& c) {
  for (const CyclicSubset& s : l_ple_intervals(c.n(), c.k(), c.l())) {
    if (!c.contains(s) && !first_conflict(c, s)) return false;
  }
  return true;
}

SliceCensus slice_census(int n, int l, const EnumOptions& opts) {
  SliceCensus out;
  for (Collection& c : enum_maximal_nonintertwining(n, l, opts)) {
    bool slice = false;
    if (static_cast<long long>(c.size()) == binomial(n - l - 1, l - 1)) slice = is_slice(c).has_value();
    (slice ? out.slices : out.non_slices).push_back(std::move(c));
  }
  return out;
}

bool CrossValidateReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

CrossValidateReport cross_validate(const CrossValidateOptions& opts) {
  auto named = [](const char* name) {
    PropertyResult p;
    p.name = name;
    return p;
  };
  PropertyResult endpoint = named("endpoint_criterion");
  PropertyResult psi_route = named("psi_vs_filtration");
  PropertyResult wraps = named("wrap_rules");
  PropertyResult level0 = named("tensor_vs_strip_shift0");

  for (int l : opts.ls) {
    for (int n = std::max(opts.n_min, 2 * l); n <= opts.n_max; ++n) {
      std::vector<Collection> slices;
      if (static_cast<int>(index_set(n, l, IndexVariant::Cyclic).size()) <= kDefaultIndexAtoms) {
        slices = slice_census(n, l).slices;
      } else {
        slices.push_back(standard_slice(n, l));
      }
      for (int k = l; k <= n - l; ++k) {
        const auto xs = l_ple_intervals(n, k, l);
        for (const auto& a : xs) {
          for (const auto& b : xs) {
            record(endpoint, l_intertwines_fast(a, b) == l_intertwines(a, b, l),
                   a.str() + " vs " + b.str() + " " + params(n, k, l));
          }
        }

        for (const Collection& t : slices) {
          bool ok = false;
          try {
            ok = construct_ck_via_psi(t, k, opts.phi_fn) == construct_ck(t, k);
          } catch (const Error&) {
            ok = false;
          }
          std::string name;
          for (const auto& m : t.members()) name += (name.empty() ? "" : ",") + m.str();
          record(psi_route, ok, "slice {" + name + "} " + params(n, k, l));
        }

        try {
          const StripCategory cat = strip_category(n, k, l);
          const auto verts = cat.projective_objects();
          record(wraps, wrap_arrows_kunneth(cat) == strip_rule_arrows(cat, verts, 1), params(n, k, l));
          const LabeledQuiver grid = tensor_quiver(n, k, l);
          const auto arrows = strip_rule_arrows(cat, verts, 0);
          bool same = arrows.size() == grid.arrows.size();
          for (const auto& [x, y] : arrows) {
            same = same && grid.has_arrow(Vertex(cat.objects[x].iota), Vertex(cat.objects[y].iota));
          }
          record(level0, same, params(n, k, l));
        } catch (const Error& e) {
          record(wraps, false, params(n, k, l) + ": " + e.what());
          record(level0, false, params(n, k, l) + ": " + e.what());
        }
      }
    }
  }
  return CrossValidateReport{{endpoint, psi_route, wraps, level0}};
}

}  // namespace intertwine
