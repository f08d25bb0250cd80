#include "intertwine/intertwining.hpp"

#include <span>
#include <string>

#include "intertwine/error.hpp"

namespace intertwine {

namespace {

bool alternates(std::span<const int> a, std::span<const int> b) {
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (!(a[t] < b[t])) return false;
    if (t + 1 < a.size() && !(b[t] < a[t + 1])) return false;
  }
  return true;
}

std::vector<int> difference(const CyclicSubset& a, const CyclicSubset& b) {
  std::vector<int> out;
  for (int e : a.elements()) {
    if (!b.contains(e)) out.push_back(e);
  }
  return out;
}

// Calls fn(chosen) for every l-combination of `pool` (ascending); stops as soon
// as fn returns true.
template <typename Fn>
bool any_combination(const std::vector<int>& pool, int l, Fn&& fn) {
  const int m = static_cast<int>(pool.size());
  if (l > m) return false;
  std::vector<int> idx(static_cast<std::size_t>(l));
  std::vector<int> chosen(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    for (int i = 0; i < l; ++i) {
      chosen[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    if (fn(chosen)) return true;
    int i = l - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - l + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < l; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

bool cyclically_ordered(int s, int t, int u, int v) {
  // A 4-cycle of distinct values is a rotation of its sorted order exactly
  // when it has a single descent.
  const int descents = (s > t) + (t > u) + (u > v) + (v > s);
  return descents == 1;
}

}  // namespace

bool intertwines(const CyclicSubset& a, const CyclicSubset& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::SizeMismatch,
                "intertwining needs equal sizes, got " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()),
                {a.elements(), b.elements()});
  }
  return alternates(a.elements(), b.elements());
}

bool intertwines_either(const CyclicSubset& a, const CyclicSubset& b) {
  return intertwines(a, b) || intertwines(b, a);
}

bool intertwines_cyclic(const CyclicSubset& a, const CyclicSubset& b) {
  for (int r = 0; r < a.n(); ++r) {
    if (intertwines(shift(a, r), shift(b, r))) return true;
  }
  return false;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> l_intertwining_witness(
    const CyclicSubset& a, const CyclicSubset& b, int l) {
  if (l < 2) throw Error(ErrorCode::Precondition, "l-intertwining needs l >= 2");
  if (a.size() < l || b.size() < l) {
    throw Error(ErrorCode::Precondition, "both subsets need at least l elements",
                {a.elements(), b.elements()});
  }
  const std::vector<int> only_a = difference(a, b);
  const std::vector<int> only_b = difference(b, a);
  std::optional<std::pair<std::vector<int>, std::vector<int>>> found;
  any_combination(only_a, l, [&](const std::vector<int>& pa) {
    return any_combination(only_b, l, [&](const std::vector<int>& pb) {
      if (alternates(pa, pb) || alternates(pb, pa)) {
        found.emplace(pa, pb);
        return true;
      }
      return false;
    });
  });
  return found;
}

bool l_intertwines(const CyclicSubset& a, const CyclicSubset& b, int l) {
  return l_intertwining_witness(a, b, l).has_value();
}

bool l_intertwines_fast(const CyclicSubset& a, const CyclicSubset& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::Precondition, "endpoint criterion needs equal sizes",
                {a.elements(), b.elements()});
  }
  const std::size_t runs = decompose(a).count();
  if (decompose(b).count() != runs) {
    throw Error(ErrorCode::Precondition, "endpoint criterion needs equal run counts",
                {a.elements(), b.elements()});
  }
  return intertwines_either(hat(a), hat(b)) && intertwines_either(check(a), check(b));
}

bool weakly_separated(const CyclicSubset& a, const CyclicSubset& b) {
  const std::vector<int> only_a = difference(a, b);
  const std::vector<int> only_b = difference(b, a);
  for (int s : only_a) {
    for (int u : only_a) {
      if (s == u) continue;
      for (int t : only_b) {
        for (int v : only_b) {
          if (t != v && cyclically_ordered(s, t, u, v)) return false;
        }
      }
    }
  }
  return true;
}

bool pair_l_intertwines(const CyclicSubset& a, const CyclicSubset& b, int l) {
  const auto want = static_cast<std::size_t>(l);
  if (a.size() == b.size() && decompose(a).count() == want && decompose(b).count() == want) {
    return l_intertwines_fast(a, b);
  }
  return l_intertwines(a, b, l);
}

}  // namespace intertwine
