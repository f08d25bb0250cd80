#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intertwine/cyclic_subset.hpp"
#include "intertwine/quiver.hpp"

namespace intertwine {

using LabelPair = std::pair<CyclicSubset, CyclicSubset>;

// One orbit of label pairs under the simultaneous shift (a, b) -> (a+1, b+1).
// Both factors use cluster-tilting labels of A^{l-1}_m for their own m; the
// first factor enters as the opposite algebra, which on labels means its
// shift moves the combined label down instead of up.
struct StripObject {
  std::vector<LabelPair> reps;  // reps[j] is the minimal pair shifted j times
  CyclicSubset iota;            // k-subset of [n] with l pieces
  bool projective = false;      // the minimal pair is projective in both factors

  const LabelPair& pair() const { return reps.front(); }
};

struct StripArrow {
  std::size_t from;
  std::size_t to;
  std::string tag;
};

struct StripCategory {
  int n = 0, k = 0, l = 0;
  int d = 0;    // l - 1
  int m_a = 0;  // k - l + 1
  int m_b = 0;  // n - k - l + 1
  std::vector<StripObject> objects;  // sorted by iota
  std::vector<StripArrow> arrows;    // iota(to) is a cyclic v_i / h_i move of iota(from)

  std::optional<std::size_t> find(const CyclicSubset& iota) const;
  std::optional<std::size_t> find_pair(const LabelPair& p) const;
  std::vector<std::size_t> projective_objects() const;
};

// Throws InvalidArgument unless 2 <= l <= k <= n - l, and InconsistentLabels
// if the propagated labels clash, repeat across orbits, or are not l-ple
// intervals of size k.
StripCategory strip_category(int n, int k, int l);

// Some j with reps[j] of x and reps[j + shift] of y both defined and the hom
// criterion holding in both factors.
bool hom_window(const StripCategory& cat, std::size_t x, std::size_t y, int shift);

// X -> Y with X at its minimal pair and Y shifted `delta` times, when the hom
// criterion holds and no vertex Z placed at a level between 0 and delta
// (other than X at 0 and Y at delta) factors the map.
std::vector<std::pair<std::size_t, std::size_t>> strip_rule_arrows(
    const StripCategory& cat, const std::vector<std::size_t>& vertices, int delta);

// Wrap arrows from the per-factor pairs (projective of an injective label's
// vertex, projective label J + 1).
std::vector<std::pair<std::size_t, std::size_t>> wrap_arrows_kunneth(const StripCategory& cat);

// Tensor grid plus wrap arrows. Throws WrapRuleMismatch if the two wrap rules
// disagree.
LabeledQuiver gamma_quiver(int n, int k, int l);

// gamma_quiver for the tensor product of A^d_{m_a} (opposite) and A^d_{m_b},
// with vertices labeled by pairs of Auslander quiver vertices.
LabeledQuiver preprojective_factor_quiver(int m_a, int m_b, int d);

// The member I of C_k(standard slice) whose hat is {1, 3, ..., 2l-1}.
CyclicSubset apr_vertex(int n, int k, int l);

// Vertex I relabeled I + 1, arrows recomputed by the strip rule at levels 0
// and 1. Throws AprTargetMissing when I + 1 is not a strip object.
LabeledQuiver apr_mutate(int n, int k, int l);

}  // namespace intertwine
