#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "intertwine/cyclic_subset.hpp"

namespace intertwine {

// Strict alternation a_1 < b_1 < a_2 < ... < a_l < b_l in the linear order of
// the stored (ascending) element lists. Throws SizeMismatch on unequal sizes.
bool intertwines(const CyclicSubset& a, const CyclicSubset& b);

// a intertwines b or b intertwines a.
bool intertwines_either(const CyclicSubset& a, const CyclicSubset& b);

// Some common rotation of both subsets makes intertwines() hold. Exploratory
// only; collection validity never uses it.
bool intertwines_cyclic(const CyclicSubset& a, const CyclicSubset& b);

// Brute force: l-subsets a' of a\b and b' of b\a that intertwine in either order.
bool l_intertwines(const CyclicSubset& a, const CyclicSubset& b, int l);

// The witness (a', b') found by the brute-force search, if any.
std::optional<std::pair<std::vector<int>, std::vector<int>>> l_intertwining_witness(
    const CyclicSubset& a, const CyclicSubset& b, int l);

// Endpoint criterion for two l-ple intervals of equal size: hats intertwine and
// checks intertwine. Throws Precondition when sizes or run counts differ.
bool l_intertwines_fast(const CyclicSubset& a, const CyclicSubset& b);

// No cyclically ordered s < t < u < v with s, u in a\b and t, v in b\a.
bool weakly_separated(const CyclicSubset& a, const CyclicSubset& b);

// Dispatch used by collection checks: the endpoint criterion when both subsets
// are l-ple intervals of equal size, brute force otherwise.
bool pair_l_intertwines(const CyclicSubset& a, const CyclicSubset& b, int l);

}  // namespace intertwine
