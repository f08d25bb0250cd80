#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "intertwine/collection.hpp"
#include "intertwine/cyclic_subset.hpp"

namespace intertwine {

using Composition = std::vector<int>;

// All weak compositions of `total` into `parts` nonnegative entries, in
// lexicographic order.
std::vector<Composition> compositions(int total, int parts);

// Gap deficits (t_2-t_1-2, ..., t_1-t_l-2) mod n, with the elements listed in
// the cyclic order starting at `base`. Throws NotInIndexSet unless t is in the
// cyclic index set.
Composition phi(const CyclicSubset& t, int base);

using PhiFn = std::function<Composition(const CyclicSubset&, int)>;

struct SliceCertificate {
  int base_point;
  std::vector<Composition> image;  // sorted

  bool operator==(const SliceCertificate&) const = default;
};

// Members of T (l-subsets, so T.k() == T.l()) are checked for cyclic
// index-set membership (NotInIndexSet), the expected count (WrongSize) and
// pairwise non-intertwining (IntertwiningPair). Returns the certificate for
// the least base point whose phi-image is every composition of n - 2l into l
// parts, or nothing when no base point works.
std::optional<SliceCertificate> is_slice(const Collection& t);

struct PhiCollision {
  int base_point;
  CyclicSubset first;
  CyclicSubset second;
  Composition value;
};

// Pairs of members sharing a phi value at `base`.
std::vector<PhiCollision> phi_collisions(const Collection& t, int base);

// {1, i_0+2, ..., i_{l-2}+2} over the open index set of (l-1)-tuples in [n-3].
Collection standard_slice(int n, int l);

// k-subsets with exactly l cyclic runs whose run starts (hat) or run ends
// (check) form a member of the slice. Throws NotASlice for non-slices and
// InvalidArgument unless l <= k <= n - l.
Collection construct_ck(const Collection& slice, int k);
Collection construct_ck_prime(const Collection& slice, int k);

// [t_1, t_1+q_1] u ... u [t_l, t_l+q_l] with (t_1, ..., t_l) the slice member
// whose phi value at the certificate's base point is q + r.
CyclicSubset psi(const Composition& q, const Composition& r, const Collection& slice,
                 const SliceCertificate& cert, const PhiFn& phi_fn = phi);

// construct_ck through psi over all legal (q, r) pairs.
Collection construct_ck_via_psi(const Collection& slice, int k, const PhiFn& phi_fn = phi);

}  // namespace intertwine
