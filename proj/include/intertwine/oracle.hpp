#pragma once

#include <string>
#include <vector>

#include "intertwine/collection.hpp"
#include "intertwine/slice.hpp"

namespace intertwine {

struct EnumOptions {
  int max_atoms = 0;            // 0 keeps the per-search default guard
  int workers = 1;              // threads for the top-level branches
  bool up_to_rotation = false;  // keep one collection per rotation class
};

inline constexpr int kDefaultIndexAtoms = 40;
inline constexpr int kDefaultSubsAtoms = 60;
inline constexpr int kHardAtomLimit = 64;

// Inclusion-maximal families of pairwise compatible atoms, as sorted index
// lists, sorted lexicographically. compatible(i, j) must be symmetric.
std::vector<std::vector<int>> maximal_compatible_families(
    int atoms, const std::vector<std::vector<bool>>& compatible, int workers = 1);

// Maximal pairwise non-intertwining collections inside the cyclic index set of
// l-subsets of [n]. Throws GuardViolation when the index set is too large.
std::vector<Collection> enum_maximal_nonintertwining(int n, int l, const EnumOptions& opts = {});

struct SizeBucket {
  int size;
  long long count;
  Collection witness;
};

struct OpenQuestionReport {
  int n, k, l;
  int atoms;
  long long total;  // number of maximal collections
  int max_size;
  long long conjectured;  // binom(k-1, l-1) * binom(n-k-1, l-1)
  std::vector<SizeBucket> histogram;
  std::vector<Collection> maximum;  // every collection of maximum size, up to the cap
  bool maximum_truncated = false;
};

// Maximal non-l-intertwining collections inside the l-ple intervals of size k.
// Throws GuardViolation when there are too many atoms.
OpenQuestionReport enum_maximal_non_l_intertwining(int n, int k, int l, const EnumOptions& opts = {},
                                                   std::size_t maximum_cap = 10000);

// No l-ple interval of size k outside c is compatible with every member.
bool is_inclusion_maximal(const Collection& c);

struct SliceCensus {
  std::vector<Collection> slices;
  std::vector<Collection> non_slices;
};

SliceCensus slice_census(int n, int l, const EnumOptions& opts = {});

struct PropertyResult {
  std::string name;
  bool passed = true;
  long long checked = 0;
  long long failures = 0;
  std::string first_failure;
};

struct CrossValidateOptions {
  int n_min = 4;
  int n_max = 9;
  std::vector<int> ls{2, 3};
  PhiFn phi_fn = phi;
};

struct CrossValidateReport {
  std::vector<PropertyResult> properties;
  bool all_passed() const;
};

// Fast-versus-reference checks over the parameter grid: endpoint_criterion,
// psi_vs_filtration, wrap_rules, tensor_vs_strip_shift0.
CrossValidateReport cross_validate(const CrossValidateOptions& opts = {});

}  // namespace intertwine
