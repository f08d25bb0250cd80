#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "intertwine/cyclic_subset.hpp"

namespace intertwine {

// A set of distinct k-subsets of [n] together with the intertwining order l.
// Members are kept sorted lexicographically.
class Collection {
 public:
  // Throws InvalidArgument unless 2 <= l <= k <= n, every member lives in [n]
  // with size k, and members are distinct.
  Collection(int n, int k, int l, std::vector<CyclicSubset> members);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  int l() const noexcept { return l_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<CyclicSubset>& members() const noexcept { return members_; }

  bool contains(const CyclicSubset& s) const;

  // Copy with `out` removed and `in` inserted.
  Collection exchanged(const CyclicSubset& out, const CyclicSubset& in) const;

  bool operator==(const Collection&) const = default;

 private:
  int n_;
  int k_;
  int l_;
  std::vector<CyclicSubset> members_;
};

// First (lexicographic) pair of members that l-intertwine, if any.
std::optional<std::pair<CyclicSubset, CyclicSubset>> find_intertwining_pair(const Collection& c);

bool is_valid_collection(const Collection& c);

// First member of `c` that l-intertwines `candidate`, if any.
std::optional<CyclicSubset> first_conflict(const Collection& c, const CyclicSubset& candidate);

}  // namespace intertwine
