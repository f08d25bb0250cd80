#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace intertwine {

inline constexpr int kMaxN = 31;

// A nonempty subset of [n] = {1, ..., n}, stored as its strictly increasing
// element list together with a bitmask (bit e-1 set for element e).
class CyclicSubset {
 public:
  // Elements may be given in any order; they are sorted. Throws on an empty
  // list, duplicates, or elements outside [1, n].
  CyclicSubset(int n, std::vector<int> elements);

  static CyclicSubset from_mask(int n, std::uint32_t mask);

  int n() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const noexcept { return elements_; }
  std::uint32_t mask() const noexcept { return mask_; }
  bool contains(int e) const noexcept {
    return e >= 1 && e <= n_ && (mask_ >> (e - 1)) & 1u;
  }

  // Compact label: digits run together when n <= 9 ("1356"), comma separated otherwise.
  std::string str() const;

  friend bool operator==(const CyclicSubset& a, const CyclicSubset& b) noexcept {
    return a.n_ == b.n_ && a.mask_ == b.mask_;
  }
  friend std::strong_ordering operator<=>(const CyclicSubset& a, const CyclicSubset& b) noexcept;

 private:
  int n_;
  std::vector<int> elements_;
  std::uint32_t mask_ = 0;
};

// Closed cyclic interval [first, last]; wraps n -> 1 when first > last.
struct Interval {
  int first;
  int last;

  int length(int n) const noexcept { return (last - first + n) % n + 1; }
  bool operator==(const Interval&) const = default;
};

// Maximal cyclic runs of a subset, ordered by the smallest element each run
// contains (so a run wrapping through n -> 1 comes first).
struct IntervalDecomposition {
  int n;
  std::vector<Interval> pieces;

  std::size_t count() const noexcept { return pieces.size(); }
  CyclicSubset to_subset() const;
};

IntervalDecomposition decompose(const CyclicSubset& s);

// Maximal runs in the linear order 1 < 2 < ... < n (no wrap-around).
std::vector<Interval> linear_pieces(const CyclicSubset& s);

// Left / right endpoints of the cyclic runs.
CyclicSubset hat(const CyclicSubset& s);
CyclicSubset check(const CyclicSubset& s);

// Elementwise shift by `by` modulo n, renormalized into [1, n].
CyclicSubset shift(const CyclicSubset& s, int by);

// Throws when s = [n].
CyclicSubset complement(const CyclicSubset& s);

enum class IndexVariant { Open, Cyclic };

// Open: consecutive gaps are at least 2. Cyclic: additionally the wrap-around
// gap, i.e. last + 2 <= first + n.
bool in_index_set(const CyclicSubset& t, IndexVariant variant);

// All k-subsets of [n] in lexicographic order.
std::vector<CyclicSubset> k_subsets(int n, int k);

// k-subsets of [n] with exactly l cyclic runs, lexicographic order.
std::vector<CyclicSubset> l_ple_intervals(int n, int k, int l);

// l-subsets of [n] in the open or cyclic index set, lexicographic order.
std::vector<CyclicSubset> index_set(int n, int l, IndexVariant variant);

// Re-embed the same element list into [n].
CyclicSubset with_ambient(const CyclicSubset& s, int n);

long long binomial(int n, int k);

}  // namespace intertwine
