#include "intertwine/cyclic_subset.hpp"

#include <algorithm>

#include "intertwine/error.hpp"

namespace intertwine {

CyclicSubset::CyclicSubset(int n, std::vector<int> elements)
    : n_(n), elements_(std::move(elements)) {
  if (n_ < 1 || n_ > kMaxN) {
    throw Error(ErrorCode::InvalidArgument,
                "ambient size must lie in [1, " + std::to_string(kMaxN) + "], got " +
                    std::to_string(n_));
  }
  if (elements_.empty()) throw Error(ErrorCode::InvalidArgument, "subset must be nonempty");
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const int e = elements_[i];
    if (e < 1 || e > n_) {
      throw Error(ErrorCode::InvalidArgument,
                  "element " + std::to_string(e) + " outside [1, " + std::to_string(n_) + "]");
    }
    if (i > 0 && elements_[i - 1] == e) {
      throw Error(ErrorCode::InvalidArgument, "duplicate element " + std::to_string(e));
    }
    mask_ |= 1u << (e - 1);
  }
}

CyclicSubset CyclicSubset::from_mask(int n, std::uint32_t mask) {
  std::vector<int> elements;
  for (int e = 1; e <= n; ++e) {
    if ((mask >> (e - 1)) & 1u) elements.push_back(e);
  }
  return CyclicSubset(n, std::move(elements));
}

std::string CyclicSubset::str() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (n_ > 9 && i > 0) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const CyclicSubset& a, const CyclicSubset& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(),
                                                b.elements_.begin(), b.elements_.end());
}

CyclicSubset IntervalDecomposition::to_subset() const {
  std::vector<int> elements;
  for (const Interval& piece : pieces) {
    const int len = piece.length(n);
    for (int j = 0; j < len; ++j) elements.push_back((piece.first - 1 + j) % n + 1);
  }
  return CyclicSubset(n, std::move(elements));
}

IntervalDecomposition decompose(const CyclicSubset& s) {
  const int n = s.n();
  if (s.size() == n) return {n, {{1, n}}};

  std::vector<Interval> pieces;
  for (int e : s.elements()) {
    const int prev = e == 1 ? n : e - 1;
    if (s.contains(prev)) continue;
    int last = e;
    while (s.contains(last % n + 1)) last = last % n + 1;
    pieces.push_back({e, last});
  }
  auto smallest = [](const Interval& piece) { return piece.first <= piece.last ? piece.first : 1; };
  std::sort(pieces.begin(), pieces.end(),
            [&](const Interval& a, const Interval& b) { return smallest(a) < smallest(b); });
  return {n, std::move(pieces)};
}

std::vector<Interval> linear_pieces(const CyclicSubset& s) {
  std::vector<Interval> pieces;
  for (int e : s.elements()) {
    if (!pieces.empty() && pieces.back().last == e - 1) {
      pieces.back().last = e;
    } else {
      pieces.push_back({e, e});
    }
  }
  return pieces;
}

CyclicSubset hat(const CyclicSubset& s) {
  std::vector<int> starts;
  for (const Interval& piece : decompose(s).pieces) starts.push_back(piece.first);
  return CyclicSubset(s.n(), std::move(starts));
}

CyclicSubset check(const CyclicSubset& s) {
  std::vector<int> ends;
  for (const Interval& piece : decompose(s).pieces) ends.push_back(piece.last);
  return CyclicSubset(s.n(), std::move(ends));
}

CyclicSubset shift(const CyclicSubset& s, int by) {
  const int n = s.n();
  std::vector<int> moved;
  moved.reserve(s.elements().size());
  for (int e : s.elements()) moved.push_back((((e - 1 + by) % n) + n) % n + 1);
  return CyclicSubset(n, std::move(moved));
}

CyclicSubset complement(const CyclicSubset& s) {
  const std::uint32_t full = (1u << s.n()) - 1u;
  if (s.mask() == full) throw Error(ErrorCode::InvalidArgument, "complement of [n] is empty");
  return CyclicSubset::from_mask(s.n(), full & ~s.mask());
}

bool in_index_set(const CyclicSubset& t, IndexVariant variant) {
  const auto& e = t.elements();
  for (std::size_t x = 0; x + 1 < e.size(); ++x) {
    if (e[x + 1] < e[x] + 2) return false;
  }
  if (variant == IndexVariant::Cyclic && e.back() + 2 > e.front() + t.n()) return false;
  return true;
}

namespace {

template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    fn(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

std::vector<CyclicSubset> k_subsets(int n, int k) {
  std::vector<CyclicSubset> out;
  if (k < 1) return out;
  for_each_combination(n, k, [&](const std::vector<int>& c) { out.emplace_back(n, c); });
  return out;
}

std::vector<CyclicSubset> l_ple_intervals(int n, int k, int l) {
  std::vector<CyclicSubset> out;
  for (CyclicSubset& s : k_subsets(n, k)) {
    if (decompose(s).count() == static_cast<std::size_t>(l)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<CyclicSubset> index_set(int n, int l, IndexVariant variant) {
  std::vector<CyclicSubset> out;
  for (CyclicSubset& s : k_subsets(n, l)) {
    if (in_index_set(s, variant)) out.push_back(std::move(s));
  }
  return out;
}

CyclicSubset with_ambient(const CyclicSubset& s, int n) { return CyclicSubset(n, s.elements()); }

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace intertwine
