#include "intertwine/collection.hpp"

#include <algorithm>
#include <string>

#include "intertwine/error.hpp"
#include "intertwine/intertwining.hpp"

namespace intertwine {

Collection::Collection(int n, int k, int l, std::vector<CyclicSubset> members)
    : n_(n), k_(k), l_(l), members_(std::move(members)) {
  if (!(2 <= l_ && l_ <= k_ && k_ <= n_)) {
    throw Error(ErrorCode::InvalidArgument,
                "collection parameters need 2 <= l <= k <= n, got n=" + std::to_string(n_) +
                    " k=" + std::to_string(k_) + " l=" + std::to_string(l_));
  }
  for (const CyclicSubset& m : members_) {
    if (m.n() != n_ || m.size() != k_) {
      throw Error(ErrorCode::InvalidArgument,
                  "member " + m.str() + " is not a " + std::to_string(k_) + "-subset of [" +
                      std::to_string(n_) + "]",
                  {m.elements()});
    }
  }
  std::sort(members_.begin(), members_.end());
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate member " + dup->str(), {dup->elements()});
  }
}

bool Collection::contains(const CyclicSubset& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

Collection Collection::exchanged(const CyclicSubset& out, const CyclicSubset& in) const {
  std::vector<CyclicSubset> next;
  next.reserve(members_.size());
  for (const CyclicSubset& m : members_) {
    if (m != out) next.push_back(m);
  }
  next.push_back(in);
  return Collection(n_, k_, l_, std::move(next));
}

std::optional<std::pair<CyclicSubset, CyclicSubset>> find_intertwining_pair(const Collection& c) {
  const auto& m = c.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (pair_l_intertwines(m[i], m[j], c.l())) return std::make_pair(m[i], m[j]);
    }
  }
  return std::nullopt;
}

bool is_valid_collection(const Collection& c) { return !find_intertwining_pair(c).has_value(); }

std::optional<CyclicSubset> first_conflict(const Collection& c, const CyclicSubset& candidate) {
  for (const CyclicSubset& m : c.members()) {
    if (m != candidate && pair_l_intertwines(m, candidate, c.l())) return m;
  }
  return std::nullopt;
}

}  // namespace intertwine
