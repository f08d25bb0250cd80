#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "intertwine/collection.hpp"
#include "intertwine/cyclic_subset.hpp"

namespace testing_helpers {

using intertwine::Collection;
using intertwine::CyclicSubset;

// "1356" -> {1,3,5,6}; only for n <= 9.
inline CyclicSubset sub(int n, const std::string& digits) {
  std::vector<int> v;
  for (char c : digits) v.push_back(c - '0');
  return CyclicSubset(n, v);
}

inline Collection coll(int n, int k, int l, std::initializer_list<const char*> items) {
  std::vector<CyclicSubset> m;
  for (const char* s : items) m.push_back(sub(n, s));
  return Collection(n, k, l, m);
}

inline std::set<std::string> labels(const Collection& c) {
  std::set<std::string> out;
  for (const auto& m : c.members()) out.insert(m.str());
  return out;
}

}  // namespace testing_helpers
