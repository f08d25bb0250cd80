#include "intertwine/slice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "intertwine/error.hpp"
#include "intertwine/intertwining.hpp"

namespace intertwine {

namespace {

void extend_compositions(int remaining, int parts, Composition& prefix,
                         std::vector<Composition>& out) {
  if (parts == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 0; first <= remaining; ++first) {
    prefix.push_back(first);
    extend_compositions(remaining - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

// Elements of t listed in the cyclic order starting at base.
std::vector<int> rotated(const CyclicSubset& t, int base) {
  std::vector<int> out;
  for (int e : t.elements()) {
    if (e >= base) out.push_back(e);
  }
  for (int e : t.elements()) {
    if (e < base) out.push_back(e);
  }
  return out;
}

std::string render(const Composition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

void require_slice_parameters(const Collection& slice, int k) {
  const int n = slice.n();
  const int l = slice.l();
  if (slice.k() != l) {
    throw Error(ErrorCode::InvalidArgument, "a slice holds l-subsets (k must equal l)");
  }
  if (k < l || k > n - l) {
    throw Error(ErrorCode::InvalidArgument, "construction needs l <= k <= n - l, got k=" +
                                                std::to_string(k));
  }
}

SliceCertificate require_slice(const Collection& slice) {
  auto cert = is_slice(slice);
  if (!cert) throw Error(ErrorCode::NotASlice, "collection is not a slice");
  return *cert;
}

Collection construct_by_endpoint(const Collection& slice, int k, bool use_hat) {
  require_slice_parameters(slice, k);
  require_slice(slice);
  std::vector<CyclicSubset> members;
  for (CyclicSubset& s : l_ple_intervals(slice.n(), k, slice.l())) {
    const CyclicSubset endpoints = use_hat ? hat(s) : check(s);
    if (slice.contains(endpoints)) members.push_back(std::move(s));
  }
  return Collection(slice.n(), k, slice.l(), std::move(members));
}

}  // namespace

std::vector<Composition> compositions(int total, int parts) {
  std::vector<Composition> out;
  if (parts < 1 || total < 0) return out;
  Composition prefix;
  extend_compositions(total, parts, prefix, out);
  return out;
}

Composition phi(const CyclicSubset& t, int base) {
  const int n = t.n();
  if (base < 1 || base > n) {
    throw Error(ErrorCode::InvalidArgument, "base point " + std::to_string(base) + " outside [n]");
  }
  if (!in_index_set(t, IndexVariant::Cyclic)) {
    throw Error(ErrorCode::NotInIndexSet, t.str() + " is not in the cyclic index set",
                {t.elements()});
  }
  const std::vector<int> order = rotated(t, base);
  const std::size_t l = order.size();
  Composition p(l);
  for (std::size_t j = 0; j < l; ++j) {
    const int diff = order[(j + 1) % l] - order[j] - 2;
    p[j] = ((diff % n) + n) % n;
  }
  return p;
}

std::optional<SliceCertificate> is_slice(const Collection& t) {
  const int n = t.n();
  const int l = t.l();
  if (t.k() != l) throw Error(ErrorCode::InvalidArgument, "a slice holds l-subsets (k must equal l)");
  for (const CyclicSubset& m : t.members()) {
    if (!in_index_set(m, IndexVariant::Cyclic)) {
      throw Error(ErrorCode::NotInIndexSet, "member " + m.str() + " is not in the cyclic index set",
                  {m.elements()});
    }
  }
  const long long expected = binomial(n - l - 1, l - 1);
  if (static_cast<long long>(t.size()) != expected) {
    throw Error(ErrorCode::WrongSize, "slice needs " + std::to_string(expected) +
                                          " members, got " + std::to_string(t.size()));
  }
  const auto& m = t.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (intertwines_either(m[i], m[j])) {
        throw Error(ErrorCode::IntertwiningPair, m[i].str() + " intertwines " + m[j].str(),
                    {m[i].elements(), m[j].elements()});
      }
    }
  }

  const std::vector<Composition> target = compositions(n - 2 * l, l);
  for (int base = 1; base <= n; ++base) {
    std::vector<Composition> image;
    image.reserve(m.size());
    for (const CyclicSubset& member : m) image.push_back(phi(member, base));
    std::sort(image.begin(), image.end());
    if (image == target) return SliceCertificate{base, std::move(image)};
  }
  return std::nullopt;
}

std::vector<PhiCollision> phi_collisions(const Collection& t, int base) {
  std::vector<PhiCollision> out;
  const auto& m = t.members();
  std::vector<Composition> values;
  values.reserve(m.size());
  for (const CyclicSubset& member : m) values.push_back(phi(member, base));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (values[i] == values[j]) out.push_back({base, m[i], m[j], values[i]});
    }
  }
  return out;
}

Collection standard_slice(int n, int l) {
  if (l < 2 || 2 * l > n) {
    throw Error(ErrorCode::InvalidArgument, "standard slice needs l >= 2 and n >= 2l");
  }
  std::vector<CyclicSubset> members;
  if (n - 3 >= l - 1) {
    for (const CyclicSubset& tail : index_set(n - 3, l - 1, IndexVariant::Open)) {
      std::vector<int> elements{1};
      for (int e : tail.elements()) elements.push_back(e + 2);
      members.emplace_back(n, std::move(elements));
    }
  }
  if (members.empty()) {
    // n = 2l: the open index set is empty only when l - 1 > 0 tuples do not fit,
    // which cannot happen for n >= 2l; kept as a guard.
    throw Error(ErrorCode::InvalidArgument, "standard slice is empty");
  }
  return Collection(n, l, l, std::move(members));
}

Collection construct_ck(const Collection& slice, int k) {
  return construct_by_endpoint(slice, k, true);
}

Collection construct_ck_prime(const Collection& slice, int k) {
  return construct_by_endpoint(slice, k, false);
}

CyclicSubset psi(const Composition& q, const Composition& r, const Collection& slice,
                 const SliceCertificate& cert, const PhiFn& phi_fn) {
  const int n = slice.n();
  const auto l = static_cast<std::size_t>(slice.l());
  if (q.size() != l || r.size() != l) {
    throw Error(ErrorCode::InvalidArgument, "q and r need l entries");
  }
  if (std::any_of(q.begin(), q.end(), [](int x) { return x < 0; }) ||
      std::any_of(r.begin(), r.end(), [](int x) { return x < 0; })) {
    throw Error(ErrorCode::InvalidArgument, "q and r need nonnegative entries");
  }
  const int sum_q = std::accumulate(q.begin(), q.end(), 0);
  const int sum_r = std::accumulate(r.begin(), r.end(), 0);
  if (sum_q + sum_r != n - 2 * slice.l()) {
    throw Error(ErrorCode::InvalidArgument, "q and r must sum to n - 2l in total");
  }

  Composition p(l);
  for (std::size_t j = 0; j < l; ++j) p[j] = q[j] + r[j];

  const CyclicSubset* member = nullptr;
  for (const CyclicSubset& t : slice.members()) {
    if (phi_fn(t, cert.base_point) == p) {
      member = &t;
      break;
    }
  }
  if (member == nullptr) {
    throw Error(ErrorCode::NotInImage, render(p) + " is not in the phi-image of the slice");
  }

  const std::vector<int> t = rotated(*member, cert.base_point);
  for (std::size_t j = 0; j < l; ++j) {
    const int expect = ((t[j] - 1 + p[j] + 2) % n) + 1;
    if (t[(j + 1) % l] != expect) {
      throw Error(ErrorCode::NotInImage,
                  "phi inversion of " + render(p) + " does not reconstruct " + member->str(),
                  {member->elements()});
    }
  }

  std::vector<int> elements;
  for (std::size_t j = 0; j < l; ++j) {
    for (int step = 0; step <= q[j]; ++step) elements.push_back((t[j] - 1 + step) % n + 1);
  }
  return CyclicSubset(n, std::move(elements));
}

Collection construct_ck_via_psi(const Collection& slice, int k, const PhiFn& phi_fn) {
  require_slice_parameters(slice, k);
  const SliceCertificate cert = require_slice(slice);
  const int n = slice.n();
  const int l = slice.l();
  std::vector<CyclicSubset> members;
  for (const Composition& q : compositions(k - l, l)) {
    for (const Composition& r : compositions(n - k - l, l)) {
      members.push_back(psi(q, r, slice, cert, phi_fn));
    }
  }
  return Collection(n, k, l, std::move(members));
}

}  // namespace intertwine
