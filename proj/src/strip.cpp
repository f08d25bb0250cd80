#include "intertwine/strip.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "intertwine/error.hpp"
#include "intertwine/slice.hpp"

namespace intertwine {

namespace {

std::optional<LabelPair> shifted(const LabelPair& p, int dir) {
  auto a = tau_label(p.first, dir);
  auto b = tau_label(p.second, dir);
  if (!a || !b) return std::nullopt;
  return LabelPair{*a, *b};
}

bool pair_hom(const LabelPair& x, const LabelPair& y) {
  return hom_nonzero(x.first, y.first) && hom_nonzero(x.second, y.second);
}

std::string pair_str(const LabelPair& p) { return "(" + p.first.str() + "," + p.second.str() + ")"; }

Composition reversed(Composition c) {
  std::reverse(c.begin(), c.end());
  return c;
}

// Label of a projective pair through the composition coordinates of the
// tensor grid.
CyclicSubset anchor(const LabelPair& p, const Collection& slice, int n_a, int n_b) {
  const Composition q = reversed(phi(with_ambient(p.first, n_a + 1), 1));
  const Composition r = phi(with_ambient(p.second, n_b + 1), 1);
  return psi(q, r, slice, SliceCertificate{1, {}});
}

// Per-factor wrap pairs (source projective, target projective).
std::vector<std::pair<CyclicSubset, CyclicSubset>> factor_wraps(int m, int d) {
  const int big = m + 2 * d;
  std::vector<std::pair<CyclicSubset, CyclicSubset>> out;
  for (const CyclicSubset& j : ct_labels(m, d)) {
    if (!is_injective_label(j)) continue;
    const CyclicSubset next = shift(j, 1);
    if (!in_index_set(next, IndexVariant::Open) || !is_projective_label(next)) continue;
    std::vector<int> head(j.elements().begin(), j.elements().end() - 1);
    const CyclicSubset vertex(std::max(big - 2, 1), head);
    out.emplace_back(projective_label_of(vertex, big), next);
  }
  return out;
}

struct Rep {
  std::size_t object;
  int level;
};

}  // namespace

std::optional<std::size_t> StripCategory::find(const CyclicSubset& iota) const {
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].iota == iota) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> StripCategory::find_pair(const LabelPair& p) const {
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (const LabelPair& r : objects[i].reps) {
      if (r == p) return i;
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> StripCategory::projective_objects() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].projective) out.push_back(i);
  }
  return out;
}

StripCategory strip_category(int n, int k, int l) {
  if (!(2 <= l && l <= k && k <= n - l)) {
    throw Error(ErrorCode::InvalidArgument, "strip needs 2 <= l <= k <= n - l");
  }
  StripCategory cat;
  cat.n = n;
  cat.k = k;
  cat.l = l;
  cat.d = l - 1;
  cat.m_a = k - l + 1;
  cat.m_b = n - k - l + 1;
  const int n_a = cat.m_a + 2 * cat.d;
  const int n_b = cat.m_b + 2 * cat.d;
  const auto labels_a = ct_labels(cat.m_a, cat.d);
  const auto labels_b = ct_labels(cat.m_b, cat.d);
  const Collection slice = standard_slice(n, l);

  std::map<LabelPair, CyclicSubset> iota;
  std::deque<LabelPair> queue;
  auto assign = [&](const LabelPair& p, const CyclicSubset& value) {
    auto [it, inserted] = iota.emplace(p, value);
    if (inserted) {
      queue.push_back(p);
    } else if (it->second != value) {
      throw Error(ErrorCode::InconsistentLabels,
                  pair_str(p) + " receives both " + it->second.str() + " and " + value.str(),
                  {it->second.elements(), value.elements()});
    }
  };
  for (const CyclicSubset& a : labels_a) {
    for (const CyclicSubset& b : labels_b) {
      if (is_projective_label(a) && is_projective_label(b)) assign({a, b}, anchor({a, b}, slice, n_a, n_b));
    }
  }
  while (!queue.empty()) {
    const LabelPair p = queue.front();
    queue.pop_front();
    const CyclicSubset value = iota.at(p);
    if (auto b = tau_label(p.second, 1)) assign({p.first, *b}, shift(value, 1));
    if (auto b = tau_label(p.second, -1)) assign({p.first, *b}, shift(value, -1));
    if (auto a = tau_label(p.first, 1)) assign({*a, p.second}, shift(value, -1));
    if (auto a = tau_label(p.first, -1)) assign({*a, p.second}, shift(value, 1));
  }

  std::map<CyclicSubset, LabelPair> owner;
  for (const CyclicSubset& a : labels_a) {
    for (const CyclicSubset& b : labels_b) {
      const LabelPair p{a, b};
      if (!iota.count(p)) {
        throw Error(ErrorCode::InconsistentLabels, pair_str(p) + " is never reached from a projective");
      }
      if (shifted(p, -1)) continue;  // not the minimal pair of its orbit
      StripObject obj{{}, iota.at(p), is_projective_label(a) && is_projective_label(b)};
      for (std::optional<LabelPair> r = p; r; r = shifted(*r, 1)) {
        if (iota.at(*r) != obj.iota) {
          throw Error(ErrorCode::InconsistentLabels, "orbit of " + pair_str(p) + " carries two labels",
                      {obj.iota.elements(), iota.at(*r).elements()});
        }
        obj.reps.push_back(*r);
      }
      if (obj.iota.size() != k || decompose(obj.iota).count() != static_cast<std::size_t>(l)) {
        throw Error(ErrorCode::InconsistentLabels, obj.iota.str() + " is not an l-ple interval of size k",
                    {obj.iota.elements()});
      }
      if (auto [it, fresh] = owner.emplace(obj.iota, p); !fresh) {
        throw Error(ErrorCode::InconsistentLabels,
                    "orbits of " + pair_str(it->second) + " and " + pair_str(p) + " share " + obj.iota.str(),
                    {obj.iota.elements()});
      }
      cat.objects.push_back(std::move(obj));
    }
  }
  std::sort(cat.objects.begin(), cat.objects.end(),
            [](const StripObject& x, const StripObject& y) { return x.iota < y.iota; });

  for (std::size_t x = 0; x < cat.objects.size(); ++x) {
    for (std::size_t y = 0; y < cat.objects.size(); ++y) {
      if (x == y) continue;
      if (auto tag = cyclic_move_tag(cat.objects[x].iota, cat.objects[y].iota)) cat.arrows.push_back({x, y, *tag});
    }
  }
  return cat;
}

bool hom_window(const StripCategory& cat, std::size_t x, std::size_t y, int shift) {
  if (shift < 0) return false;
  const auto& rx = cat.objects.at(x).reps;
  const auto& ry = cat.objects.at(y).reps;
  for (std::size_t j = 0; j < rx.size(); ++j) {
    const std::size_t t = j + static_cast<std::size_t>(shift);
    if (t < ry.size() && pair_hom(rx[j], ry[t])) return true;
  }
  return false;
}

std::vector<std::pair<std::size_t, std::size_t>> strip_rule_arrows(
    const StripCategory& cat, const std::vector<std::size_t>& vertices, int delta) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto level = static_cast<std::size_t>(delta);
  for (std::size_t x : vertices) {
    const LabelPair& from = cat.objects.at(x).reps.front();
    for (std::size_t y : vertices) {
      if (delta == 0 && x == y) continue;
      const auto& ry = cat.objects.at(y).reps;
      if (level >= ry.size() || !pair_hom(from, ry[level])) continue;
      bool factors = false;
      for (std::size_t z : vertices) {
        const auto& rz = cat.objects.at(z).reps;
        for (std::size_t lam = 0; lam <= level && lam < rz.size() && !factors; ++lam) {
          if ((z == x && lam == 0) || (z == y && lam == level)) continue;
          factors = pair_hom(from, rz[lam]) && pair_hom(rz[lam], ry[level]);
        }
        if (factors) break;
      }
      if (!factors) out.emplace_back(x, y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> wrap_arrows_kunneth(const StripCategory& cat) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [sa, ta] : factor_wraps(cat.m_a, cat.d)) {
    for (const auto& [sb, tb] : factor_wraps(cat.m_b, cat.d)) {
      const auto x = cat.find_pair({sa, sb});
      const auto y = cat.find_pair({ta, tb});
      if (!x || !y) {
        throw Error(ErrorCode::InconsistentLabels, "wrap pair endpoints missing from the strip");
      }
      out.emplace_back(*x, *y);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::string describe(const StripCategory& cat, const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  std::string s = "{";
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) s += ", ";
    s += cat.objects[arrows[i].first].iota.str() + "->" + cat.objects[arrows[i].second].iota.str();
  }
  return s + "}";
}

struct GammaBuild {
  StripCategory cat;
  LabeledQuiver quiver;
};

GammaBuild build_gamma(int n, int k, int l) {
  GammaBuild g{strip_category(n, k, l), tensor_quiver(n, k, l)};
  std::set<CyclicSubset> grid;
  for (const Vertex& v : g.quiver.vertices) grid.insert(v.parts.front());
  std::set<CyclicSubset> projective;
  for (std::size_t i : g.cat.projective_objects()) projective.insert(g.cat.objects[i].iota);
  if (grid != projective) {
    throw Error(ErrorCode::InconsistentLabels, "projective strip labels differ from the tensor grid");
  }
  const auto kunneth = wrap_arrows_kunneth(g.cat);
  const auto strip = strip_rule_arrows(g.cat, g.cat.projective_objects(), 1);
  if (kunneth != strip) {
    throw Error(ErrorCode::WrapRuleMismatch,
                "wrap arrows disagree: Kunneth " + describe(g.cat, kunneth) + " vs strip " + describe(g.cat, strip));
  }
  for (const auto& [x, y] : kunneth) {
    g.quiver.arrows.push_back({Vertex(g.cat.objects[x].iota), Vertex(g.cat.objects[y].iota), "wrap"});
  }
  g.quiver.normalize();
  return g;
}

}  // namespace

LabeledQuiver gamma_quiver(int n, int k, int l) { return build_gamma(n, k, l).quiver; }

LabeledQuiver preprojective_factor_quiver(int m_a, int m_b, int d) {
  if (m_a < 1 || m_b < 1 || d < 1) throw Error(ErrorCode::InvalidArgument, "factors need m >= 1, d >= 1");
  const int l = d + 1;
  const int k = m_a + l - 1;
  const int n = m_b + k + l - 1;
  const GammaBuild g = build_gamma(n, k, l);
  std::map<Vertex, Vertex> relabel;
  for (std::size_t i : g.cat.projective_objects()) {
    const LabelPair& p = g.cat.objects[i].pair();
    relabel.emplace(Vertex(g.cat.objects[i].iota),
                    Vertex(vertex_of_projective(p.first, std::max(m_a + 2 * d - 2, 1)),
                           vertex_of_projective(p.second, std::max(m_b + 2 * d - 2, 1))));
  }
  LabeledQuiver q;
  for (const Vertex& v : g.quiver.vertices) q.vertices.push_back(relabel.at(v));
  for (const Arrow& a : g.quiver.arrows) q.arrows.push_back({relabel.at(a.from), relabel.at(a.to), a.tag});
  q.normalize();
  q.relations = square_relations(q);
  return q;
}

CyclicSubset apr_vertex(int n, int k, int l) {
  std::vector<int> j;
  for (int t = 0; t < l; ++t) j.push_back(2 * t + 1);
  const CyclicSubset hat_j(n, j);
  const Collection ck = construct_ck(standard_slice(n, l), k);
  std::optional<CyclicSubset> found;
  for (const CyclicSubset& m : ck.members()) {
    if (hat(m) != hat_j) continue;
    if (found) throw Error(ErrorCode::Precondition, "two members share the hat " + hat_j.str());
    found = m;
  }
  if (!found) throw Error(ErrorCode::Precondition, "no member has the hat " + hat_j.str());
  return *found;
}

LabeledQuiver apr_mutate(int n, int k, int l) {
  const StripCategory cat = strip_category(n, k, l);
  const CyclicSubset i = apr_vertex(n, k, l);
  const CyclicSubset target = shift(i, 1);
  const auto source = cat.find(i);
  const auto moved = cat.find(target);
  if (!source) throw Error(ErrorCode::InconsistentLabels, i.str() + " is not a strip object", {i.elements()});
  if (!moved) {
    throw Error(ErrorCode::AprTargetMissing, target.str() + " is not a strip object", {target.elements()});
  }
  std::vector<std::size_t> vertices;
  for (std::size_t v : cat.projective_objects()) vertices.push_back(v == *source ? *moved : v);
  std::sort(vertices.begin(), vertices.end());

  LabeledQuiver q;
  for (std::size_t v : vertices) q.vertices.emplace_back(cat.objects[v].iota);
  for (int delta = 0; delta <= 1; ++delta) {
    for (const auto& [x, y] : strip_rule_arrows(cat, vertices, delta)) {
      const CyclicSubset& from = cat.objects[x].iota;
      const CyclicSubset& to = cat.objects[y].iota;
      std::string tag = "wrap";
      if (delta == 0) tag = cyclic_move_tag(from, to).value_or("strip");
      q.arrows.push_back({Vertex(from), Vertex(to), tag});
    }
  }
  q.normalize();
  q.relations = square_relations(q);
  return q;
}

}  // namespace intertwine
