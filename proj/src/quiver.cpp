#include "intertwine/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "intertwine/collection.hpp"
#include "intertwine/error.hpp"
#include "intertwine/slice.hpp"

namespace intertwine {

std::string Vertex::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '|';
    out += parts[i].str();
  }
  return out;
}

bool LabeledQuiver::has_vertex(const Vertex& v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool LabeledQuiver::has_arrow(const Vertex& from, const Vertex& to) const {
  return std::any_of(arrows.begin(), arrows.end(),
                     [&](const Arrow& a) { return a.from == from && a.to == to; });
}

void LabeledQuiver::normalize() {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(arrows.begin(), arrows.end());
  arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
  for (const Arrow& a : arrows) {
    if (!has_vertex(a.from) || !has_vertex(a.to)) {
      throw Error(ErrorCode::InvalidArgument,
                  "arrow " + a.from.str() + " -> " + a.to.str() + " leaves the vertex set");
    }
  }
}

namespace {

// I with element i replaced by i + 1, when that is still a vertex.
std::optional<CyclicSubset> alpha(const CyclicSubset& s, int i, const std::set<CyclicSubset>& vertices) {
  if (!s.contains(i) || i + 1 > s.n() || s.contains(i + 1)) return std::nullopt;
  std::vector<int> e;
  for (int x : s.elements()) e.push_back(x == i ? i + 1 : x);
  CyclicSubset t(s.n(), std::move(e));
  if (!vertices.count(t)) return std::nullopt;
  return t;
}

// s with `removed` swapped for `added`, kept only when size and piece count
// survive the move.
std::optional<CyclicSubset> rebuild(const CyclicSubset& s, int removed, int added, bool cyclic) {
  if (s.contains(added) && added != removed) return std::nullopt;
  std::vector<int> e;
  for (int x : s.elements()) {
    if (x != removed) e.push_back(x);
  }
  if (std::find(e.begin(), e.end(), added) == e.end()) e.push_back(added);
  if (e.empty()) return std::nullopt;
  CyclicSubset t(s.n(), std::move(e));
  if (t.size() != s.size()) return std::nullopt;
  const std::size_t before = cyclic ? decompose(s).count() : linear_pieces(s).size();
  const std::size_t after = cyclic ? decompose(t).count() : linear_pieces(t).size();
  if (before != after) return std::nullopt;
  return t;
}

int wrap(int x, int n) { return ((x - 1) % n + n) % n + 1; }

bool full(const CyclicSubset& s) { return s.size() == s.n(); }

}  // namespace

LabeledQuiver build_higher_a_quiver(int m, int d) {
  if (m < 1 || d < 1) throw Error(ErrorCode::InvalidArgument, "higher Auslander quiver needs m >= 1, d >= 1");
  const int n = m + 2 * d - 2;
  if (n > kMaxN) throw Error(ErrorCode::InvalidArgument, "quiver too large");
  LabeledQuiver q;
  const std::vector<CyclicSubset> verts = index_set(n, d, IndexVariant::Open);
  const std::set<CyclicSubset> vset(verts.begin(), verts.end());
  for (const CyclicSubset& v : verts) q.vertices.emplace_back(v);

  for (const CyclicSubset& v : verts) {
    for (int i : v.elements()) {
      if (auto t = alpha(v, i, vset)) q.arrows.push_back({Vertex(v), Vertex(*t), "alpha_" + std::to_string(i)});
    }
    const auto& e = v.elements();
    for (std::size_t x = 0; x < e.size(); ++x) {
      for (std::size_t y = x + 1; y < e.size(); ++y) {
        const int a = e[x];
        const int b = e[y];
        std::optional<std::vector<Vertex>> first;
        std::optional<std::vector<Vertex>> second;
        if (auto mid = alpha(v, a, vset)) {
          if (auto end = alpha(*mid, b, vset)) first = std::vector<Vertex>{Vertex(v), Vertex(*mid), Vertex(*end)};
        }
        if (auto mid = alpha(v, b, vset)) {
          if (auto end = alpha(*mid, a, vset)) second = std::vector<Vertex>{Vertex(v), Vertex(*mid), Vertex(*end)};
        }
        if (first && second) {
          q.relations.push_back({RelationKind::Commutativity, {*first, *second}});
        } else if (first) {
          q.relations.push_back({RelationKind::Zero, {*first}});
        } else if (second) {
          q.relations.push_back({RelationKind::Zero, {*second}});
        }
      }
    }
  }
  q.normalize();
  return q;
}

std::vector<CyclicSubset> ct_labels(int m, int d) {
  if (m < 1 || d < 1) throw Error(ErrorCode::InvalidArgument, "labels need m >= 1, d >= 1");
  if (m + 2 * d > kMaxN) throw Error(ErrorCode::InvalidArgument, "labels too large");
  return index_set(m + 2 * d, d + 1, IndexVariant::Open);
}

bool is_projective_label(const CyclicSubset& label) { return label.elements().front() == 1; }

bool is_injective_label(const CyclicSubset& label) { return label.elements().back() == label.n(); }

bool hom_nonzero(const CyclicSubset& i, const CyclicSubset& j) {
  if (i.size() != j.size()) {
    throw Error(ErrorCode::SizeMismatch, "labels of different sizes", {i.elements(), j.elements()});
  }
  const auto& a = i.elements();
  const auto& b = j.elements();
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (!(a[t] - 1 < b[t])) return false;
    if (t + 1 < a.size() && !(b[t] < a[t + 1] - 1)) return false;
  }
  return true;
}

std::optional<CyclicSubset> tau_label(const CyclicSubset& label, int direction) {
  std::vector<int> e;
  for (int x : label.elements()) {
    const int y = x + direction;
    if (y < 1 || y > label.n()) return std::nullopt;
    e.push_back(y);
  }
  return CyclicSubset(label.n(), std::move(e));
}

CyclicSubset projective_label_of(const CyclicSubset& vertex, int label_n) {
  std::vector<int> e{1};
  for (int x : vertex.elements()) e.push_back(x + 2);
  return CyclicSubset(label_n, std::move(e));
}

CyclicSubset vertex_of_projective(const CyclicSubset& label, int vertex_n) {
  if (!is_projective_label(label) || label.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, label.str() + " is not a projective label", {label.elements()});
  }
  std::vector<int> e;
  for (std::size_t t = 1; t < label.elements().size(); ++t) e.push_back(label.elements()[t] - 2);
  return CyclicSubset(vertex_n, std::move(e));
}

std::optional<CyclicSubset> v_op(const CyclicSubset& s, int i) {
  const auto pieces = linear_pieces(s);
  if (i < 1 || i > static_cast<int>(pieces.size())) return std::nullopt;
  const Interval p = pieces[static_cast<std::size_t>(i - 1)];
  if (p.last + 1 > s.n()) return std::nullopt;
  return rebuild(s, p.first, p.last + 1, false);
}

std::optional<CyclicSubset> h_op(const CyclicSubset& s, int i) {
  const auto pieces = linear_pieces(s);
  if (i < 2 || i > static_cast<int>(pieces.size())) return std::nullopt;
  const Interval prev = pieces[static_cast<std::size_t>(i - 2)];
  const Interval cur = pieces[static_cast<std::size_t>(i - 1)];
  return rebuild(s, prev.last, cur.first - 1, false);
}

std::optional<CyclicSubset> v_op_cyclic(const CyclicSubset& s, int i) {
  if (full(s)) return std::nullopt;
  const auto d = decompose(s);
  const int l = static_cast<int>(d.count());
  if (i < 1 || i > l) return std::nullopt;
  const Interval p = d.pieces[static_cast<std::size_t>(i - 1)];
  return rebuild(s, p.first, wrap(p.last + 1, s.n()), true);
}

std::optional<CyclicSubset> h_op_cyclic(const CyclicSubset& s, int i) {
  if (full(s)) return std::nullopt;
  const auto d = decompose(s);
  const int l = static_cast<int>(d.count());
  if (i < 1 || i > l) return std::nullopt;
  const Interval prev = d.pieces[static_cast<std::size_t>((i - 2 + l) % l)];
  const Interval cur = d.pieces[static_cast<std::size_t>(i - 1)];
  return rebuild(s, prev.last, wrap(cur.first - 1, s.n()), true);
}

std::optional<std::string> cyclic_move_tag(const CyclicSubset& from, const CyclicSubset& to) {
  const int l = static_cast<int>(decompose(from).count());
  for (int i = 1; i <= l; ++i) {
    if (v_op_cyclic(from, i) == to) return "v_" + std::to_string(i);
  }
  for (int i = 1; i <= l; ++i) {
    if (h_op_cyclic(from, i) == to) return "h_" + std::to_string(i);
  }
  return std::nullopt;
}

std::vector<Relation> square_relations(const LabeledQuiver& q) {
  std::map<Vertex, std::vector<Vertex>> out;
  for (const Arrow& a : q.arrows) out[a.from].push_back(a.to);
  std::vector<Relation> rel;
  for (const Vertex& x : q.vertices) {
    const auto& mids = out[x];
    for (std::size_t i = 0; i < mids.size(); ++i) {
      for (std::size_t j = i + 1; j < mids.size(); ++j) {
        if (mids[i] == mids[j]) continue;
        for (const Vertex& w : out[mids[i]]) {
          const auto& other = out[mids[j]];
          if (std::find(other.begin(), other.end(), w) != other.end()) {
            rel.push_back({RelationKind::Commutativity, {{x, mids[i], w}, {x, mids[j], w}}});
          }
        }
      }
    }
  }
  return rel;
}

LabeledQuiver tensor_quiver(int n, int k, int l) {
  const Collection c = construct_ck(standard_slice(n, l), k);
  LabeledQuiver q;
  for (const CyclicSubset& s : c.members()) q.vertices.emplace_back(s);
  for (const CyclicSubset& s : c.members()) {
    for (int i = 1; i <= l; ++i) {
      if (auto t = v_op(s, i); t && c.contains(*t)) q.arrows.push_back({Vertex(s), Vertex(*t), "v_" + std::to_string(i)});
      if (auto t = h_op(s, i); t && c.contains(*t)) q.arrows.push_back({Vertex(s), Vertex(*t), "h_" + std::to_string(i)});
    }
  }
  q.normalize();
  q.relations = square_relations(q);
  return q;
}

}  // namespace intertwine
