#pragma once

#include <optional>
#include <string>
#include <vector>

#include "intertwine/cyclic_subset.hpp"

namespace intertwine {

// A quiver vertex: a single subset, or a pair of subsets for tensor labels.
struct Vertex {
  std::vector<CyclicSubset> parts;

  Vertex() = default;
  explicit Vertex(CyclicSubset s) : parts{std::move(s)} {}
  Vertex(CyclicSubset a, CyclicSubset b) : parts{std::move(a), std::move(b)} {}

  // "1356", or "13|24" for pairs.
  std::string str() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex& a, const Vertex& b) { return a.parts <=> b.parts; }
};

struct Arrow {
  Vertex from;
  Vertex to;
  std::string tag;  // alpha_i, v_i, h_i, wrap, strip

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

enum class RelationKind { Commutativity, Zero };

// Commutativity relations carry two paths with equal endpoints; zero
// relations carry one path. Paths are vertex sequences.
struct Relation {
  RelationKind kind;
  std::vector<std::vector<Vertex>> paths;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct LabeledQuiver {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Arrow> arrows;     // sorted
  std::vector<Relation> relations;

  bool has_vertex(const Vertex& v) const;
  bool has_arrow(const Vertex& from, const Vertex& to) const;
  // Sorts vertices and arrows, drops duplicate arrows, and checks that every
  // arrow endpoint is a vertex (InvalidArgument otherwise).
  void normalize();
};

// Vertices I^{d-1}_{m+2d-2}, arrows alpha_i moving element i to i+1, and the
// commutativity / zero relations of the construction.
LabeledQuiver build_higher_a_quiver(int m, int d);

// I^d_{m+2d}, lexicographic.
std::vector<CyclicSubset> ct_labels(int m, int d);
bool is_projective_label(const CyclicSubset& label);
// The ambient n of the label is m + 2d.
bool is_injective_label(const CyclicSubset& label);

// i_0 - 1 < j_0 < i_1 - 1 < j_1 < ... < i_d - 1 < j_d.
bool hom_nonzero(const CyclicSubset& i, const CyclicSubset& j);

// Linear shift of a label by +1 (direction Plus, tau^-) or -1 (tau), when
// the result is still a label; labels live in [m+2d] = [label.n()].
std::optional<CyclicSubset> tau_label(const CyclicSubset& label, int direction);

// The projective label {1, i_0+2, ...} of an Auslander quiver vertex, and back.
CyclicSubset projective_label_of(const CyclicSubset& vertex, int label_n);
CyclicSubset vertex_of_projective(const CyclicSubset& label, int vertex_n);

// v_i / h_i on the pieces of an l-ple interval, 1 <= i <= l. The linear
// variants read pieces in the order 1 < ... < n without wrapping, and h_1 is
// undefined. The cyclic variants use cyclic pieces, index i-1 taken mod l and
// values mod n. All return nothing unless the result has the same size and
// the same number of pieces.
std::optional<CyclicSubset> v_op(const CyclicSubset& s, int i);
std::optional<CyclicSubset> h_op(const CyclicSubset& s, int i);
std::optional<CyclicSubset> v_op_cyclic(const CyclicSubset& s, int i);
std::optional<CyclicSubset> h_op_cyclic(const CyclicSubset& s, int i);

// Tag of the first cyclic v_i / h_i move taking `from` to `to`, if any.
std::optional<std::string> cyclic_move_tag(const CyclicSubset& from, const CyclicSubset& to);

// Vertices C_k(standard_slice(n, l)); arrows X -> v_i(X), X -> h_i(X) (linear
// variants) between vertices; a commutativity relation per square.
LabeledQuiver tensor_quiver(int n, int k, int l);

// Commutativity relations for every pair of distinct length-2 paths with
// common ends whose middle vertices differ.
std::vector<Relation> square_relations(const LabeledQuiver& q);

}  // namespace intertwine
