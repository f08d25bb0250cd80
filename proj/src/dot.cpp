#include "intertwine/dot.hpp"

#include <algorithm>
#include <sstream>

namespace intertwine {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

void edge(std::ostringstream& out, const std::string& from, const std::string& to, const std::string& tag) {
  out << "  " << quoted(from) << " -> " << quoted(to) << " [label=" << quoted(tag);
  if (tag == "wrap") out << ", style=dashed, constraint=false";
  out << "];\n";
}

}  // namespace

std::string to_dot(const LabeledQuiver& q, const std::string& name) {
  std::vector<Vertex> vertices = q.vertices;
  std::sort(vertices.begin(), vertices.end());
  std::vector<Arrow> arrows = q.arrows;
  std::sort(arrows.begin(), arrows.end());

  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n  rankdir=LR;\n  node [shape=plaintext];\n";
  for (const Vertex& v : vertices) out << "  " << quoted(v.str()) << ";\n";
  for (const Arrow& a : arrows) edge(out, a.from.str(), a.to.str(), a.tag);
  for (const Relation& r : q.relations) {
    const auto& p = r.paths.front();
    out << "  " << quoted(p.front().str()) << " -> " << quoted(p.back().str())
        << " [style=dotted, arrowhead=none, constraint=false, label="
        << quoted(r.kind == RelationKind::Zero ? "zero" : "comm") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const StripCategory& cat, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n  rankdir=LR;\n  node [shape=plaintext];\n";
  for (const StripObject& o : cat.objects) {
    out << "  " << quoted(o.iota.str()) << (o.projective ? " [shape=box]" : "") << ";\n";
  }
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (const StripArrow& a : cat.arrows) {
    edges.emplace_back(cat.objects[a.from].iota.str(), cat.objects[a.to].iota.str(), a.tag);
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [from, to, tag] : edges) edge(out, from, to, tag);
  out << "}\n";
  return out.str();
}

}  // namespace intertwine
