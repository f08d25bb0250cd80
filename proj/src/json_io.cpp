#include "intertwine/json_io.hpp"

namespace intertwine::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

json path_json(const std::vector<Vertex>& path) {
  json out = json::array();
  for (const Vertex& v : path) out.push_back(vertex_json(v));
  return out;
}

}  // namespace

json subset_json(const CyclicSubset& s) { return {{"n", s.n()}, {"elements", s.elements()}}; }

json elements_json(const CyclicSubset& s) { return s.elements(); }

CyclicSubset subset_from_json(const json& j, int n) {
  const json* list = &j;
  if (j.is_object()) {
    list = &field(j, "elements");
    if (j.contains("n")) {
      if (!j["n"].is_number_integer()) malformed("\"n\" must be an integer");
      if (j["n"].get<int>() != n) {
        throw Error(ErrorCode::InvalidArgument, "subset lives in [" + std::to_string(j["n"].get<int>()) +
                                                    "], expected [" + std::to_string(n) + "]");
      }
    }
  }
  if (!list->is_array()) malformed("a subset must be an array of integers");
  std::vector<int> e;
  for (const json& x : *list) {
    if (!x.is_number_integer()) malformed("subset elements must be integers");
    e.push_back(x.get<int>());
  }
  if (n < 1 || n > kMaxN) throw Error(ErrorCode::InvalidArgument, "n must lie in [1, 31]");
  return CyclicSubset(n, std::move(e));
}

json collection_json(const Collection& c) {
  json members = json::array();
  for (const CyclicSubset& m : c.members()) members.push_back(elements_json(m));
  return {{"n", c.n()}, {"k", c.k()}, {"l", c.l()}, {"members", members}};
}

Collection collection_from_json(const json& j) {
  if (!j.is_object()) malformed("a collection must be a JSON object");
  const int n = int_field(j, "n");
  const int k = int_field(j, "k");
  const int l = int_field(j, "l");
  const json& members = field(j, "members");
  if (!members.is_array()) malformed("\"members\" must be an array");
  std::vector<CyclicSubset> out;
  for (const json& m : members) out.push_back(subset_from_json(m, n));
  return Collection(n, k, l, std::move(out));
}

json certificate_json(const SliceCertificate& cert) {
  return {{"base_point", cert.base_point}, {"image", cert.image}};
}

json vertex_json(const Vertex& v) {
  if (v.parts.size() == 1) return elements_json(v.parts.front());
  json out = json::array();
  for (const CyclicSubset& p : v.parts) out.push_back(elements_json(p));
  return out;
}

json quiver_json(const LabeledQuiver& q) {
  json vertices = json::array();
  for (const Vertex& v : q.vertices) vertices.push_back(vertex_json(v));
  json arrows = json::array();
  for (const Arrow& a : q.arrows) {
    arrows.push_back({{"from", vertex_json(a.from)}, {"to", vertex_json(a.to)}, {"tag", a.tag}});
  }
  json relations = json::array();
  for (const Relation& r : q.relations) {
    if (r.kind == RelationKind::Commutativity) {
      json paths = json::array();
      for (const auto& p : r.paths) paths.push_back(path_json(p));
      relations.push_back({{"kind", "commutativity"}, {"paths", paths}});
    } else {
      relations.push_back({{"kind", "zero"}, {"path", path_json(r.paths.front())}});
    }
  }
  return {{"vertices", vertices}, {"arrows", arrows}, {"relations", relations}};
}

json strip_json(const StripCategory& cat) {
  json objects = json::array();
  for (const StripObject& o : cat.objects) {
    objects.push_back({{"pair", {elements_json(o.pair().first), elements_json(o.pair().second)}},
                       {"iota", elements_json(o.iota)},
                       {"projective", o.projective}});
  }
  json arrows = json::array();
  for (const StripArrow& a : cat.arrows) {
    arrows.push_back({{"from", elements_json(cat.objects[a.from].iota)},
                      {"to", elements_json(cat.objects[a.to].iota)},
                      {"tag", a.tag}});
  }
  return {{"n", cat.n}, {"k", cat.k}, {"l", cat.l}, {"objects", objects}, {"arrows", arrows}};
}

json report_json(const OpenQuestionReport& rep) {
  json hist = json::array();
  for (const SizeBucket& b : rep.histogram) {
    hist.push_back({{"size", b.size}, {"count", b.count}, {"witness", collection_json(b.witness)}});
  }
  return {{"n", rep.n},
          {"k", rep.k},
          {"l", rep.l},
          {"atoms", rep.atoms},
          {"maximal_collections", rep.total},
          {"max_size", rep.max_size},
          {"conjectured", rep.conjectured},
          {"exceeds_conjecture", rep.max_size > rep.conjectured},
          {"maximum_count", rep.maximum.size()},
          {"maximum_truncated", rep.maximum_truncated},
          {"histogram", hist}};
}

json report_json(const CrossValidateReport& rep) {
  json props = json::array();
  for (const PropertyResult& p : rep.properties) {
    json entry = {{"name", p.name}, {"passed", p.passed}, {"checked", p.checked}, {"failures", p.failures}};
    if (!p.first_failure.empty()) entry["first_failure"] = p.first_failure;
    props.push_back(entry);
  }
  return {{"all_passed", rep.all_passed()}, {"properties", props}};
}

json error_json(const Error& e) {
  json out = {{"ok", false}, {"error", std::string(to_string(e.code()))}, {"detail", e.what()}};
  if (!e.offending().empty()) out["offending"] = e.offending();
  return out;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) malformed(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

}  // namespace intertwine::io
