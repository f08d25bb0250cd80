#include "intertwine/api.hpp"

#include <algorithm>
#include <set>

#include "intertwine/dot.hpp"
#include "intertwine/mutation.hpp"
#include "intertwine/oracle.hpp"
#include "intertwine/strip.hpp"

namespace intertwine::api {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

int opt_int(const json& req, const char* name, int fallback) {
  if (!req.is_object() || !req.contains(name)) return fallback;
  return io::int_field(req, name);
}

Direction direction_field(const json& req) {
  const json& d = io::field(req, "direction");
  if (d == "+" || d == "plus") return Direction::Plus;
  if (d == "-" || d == "minus") return Direction::Minus;
  malformed("\"direction\" must be \"+\" or \"-\"");
}

std::string direction_str(Direction d) { return d == Direction::Plus ? "+" : "-"; }

// A slice is given inline as a collection or as the string "standard" with n and l.
Collection slice_field(const json& req) {
  const json& s = io::field(req, "slice");
  if (s.is_string()) {
    if (s != "standard") malformed("\"slice\" must be a collection or \"standard\"");
    return intertwine::standard_slice(io::int_field(req, "n"), io::int_field(req, "l"));
  }
  return io::collection_from_json(s);
}

json ok(json payload) {
  json out = {{"ok", true}};
  out.update(payload);
  return out;
}

// Strip category as a quiver on the iota labels.
LabeledQuiver strip_quiver(const StripCategory& cat) {
  LabeledQuiver q;
  for (const StripObject& o : cat.objects) q.vertices.emplace_back(o.iota);
  for (const StripArrow& a : cat.arrows) {
    q.arrows.push_back({Vertex(cat.objects[a.from].iota), Vertex(cat.objects[a.to].iota), a.tag});
  }
  q.normalize();
  return q;
}

LabeledQuiver build_quiver(const std::string& kind, const json& req) {
  if (kind == "A") return build_higher_a_quiver(io::int_field(req, "m"), io::int_field(req, "d"));
  if (kind == "pi") {
    return preprojective_factor_quiver(io::int_field(req, "ma"), io::int_field(req, "mb"), io::int_field(req, "d"));
  }
  const int n = io::int_field(req, "n");
  const int k = io::int_field(req, "k");
  const int l = io::int_field(req, "l");
  if (kind == "tensor") return tensor_quiver(n, k, l);
  if (kind == "gamma") return gamma_quiver(n, k, l);
  if (kind == "strip") return strip_quiver(strip_category(n, k, l));
  if (kind == "apr") return intertwine::apr_mutate(n, k, l);
  malformed("unknown quiver kind \"" + kind + "\"");
}

EnumOptions enum_options(const json& req) {
  EnumOptions opts;
  opts.max_atoms = opt_int(req, "max_atoms", 0);
  opts.workers = std::max(1, opt_int(req, "workers", 1));
  if (req.is_object() && req.contains("rotation")) {
    if (!req["rotation"].is_boolean()) malformed("\"rotation\" must be a boolean");
    opts.up_to_rotation = req["rotation"].get<bool>();
  }
  return opts;
}

json collections_json(const std::vector<Collection>& cs) {
  json out = json::array();
  for (const Collection& c : cs) out.push_back(io::collection_json(c));
  return out;
}

}  // namespace

int status_for(const Error& e) { return e.code() == ErrorCode::MalformedInput ? 400 : 422; }

bool is_quiver_kind(const std::string& kind) {
  static const std::set<std::string> kinds{"A", "tensor", "gamma", "strip", "apr", "pi"};
  return kinds.count(kind) > 0;
}

json standard_slice(const json& req) {
  const Collection t = intertwine::standard_slice(io::int_field(req, "n"), io::int_field(req, "l"));
  return ok({{"result", io::collection_json(t)}, {"certificate", io::certificate_json(*is_slice(t))}});
}

json check_slice(const json& req) {
  const auto cert = is_slice(io::collection_from_json(req));
  json out = ok({{"slice", cert.has_value()}});
  if (cert) out["certificate"] = io::certificate_json(*cert);
  return out;
}

json validate(const json& req) {
  const Collection c = io::collection_from_json(req);
  if (auto pair = find_intertwining_pair(c)) {
    return {{"ok", false}, {"pair", {io::elements_json(pair->first), io::elements_json(pair->second)}}};
  }
  return ok({{"size", c.size()}});
}

json construct(const json& req) {
  const Collection t = slice_field(req);
  const int k = io::int_field(req, "k");
  std::string variant = "hat";
  if (req.contains("variant")) {
    if (!req["variant"].is_string()) malformed("\"variant\" must be a string");
    variant = req["variant"].get<std::string>();
  }
  if (variant == "hat") return ok({{"result", io::collection_json(construct_ck(t, k))}});
  if (variant == "check") return ok({{"result", io::collection_json(construct_ck_prime(t, k))}});
  if (variant == "psi") return ok({{"result", io::collection_json(construct_ck_via_psi(t, k))}});
  malformed("\"variant\" must be hat, check or psi");
}

json mutate(const json& req) {
  const Collection c = io::collection_from_json(io::field(req, "collection"));
  const CyclicSubset member = io::subset_from_json(io::field(req, "element"), c.n());
  return ok({{"result", io::collection_json(intertwine::mutate(c, member, direction_field(req)))}});
}

json is_mutable(const json& req) {
  const Collection c = io::collection_from_json(io::field(req, "collection"));
  const CyclicSubset member = io::subset_from_json(io::field(req, "element"), c.n());
  const Mutability m = intertwine::is_mutable(c, member);
  json out = ok({{"plus", m.plus}, {"minus", m.minus}});
  if (!m.plus_reason.empty()) out["plus_reason"] = m.plus_reason;
  if (!m.minus_reason.empty()) out["minus_reason"] = m.minus_reason;
  return out;
}

json mutation_path(const json& req) {
  const Collection t = slice_field(req);
  const CyclicSubset e = io::subset_from_json(io::field(req, "element"), t.n());
  const int k = io::int_field(req, "k");
  const std::vector<MutationStep> steps = intertwine::mutation_path(t, e, k);
  json steps_json = json::array();
  for (const MutationStep& s : steps) {
    steps_json.push_back({{"member", io::elements_json(s.member)}, {"direction", direction_str(s.direction)}});
  }
  const Collection start = construct_ck(t, k);
  const Collection result = apply_mutation_path(start, steps);
  json out = ok({{"start", io::collection_json(start)}, {"steps", steps_json}, {"result", io::collection_json(result)}});
  // When the slice itself can be shifted at e, report whether the path lands on C_k of the shifted slice.
  try {
    const Collection target = construct_ck(slice_mutate(t, e, Direction::Plus), k);
    out["target"] = io::collection_json(target);
    out["reaches_target"] = (target == result);
  } catch (const Error&) {
    out["target"] = nullptr;
  }
  return out;
}

json apr_mutate(const json& req) {
  const int n = io::int_field(req, "n");
  const int k = io::int_field(req, "k");
  const int l = io::int_field(req, "l");
  const CyclicSubset v = apr_vertex(n, k, l);
  const CyclicSubset shifted = shift(v, 1);
  return ok({{"vertex", io::elements_json(v)},
             {"relabeled", io::elements_json(shifted)},
             {"quiver", io::quiver_json(intertwine::apr_mutate(n, k, l))}});
}

json quiver(const std::string& kind, const json& req) {
  if (kind == "strip") {
    const StripCategory cat = strip_category(io::int_field(req, "n"), io::int_field(req, "k"), io::int_field(req, "l"));
    json out = io::quiver_json(strip_quiver(cat));
    out["strip"] = io::strip_json(cat);
    return out;
  }
  return io::quiver_json(build_quiver(kind, req));
}

std::string quiver_dot(const std::string& kind, const json& req) {
  if (kind == "strip") {
    return to_dot(strip_category(io::int_field(req, "n"), io::int_field(req, "k"), io::int_field(req, "l")), kind);
  }
  return to_dot(build_quiver(kind, req), kind);
}

json enumerate(const std::string& kind, const json& req) {
  const EnumOptions opts = enum_options(req);
  if (kind == "index") {
    const auto cs = enum_maximal_nonintertwining(io::int_field(req, "n"), io::int_field(req, "l"), opts);
    return ok({{"count", cs.size()}, {"collections", collections_json(cs)}});
  }
  if (kind == "subs") {
    return ok({{"report", io::report_json(enum_maximal_non_l_intertwining(
                              io::int_field(req, "n"), io::int_field(req, "k"), io::int_field(req, "l"), opts))}});
  }
  if (kind == "census") {
    const SliceCensus census = slice_census(io::int_field(req, "n"), io::int_field(req, "l"), opts);
    return ok({{"slices", collections_json(census.slices)}, {"non_slices", collections_json(census.non_slices)}});
  }
  if (kind == "cross") {
    CrossValidateOptions copts;
    copts.n_min = opt_int(req, "n_min", copts.n_min);
    copts.n_max = opt_int(req, "n_max", copts.n_max);
    const CrossValidateReport rep = cross_validate(copts);
    return ok({{"report", io::report_json(rep)}});
  }
  malformed("unknown enumeration \"" + kind + "\"");
}

}  // namespace intertwine::api
