#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "intertwine/api.hpp"
#include "intertwine/http.hpp"

namespace {

using intertwine::Error;
using intertwine::ErrorCode;
using json = nlohmann::json;

constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("input is not JSON: ") + e.what());
  }
}

// "1,3,5,6" or, when every element is a single digit, "1356".
json parse_element(const std::string& text) {
  json out = json::array();
  const bool has_sep = text.find(',') != std::string::npos;
  if (!has_sep) {
    for (char c : text) {
      if (c < '0' || c > '9') throw Error(ErrorCode::MalformedInput, "bad element list: " + text);
      out.push_back(c - '0');
    }
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedInput, "bad element list: " + text);
    }
  }
  return out;
}

struct Params {
  int n = 0, k = 0, l = 0, m = 0, d = 0, ma = 0, mb = 0;
  int n_min = 4, n_max = 9;
  int max_atoms = 0, workers = 1;
  bool rotation = false;
  bool standard = false;
  std::string slice = "standard";
  std::string variant = "hat";
  std::string element;
  std::string dir = "+";
  std::string file = "-";
  std::string format = "json";
  std::string kind;
  std::string host = "127.0.0.1";
  int port = 0;
};

void add_nkl(CLI::App* app, Params& p, bool k) {
  app->add_option("--n", p.n, "ground set size")->required();
  if (k) app->add_option("--k", p.k, "subset size")->required();
  app->add_option("--l", p.l, "intertwining order")->required();
}

// Builds the request for a slice-taking command: "standard" or a JSON file.
json slice_request(const Params& p) {
  json req = {{"n", p.n}, {"l", p.l}, {"k", p.k}};
  req["slice"] = p.slice == "standard" ? json("standard") : read_json(p.slice);
  return req;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-intertwining collections, slices, mutations and their quivers."};
  app.require_subcommand(1);
  bool json_errors = false;
  app.add_flag("--json-errors", json_errors, "write errors to stderr as JSON");
  Params p;

  auto* check = app.add_subcommand("check", "validate a collection read as JSON");
  check->add_option("--file", p.file, "input file, - for stdin");

  auto* slice = app.add_subcommand("slice", "print the standard slice or test a collection for being a slice");
  slice->add_flag("--standard", p.standard, "print the standard slice for --n and --l");
  slice->add_option("--n", p.n);
  slice->add_option("--l", p.l);
  slice->add_option("--file", p.file, "collection to test, - for stdin");

  auto* construct = app.add_subcommand("construct", "build C_k (hat), C'_k (check) or C_k via psi from a slice");
  add_nkl(construct, p, true);
  construct->add_option("--slice", p.slice, "\"standard\" or a JSON file holding the slice");
  construct->add_option("--variant", p.variant)->check(CLI::IsMember({"hat", "check", "psi"}));

  auto* mutate = app.add_subcommand("mutate", "apply one mutation to a collection read as JSON");
  mutate->add_option("--dir", p.dir)->required()->check(CLI::IsMember({"+", "-"}));
  mutate->add_option("--element", p.element, "member to mutate, e.g. 1,3,5,6")->required();
  mutate->add_option("--file", p.file, "input file, - for stdin");

  auto* path = app.add_subcommand("path", "mutation sequence from C_k(T) to C_k of T mutated at an element");
  add_nkl(path, p, true);
  path->add_option("--slice", p.slice, "\"standard\" or a JSON file holding the slice");
  path->add_option("--element", p.element, "slice member to mutate")->required();

  auto* quiver = app.add_subcommand("quiver", "emit a quiver as JSON or DOT");
  quiver->add_option("kind", p.kind, "A | tensor | gamma | strip | apr | pi")
      ->required()
      ->check(CLI::IsMember({"A", "tensor", "gamma", "strip", "apr", "pi"}));
  quiver->add_option("--n", p.n);
  quiver->add_option("--k", p.k);
  quiver->add_option("--l", p.l);
  quiver->add_option("--m", p.m, "A only");
  quiver->add_option("--d", p.d, "A and pi");
  quiver->add_option("--ma", p.ma, "pi only");
  quiver->add_option("--mb", p.mb, "pi only");
  quiver->add_option("--format", p.format)->check(CLI::IsMember({"json", "dot"}));

  auto* enumerate = app.add_subcommand("enum", "exhaustive oracle runs");
  enumerate->add_option("kind", p.kind, "index | subs | census | cross")
      ->required()
      ->check(CLI::IsMember({"index", "subs", "census", "cross"}));
  enumerate->add_option("--n", p.n);
  enumerate->add_option("--k", p.k);
  enumerate->add_option("--l", p.l);
  enumerate->add_option("--n-min", p.n_min, "cross only");
  enumerate->add_option("--n-max", p.n_max, "cross only");
  enumerate->add_option("--max-atoms", p.max_atoms, "guard on the number of candidate subsets");
  enumerate->add_option("--workers", p.workers, "worker threads");
  enumerate->add_flag("--rotation", p.rotation, "keep one collection per rotation class");

  auto* serve = app.add_subcommand("serve", "run the HTTP/JSON service");
  serve->add_option("--host", p.host);
  serve->add_option("--port", p.port, "defaults to $PORT, then 8080");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  namespace api = intertwine::api;
  namespace io = intertwine::io;
  try {
    json out;
    if (*check) {
      out = api::validate(read_json(p.file));
    } else if (*slice) {
      out = p.standard ? api::standard_slice({{"n", p.n}, {"l", p.l}}) : api::check_slice(read_json(p.file));
    } else if (*construct) {
      json req = slice_request(p);
      req["variant"] = p.variant;
      out = api::construct(req);
    } else if (*mutate) {
      out = api::mutate({{"collection", read_json(p.file)}, {"element", parse_element(p.element)}, {"direction", p.dir}});
    } else if (*path) {
      json req = slice_request(p);
      req["element"] = parse_element(p.element);
      out = api::mutation_path(req);
    } else if (*quiver) {
      json req = p.kind == "A"    ? json{{"m", p.m}, {"d", p.d}}
                 : p.kind == "pi" ? json{{"ma", p.ma}, {"mb", p.mb}, {"d", p.d}}
                                  : json{{"n", p.n}, {"k", p.k}, {"l", p.l}};
      if (p.format == "dot") {
        std::cout << api::quiver_dot(p.kind, req);
        return 0;
      }
      out = api::quiver(p.kind, req);
    } else if (*enumerate) {
      out = api::enumerate(p.kind, {{"n", p.n}, {"k", p.k}, {"l", p.l}, {"n_min", p.n_min}, {"n_max", p.n_max},
                                    {"max_atoms", p.max_atoms}, {"workers", p.workers}, {"rotation", p.rotation}});
    } else if (*serve) {
      const int port = p.port > 0 ? p.port : intertwine::http::port_from_env();
      if (!intertwine::http::serve(p.host, port)) {
        std::cerr << "error: cannot bind " << p.host << ":" << port << "\n";
        return 1;
      }
      return 0;
    }
    std::cout << io::render(out);
    return 0;
  } catch (const Error& e) {
    if (json_errors) {
      std::cerr << io::render(io::error_json(e));
    } else {
      std::cerr << "error: " << intertwine::to_string(e.code()) << ": " << e.what() << "\n";
    }
    return kExitDomain;
  }
}
