#include "intertwine/http.hpp"

#include <cstdlib>
#include <iostream>

#include <httplib.h>

#include "intertwine/api.hpp"

namespace intertwine::http {

namespace {

using api::json;

void reply(httplib::Response& res, const api::Outcome& out) {
  res.status = out.status;
  res.set_content(out.body, out.content_type);
}

json parse_body(const httplib::Request& req) {
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("request body is not JSON: ") + e.what());
  }
}

// Query parameters become integer fields; anything else is malformed.
json query_json(const httplib::Request& req) {
  json out = json::object();
  for (const auto& [key, value] : req.params) {
    if (key == "format" || key == "rotation") continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      out[key] = v;
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedInput, "query parameter " + key + " must be an integer");
    }
  }
  return out;
}

template <typename Handler>
void post(httplib::Server& server, const char* path, Handler handler) {
  server.Post(path, [handler](const httplib::Request& req, httplib::Response& res) {
    reply(res, api::run([&] { return handler(parse_body(req)); }));
  });
}

}  // namespace

void register_routes(httplib::Server& server) {
  server.Get("/api/slice/standard", [](const httplib::Request& req, httplib::Response& res) {
    reply(res, api::run([&] { return api::standard_slice(query_json(req)); }));
  });
  post(server, "/api/slice/check", api::check_slice);
  post(server, "/api/collection/validate", api::validate);
  post(server, "/api/collection/construct", api::construct);
  post(server, "/api/mutate", api::mutate);
  post(server, "/api/is-mutable", api::is_mutable);
  post(server, "/api/mutation-path", api::mutation_path);
  post(server, "/api/quiver/apr-mutate", api::apr_mutate);

  server.Get(R"(/api/enum/([a-z]+))", [](const httplib::Request& req, httplib::Response& res) {
    const std::string kind = req.matches[1];
    reply(res, api::run([&] {
      json q = query_json(req);
      if (req.has_param("rotation")) q["rotation"] = req.get_param_value("rotation") == "1";
      return api::enumerate(kind, q);
    }));
  });

  server.Get(R"(/api/quiver/([A-Za-z]+))", [](const httplib::Request& req, httplib::Response& res) {
    const std::string kind = req.matches[1];
    if (!api::is_quiver_kind(kind)) {
      reply(res, {404, io::render({{"ok", false}, {"error", "not_found"}, {"detail", "unknown quiver kind " + kind}})});
      return;
    }
    const std::string format = req.has_param("format") ? req.get_param_value("format") : "json";
    if (format == "dot") {
      reply(res, api::run([&] { return api::quiver_dot(kind, query_json(req)); }));
    } else if (format == "json") {
      reply(res, api::run([&] { return api::quiver(kind, query_json(req)); }));
    } else {
      reply(res, api::run([]() -> json { throw Error(ErrorCode::MalformedInput, "format must be json or dot"); }));
    }
  });
}

int port_from_env(int fallback) {
  const char* raw = std::getenv("PORT");
  if (raw == nullptr) return fallback;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1 || v > 65535) return fallback;
  return static_cast<int>(v);
}

bool serve(const std::string& host, int port) {
  httplib::Server server;
  register_routes(server);
  if (!server.bind_to_port(host, port)) return false;
  std::cerr << "listening on http://" << host << ":" << port << "\n";
  return server.listen_after_bind();
}

}  // namespace intertwine::http
