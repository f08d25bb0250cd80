#pragma once

#include <string>
#include <type_traits>

#include "intertwine/json_io.hpp"

// Request handlers shared by the command line tool and the HTTP service.
// Every handler takes a JSON request object and returns a JSON response.
// Domain failures propagate as intertwine::Error; shape errors in the
// request raise Error with code MalformedInput.
namespace intertwine::api {

using json = nlohmann::json;

json standard_slice(const json& req);     // {n, l}
json check_slice(const json& req);        // collection
json validate(const json& req);           // collection
json construct(const json& req);          // {slice | "standard", n, l, k, variant}
json mutate(const json& req);             // {collection, element, direction}
json is_mutable(const json& req);         // {collection, element}
json mutation_path(const json& req);      // {slice | "standard", n, l, element, k}
json apr_mutate(const json& req);         // {n, k, l}
json enumerate(const std::string& kind, const json& req);

// kind is one of A, tensor, gamma, strip, apr, pi. A takes {m, d}; pi takes
// {ma, mb, d}; the rest take {n, k, l}.
json quiver(const std::string& kind, const json& req);
std::string quiver_dot(const std::string& kind, const json& req);

bool is_quiver_kind(const std::string& kind);

struct Outcome {
  int status;  // 200, 400 (malformed input) or 422 (domain error)
  std::string body;
  std::string content_type = "application/json";
};

// Runs a handler and maps exceptions to status codes and error documents.
template <typename F>
Outcome run(F&& handler);

int status_for(const Error& e);

}  // namespace intertwine::api

namespace intertwine::api {

template <typename F>
Outcome run(F&& handler) {
  try {
    if constexpr (std::is_same_v<std::invoke_result_t<F>, std::string>) {
      return {200, handler(), "text/vnd.graphviz"};
    } else {
      return {200, io::render(handler())};
    }
  } catch (const Error& e) {
    return {status_for(e), io::render(io::error_json(e))};
  } catch (const nlohmann::json::exception& e) {
    return {400, io::render(io::error_json(Error(ErrorCode::MalformedInput, e.what())))};
  }
}

}  // namespace intertwine::api
