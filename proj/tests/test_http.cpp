#include <doctest.h>

#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "intertwine/http.hpp"

using json = nlohmann::json;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json golden_json(const std::string& name) { return json::parse(golden(name)); }

// One server for the whole file, listening on an ephemeral localhost port.
struct Service {
  httplib::Server server;
  std::thread thread;
  int port = 0;

  Service() {
    intertwine::http::register_routes(server);
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~Service() {
    server.stop();
    thread.join();
  }
};

Service& service() {
  static Service s;
  return s;
}

httplib::Client client() {
  httplib::Client c("127.0.0.1", service().port);
  c.set_read_timeout(60, 0);
  return c;
}

httplib::Result post(const std::string& path, const json& body) {
  return client().Post(path, body.dump(), "application/json");
}

void check_golden_get(const std::string& path, const std::string& file) {
  auto res = client().Get(path);
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->body == golden(file));
}

void check_golden_post(const std::string& path, const json& body, const std::string& file) {
  auto res = post(path, body);
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->body == golden(file));
}

}  // namespace

TEST_CASE("http responses are byte-identical to the command line goldens") {
  const json c4 = golden_json("inputs/c4_standard.json");

  check_golden_get("/api/slice/standard?n=8&l=3", "slice_standard.json");
  check_golden_post("/api/slice/check", golden_json("inputs/standard_8_3.json"), "slice_check.json");
  check_golden_post("/api/collection/validate", c4, "check_valid.json");
  check_golden_post("/api/collection/validate", golden_json("inputs/crossing_pair.json"), "check_crossing.json");

  const json standard = {{"slice", "standard"}, {"n", 8}, {"l", 3}, {"k", 4}};
  check_golden_post("/api/collection/construct", standard, "construct_hat.json");
  json variant = standard;
  variant["variant"] = "check";
  check_golden_post("/api/collection/construct", variant, "construct_check.json");
  variant["variant"] = "psi";
  check_golden_post("/api/collection/construct", variant, "construct_psi.json");

  check_golden_post("/api/mutate", {{"collection", c4}, {"element", {1, 3, 5, 6}}, {"direction", "+"}},
                    "mutate_plus.json");
  json path = standard;
  path["element"] = {1, 3, 5};
  check_golden_post("/api/mutation-path", path, "path_135.json");

  check_golden_get("/api/quiver/A?m=4&d=2", "quiver_A_4_2.json");
  check_golden_get("/api/quiver/tensor?n=8&k=4&l=3", "quiver_tensor.json");
  check_golden_get("/api/quiver/tensor?n=8&k=4&l=3&format=dot", "quiver_tensor.dot");
  check_golden_get("/api/quiver/gamma?n=8&k=4&l=3", "quiver_gamma.json");
  check_golden_get("/api/quiver/gamma?n=8&k=4&l=3&format=dot", "quiver_gamma.dot");
  check_golden_get("/api/quiver/strip?n=8&k=4&l=3", "quiver_strip.json");
  check_golden_get("/api/quiver/strip?n=8&k=4&l=3&format=dot", "quiver_strip.dot");
  check_golden_get("/api/quiver/apr?n=8&k=4&l=3", "quiver_apr.json");
  check_golden_get("/api/quiver/pi?ma=2&mb=2&d=2", "quiver_pi.json");

  check_golden_get("/api/enum/index?n=6&l=2", "enum_index.json");
  check_golden_get("/api/enum/subs?n=7&k=3&l=2", "enum_subs.json");
  check_golden_get("/api/enum/census?n=6&l=2", "enum_census.json");
  check_golden_get("/api/enum/cross?n_min=4&n_max=6", "enum_cross.json");
}

TEST_CASE("mutate on C_4 of the standard slice returns nine members") {
  auto res = post("/api/mutate", {{"collection", golden_json("inputs/c4_standard.json")},
                                  {"element", {1, 3, 5, 6}},
                                  {"direction", "+"}});
  REQUIRE(res);
  CHECK(res->status == 200);
  const json body = json::parse(res->body);
  CHECK(body["ok"] == true);
  const json& members = body["result"]["members"];
  CHECK(members.size() == 9);
  CHECK(std::find(members.begin(), members.end(), json{2, 4, 6, 7}) != members.end());
  CHECK(std::find(members.begin(), members.end(), json{1, 3, 5, 6}) == members.end());
}

TEST_CASE("validate reports the intertwining pair") {
  auto res = post("/api/collection/validate", golden_json("inputs/crossing_pair.json"));
  REQUIRE(res);
  CHECK(json::parse(res->body) == json{{"ok", false}, {"pair", {{1, 3, 5, 6}, {2, 4, 6, 7}}}});
}

TEST_CASE("gamma document holds the grid and one wrap arrow") {
  auto res = client().Get("/api/quiver/gamma?n=8&k=4&l=3");
  REQUIRE(res);
  const json q = json::parse(res->body);
  CHECK(q["vertices"].size() == 9);
  int wraps = 0;
  for (const json& a : q["arrows"]) {
    if (a["tag"] == "wrap") {
      ++wraps;
      CHECK(a["from"] == json{1, 4, 6, 7});
      CHECK(a["to"] == json{1, 2, 4, 6});
    }
  }
  CHECK(wraps == 1);
  CHECK(q["arrows"].size() == 13);
}

TEST_CASE("apr-mutate relabels the designated vertex") {
  auto res = post("/api/quiver/apr-mutate", {{"n", 8}, {"k", 4}, {"l", 3}});
  REQUIRE(res);
  CHECK(res->status == 200);
  const json body = json::parse(res->body);
  CHECK(body["vertex"] == json{1, 3, 5, 6});
  CHECK(body["relabeled"] == json{2, 4, 6, 7});
  CHECK(body["quiver"] == golden_json("quiver_apr.json"));
}

TEST_CASE("is-mutable names both directions") {
  auto res = post("/api/is-mutable", {{"collection", golden_json("inputs/c4_standard.json")}, {"element", {1, 3, 5, 6}}});
  REQUIRE(res);
  const json body = json::parse(res->body);
  CHECK(body["plus"] == true);
  CHECK(body.contains("minus"));
  if (body["minus"] == false) CHECK(body.contains("minus_reason"));
}

TEST_CASE("error statuses") {
  SUBCASE("malformed JSON body is 400") {
    auto res = client().Post("/api/mutate", "{\"collection\": [", "application/json");
    REQUIRE(res);
    CHECK(res->status == 400);
    CHECK(json::parse(res->body)["error"] == "malformed_input");
  }
  SUBCASE("missing field is 400") {
    auto res = post("/api/mutate", {{"element", {1, 3, 5, 6}}, {"direction", "+"}});
    REQUIRE(res);
    CHECK(res->status == 400);
  }
  SUBCASE("non-integer query parameter is 400") {
    auto res = client().Get("/api/slice/standard?n=eight&l=3");
    REQUIRE(res);
    CHECK(res->status == 400);
  }
  SUBCASE("domain error is 422 with code, detail and offending pair") {
    auto res = post("/api/mutate", {{"collection", golden_json("inputs/c4_standard.json")},
                                    {"element", {1, 2, 4, 6}},
                                    {"direction", "-"}});
    REQUIRE(res);
    CHECK(res->status == 422);
    const json body = json::parse(res->body);
    CHECK(body["ok"] == false);
    CHECK(body["error"] == "intertwining_pair");
    CHECK(body["detail"].is_string());
    CHECK(body["offending"].size() == 2);
  }
  SUBCASE("not a member is 422") {
    auto res = post("/api/mutate", {{"collection", golden_json("inputs/c4_standard.json")},
                                    {"element", {1, 2, 3, 4}},
                                    {"direction", "+"}});
    REQUIRE(res);
    CHECK(res->status == 422);
    CHECK(json::parse(res->body)["error"] == "not_a_member");
  }
  SUBCASE("guard violation is 422") {
    auto res = client().Get("/api/enum/subs?n=12&k=5&l=2&max_atoms=20");
    REQUIRE(res);
    CHECK(res->status == 422);
    CHECK(json::parse(res->body)["error"] == "guard_violation");
  }
  SUBCASE("apr target missing is 422") {
    auto res = post("/api/quiver/apr-mutate", {{"n", 8}, {"k", 5}, {"l", 3}});
    REQUIRE(res);
    CHECK(res->status == 422);
    CHECK(json::parse(res->body)["error"] == "apr_target_missing");
  }
  SUBCASE("unknown quiver kind is 404") {
    auto res = client().Get("/api/quiver/hexagon?n=8&k=4&l=3");
    REQUIRE(res);
    CHECK(res->status == 404);
  }
}

TEST_CASE("concurrent requests return identical documents") {
  const std::string expected = golden("quiver_gamma.json");
  std::vector<std::thread> threads;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      auto res = client().Get("/api/quiver/gamma?n=8&k=4&l=3");
      ok[t] = res && res->status == 200 && res->body == expected;
    });
  }
  for (auto& th : threads) th.join();
  for (int v : ok) CHECK(v == 1);
}

TEST_CASE("PORT environment variable") {
  setenv("PORT", "9123", 1);
  CHECK(intertwine::http::port_from_env() == 9123);
  setenv("PORT", "nonsense", 1);
  CHECK(intertwine::http::port_from_env(8080) == 8080);
  unsetenv("PORT");
  CHECK(intertwine::http::port_from_env(7000) == 7000);
}
