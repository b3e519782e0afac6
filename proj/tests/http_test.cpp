// Copyright 2026 The scintent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// -----------------------------------------------------------------------------

#include <atomic>
#include <thread>

#include "doctest.h"
#include "live_server.hpp"
#include "scenario.hpp"
#include "scintent/service.hpp"

using namespace scintent;
using nlohmann::json;

namespace {

std::unique_ptr<IntentService> plant_service() {
  KnowledgeBase kb;
  kb.model = testing::plant_model();
  ServiceConfig config;
  config.test_mode = true;
  return std::make_unique<IntentService>(std::move(kb), config);
}

httplib::Result post_json(httplib::Client& c, const std::string& path, const json& body,
                          const httplib::Headers& headers = {}) {
  return c.Post(path, headers, body.dump(), "application/json");
}

}  // namespace

TEST_CASE("two-intent scenario over HTTP") {
  auto service = plant_service();
  testing::LiveServer server(*service);
  auto c = server.client();

  auto r = post_json(c, "/intents", {{"text", "user-x is not allowed to access to realm o1-r1"}});
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK(r->get_header_value("Content-Type") == "application/json");
  r = post_json(c, "/intents", {{"text", "user-x is allowed to access to organization o1"}});
  CHECK(r->status == 200);
  CHECK(json::parse(r->body)["rendered_policies"][0][1] ==
        "allow user-x to access assets in o1 except o1-r1");

  r = c.Get("/alerts?admin=admin-o1");
  REQUIRE(r);
  CHECK(json::parse(r->body).size() == 1);

  r = post_json(c, "/decisions/query", {{"user", "user-x"}, {"asset", "plc-1"}, {"time", "10:00"}},
                {{"X-Record", "true"}});
  CHECK(json::parse(r->body)["verdict"] == "blocked");
  CHECK(service->snapshot().telemetry.events().back().kind() == EventKind::kDecision);

  r = post_json(c, "/decisions/query", {{"user", "user-x"}, {"asset", "erp-1"}, {"time", "25:99"}});
  CHECK(r->status == 400);
  r = c.Get("/no/such/route");
  CHECK(r->status == 404);
  r = c.Post("/alerts/a-1/ack", "", "application/json");
  CHECK(r->status == 200);
  CHECK(json::parse(c.Get("/alerts")->body).empty());
}

TEST_CASE("concurrent readers and a writer") {
  auto service = plant_service();
  testing::LiveServer server(*service);
  std::atomic<int> failures{0};
  std::atomic<bool> done{false};

  std::vector<std::thread> readers;
  for (int t = 0; t < 4; ++t) {
    readers.emplace_back([&] {
      auto c = server.client();
      while (!done) {
        auto r = post_json(c, "/decisions/query",
                           {{"user", "user-y"}, {"asset", "db-1"}, {"time", "09:30"}});
        if (!r || r->status != 200) ++failures;
        auto p = c.Get("/policies");
        if (!p || p->status != 200 || !json::parse(p->body).is_array()) ++failures;
      }
    });
  }
  auto c = server.client();
  for (int i = 0; i < 20; ++i) {
    const char* text = i % 2 == 0 ? "user-y is allowed to access to realm o1-r2"
                                  : "user-y is blocked to access to realm o1-r2";
    auto r = post_json(c, "/intents", {{"text", text}});
    if (!r || r->status != 200) ++failures;
  }
  done = true;
  for (auto& t : readers) t.join();
  CHECK(failures == 0);
  CHECK(service->store_version() == 20);
  const auto table = json::parse(c.Get("/debug/enforcement")->body);
  CHECK(table.size() == 1);
}
