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

#include <functional>

#include "doctest.h"
#include "scenario.hpp"
#include "scintent/error.hpp"
#include "scintent/model.hpp"

using namespace scintent;
using nlohmann::json;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kParse;
}

json two_org_doc() {
  return json::parse(R"({
    "organizations": [
      {"id": "o1", "kind": "organization", "admin": "alice", "children": [
        {"id": "o1-r1", "kind": "realm", "children": [
          {"id": "o1-r1-d1", "kind": "domain", "assets": [{"id": "a1"}, {"id": "a2"}]}]},
        {"id": "o1-r2", "kind": "realm", "children": []}]},
      {"id": "o2", "kind": "organization", "admin": "bob", "children": [
        {"id": "o2-r1", "kind": "realm", "children": [
          {"id": "o2-r1-d3", "kind": "domain", "assets": [{"id": "b1"}]}]}]}
    ],
    "users": [{"id": "user-x"}]
  })");
}

}  // namespace

TEST_CASE("plant fixture has one organization and two realms") {
  const auto model = testing::plant_model();
  REQUIRE(model.organizations().size() == 1);
  CHECK(model.organizations()[0].children.size() == 2);
  CHECK(model.organization_admin("o1") == "admin-o1");
  CHECK(model.has_user("user-x"));
  CHECK_FALSE(model.has_user("ghost"));
}

TEST_CASE("empty organization list is a valid model") {
  const auto model = load_model(json{{"organizations", json::array()}});
  CHECK(model.all_nodes().empty());
  CHECK(model.all_assets().empty());
}

TEST_CASE("build rejects malformed trees") {
  SUBCASE("realm under two organizations") {
    auto doc = two_org_doc();
    doc["organizations"][1]["children"].push_back({{"id", "o1-r1"}, {"kind", "realm"}});
    CHECK(code_of([&] { load_model(doc); }) == ErrorCode::kDuplicateId);
  }
  SUBCASE("asset id shared with a node") {
    auto doc = two_org_doc();
    doc["organizations"][1]["children"][0]["children"][0]["assets"].push_back({{"id", "o1"}});
    CHECK(code_of([&] { load_model(doc); }) == ErrorCode::kDuplicateId);
  }
  SUBCASE("domain directly under organization") {
    auto doc = two_org_doc();
    doc["organizations"][0]["children"].push_back({{"id", "dx"}, {"kind", "domain"}});
    CHECK(code_of([&] { load_model(doc); }) == ErrorCode::kOrphanNode);
  }
  SUBCASE("upper-case identifier") {
    auto doc = two_org_doc();
    doc["organizations"][0]["id"] = "O1";
    CHECK(code_of([&] { load_model(doc); }) == ErrorCode::kMalformedId);
  }
  SUBCASE("unknown field") {
    auto doc = two_org_doc();
    doc["organizations"][0]["colour"] = "red";
    CHECK(code_of([&] { load_model(doc); }) == ErrorCode::kMalformedDocument);
  }
  SUBCASE("organization without admin") {
    auto doc = two_org_doc();
    doc["organizations"][0].erase("admin");
    CHECK_THROWS_AS(load_model(doc), Error);
  }
}

TEST_CASE("identifier pattern accepts hyphens") {
  CHECK(is_valid_identifier("user-x"));
  CHECK(is_valid_identifier("o1-r1"));
  CHECK_FALSE(is_valid_identifier(""));
  CHECK_FALSE(is_valid_identifier("User"));
  CHECK_FALSE(is_valid_identifier("a_b"));
  CHECK_FALSE(is_valid_identifier("o!1"));
}

TEST_CASE("resolve_spot") {
  const auto model = testing::plant_model();
  const auto realm = resolve_spot(model, ScopeKind::kRealm, "o1-r1");
  CHECK(realm == ScopePath{ScopeKind::kRealm, "o1-r1", {"o1", "o1-r1"}});
  const auto org = resolve_spot(model, ScopeKind::kOrganization, "o1");
  CHECK(org == ScopePath{ScopeKind::kOrganization, "o1", {"o1"}});
  CHECK(code_of([&] { resolve_spot(model, ScopeKind::kDomain, "o1"); }) ==
        ErrorCode::kKindMismatch);
  CHECK(code_of([&] { resolve_spot(model, ScopeKind::kRealm, "o9"); }) ==
        ErrorCode::kUnknownSpot);
}

TEST_CASE("scope_contains is a partial order on the tree") {
  const auto model = testing::plant_model();
  const auto o1 = *model.find_node("o1");
  const auto r1 = *model.find_node("o1-r1");
  const auto r2 = *model.find_node("o1-r2");
  CHECK(scope_contains(model, o1, r1));
  CHECK_FALSE(scope_contains(model, r1, o1));
  CHECK_FALSE(scope_contains(model, r1, r2));
  for (const auto& x : model.all_nodes()) CHECK(scope_contains(model, x, x));
}

TEST_CASE("scope_contains agrees with a parent walk on random models") {
  testing::Rng rng(11);
  for (int round = 0; round < 200; ++round) {
    const auto gen = testing::random_model(rng);
    const auto model = gen.build();
    for (int i = 0; i < static_cast<int>(gen.nodes.size()); ++i) {
      for (int j = 0; j < static_cast<int>(gen.nodes.size()); ++j) {
        const auto& inner = *model.find_node(gen.nodes[i].id);
        const auto& outer = *model.find_node(gen.nodes[j].id);
        CHECK(scope_contains(model, outer, inner) == gen.within(i, j));
      }
    }
  }
}

TEST_CASE("assets_under") {
  const auto model = load_model(two_org_doc());
  const auto names = [](const std::vector<AssetRecord>& assets) {
    std::vector<std::string> out;
    for (const auto& a : assets) out.push_back(a.id);
    return out;
  };
  CHECK(names(assets_under(model, *model.find_node("o1-r1-d1"))) ==
        std::vector<std::string>{"a1", "a2"});
  CHECK(names(assets_under(model, *model.find_node("o1"))) ==
        std::vector<std::string>{"a1", "a2"});
  CHECK(assets_under(model, *model.find_node("o1-r2")).empty());
  CHECK(model.asset_domain("b1").node_id == "o2-r1-d3");
  CHECK(code_of([&] { model.asset_domain("zz"); }) == ErrorCode::kUnknownAsset);
}

TEST_CASE("admin_of follows the owning organization") {
  const auto model = load_model(two_org_doc());
  CHECK(admin_of(model, *model.find_node("o1-r1")) == "alice");
  CHECK(admin_of(model, *model.find_node("o1")) == "alice");
  CHECK(admin_of(model, *model.find_node("o2-r1-d3")) == "bob");
}

TEST_CASE("model document round trip") {
  testing::Rng rng(5);
  for (int round = 0; round < 100; ++round) {
    const auto model = testing::random_model(rng).build();
    CHECK(load_model(model_to_json(model)) == model);
  }
  const auto plant = testing::plant_model();
  CHECK(load_model(model_to_json(plant)) == plant);
}
