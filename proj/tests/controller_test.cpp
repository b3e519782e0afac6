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
#include "scintent/controller.hpp"
#include "scintent/error.hpp"

using namespace scintent;

namespace {

EventClock fixed_clock() {
  return [] { return std::int64_t{0}; };
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kParse;
}

KnowledgeBase kb_with(std::initializer_list<std::string_view> intents) {
  KnowledgeBase kb;
  kb.model = testing::plant_model();
  for (auto text : intents) {
    apply(compile_intent(parse_intent(text, kb.vocabulary), kb.model, kb.policies), kb.policies);
  }
  return kb;
}

AdminAlert sample_alert(const std::string& admin = "admin-o1") {
  return {"", admin, "o1", "conflict between p-2 (i-2) and p-1", "i-2", false};
}

}  // namespace

TEST_CASE("install, amend and revoke") {
  auto kb = kb_with({"user-x is not allowed to access to realm o1-r1"});
  Controller controller(kb, fixed_clock());

  const auto install = controller.make_command("p-1", CommandVerb::kInstall);
  const auto ack = controller.enact(install);
  CHECK(ack.status == "applied");
  REQUIRE(controller.table().contains("p-1"));
  CHECK(controller.table().at("p-1").rendered_lines[1] ==
        "block user-x to access assets in o1-r1");
  CHECK(kb.telemetry.size() == 1);
  CHECK(std::get<PolicyAppliedEvent>(kb.telemetry.events()[0].payload).verb == "install");

  SUBCASE("same command twice is refused") {
    const auto before = controller.table();
    CHECK(code_of([&] { controller.enact(install); }) == ErrorCode::kDuplicateCommand);
    CHECK(controller.table() == before);
    CHECK(kb.telemetry.size() == 1);
  }
  SUBCASE("second install of a policy is refused") {
    CHECK(code_of([&] { controller.enact(controller.make_command("p-1", CommandVerb::kInstall)); }) ==
          ErrorCode::kDuplicateCommand);
  }
  SUBCASE("amend replaces the lines") {
    kb.policies.find("p-1")->add_exception({*kb.model.find_node("o1-r1-d1"), ShiftSet::all()});
    controller.enact(controller.make_command("p-1", CommandVerb::kAmend));
    CHECK(controller.table().at("p-1").rendered_lines[1] ==
          "block user-x to access assets in o1-r1 except o1-r1-d1");
  }
  SUBCASE("revoke removes the entry") {
    controller.enact(controller.make_command("p-1", CommandVerb::kRevoke));
    CHECK(controller.table().empty());
    CHECK(code_of([&] { controller.enact(controller.make_command("p-1", CommandVerb::kRevoke)); }) ==
          ErrorCode::kUnknownPolicy);
  }
  SUBCASE("unknown policy") {
    CHECK(code_of([&] { controller.enact(controller.make_command("p-9", CommandVerb::kInstall)); }) ==
          ErrorCode::kUnknownPolicy);
  }
}

TEST_CASE("command ids are never reused") {
  auto kb = kb_with({"user-x is not allowed to access to realm o1-r1",
                     "user-y is allowed to access to realm o1-r2"});
  Controller controller(kb, fixed_clock());
  const auto first = controller.make_command("p-1", CommandVerb::kInstall);
  controller.enact(first);
  const auto second = controller.make_command("p-2", CommandVerb::kInstall);
  CHECK(first.id != second.id);
  controller.enact(second);

  Controller restored(kb, fixed_clock());
  restored.restore();
  CHECK(restored.table() == controller.table());
  const auto third = restored.make_command("p-1", CommandVerb::kRevoke);
  CHECK(third.id != first.id);
  CHECK(third.id != second.id);
}

TEST_CASE("alert queue") {
  auto kb = kb_with({});
  Controller controller(kb, fixed_clock());
  CHECK(controller.pending_alerts("admin-o1").empty());

  const auto a1 = controller.raise_alert(sample_alert());
  const auto a2 = controller.raise_alert(sample_alert());
  controller.raise_alert(sample_alert("admin-o2"));
  CHECK(a1.id == "a-1");
  CHECK(a2.id == "a-2");
  auto pending = controller.pending_alerts("admin-o1");
  REQUIRE(pending.size() == 2);
  CHECK(pending[0].id == "a-1");
  CHECK(controller.pending_alerts("nobody").empty());

  const auto acked = controller.acknowledge_alert("a-1");
  CHECK(acked.acknowledged);
  CHECK(controller.pending_alerts("admin-o1").size() == 1);
  CHECK(code_of([&] { controller.acknowledge_alert("a-1"); }) ==
        ErrorCode::kAlreadyAcknowledged);
  CHECK(code_of([&] { controller.acknowledge_alert("a-77"); }) == ErrorCode::kUnknownAlert);

  testing::TempDir dir("controller-alerts");
  kb_save(kb, KbPaths::in(dir.path()));
  auto reloaded = kb_load(KbPaths::in(dir.path()));
  Controller again(reloaded, fixed_clock());
  again.restore();
  CHECK(again.alerts() == controller.alerts());
  CHECK(again.pending_alerts("admin-o1").size() == 1);
  CHECK(again.raise_alert(sample_alert()).id == "a-4");
}
