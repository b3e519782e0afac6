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

#include "scintent/controller.hpp"

#include <algorithm>

#include "scintent/error.hpp"

namespace scintent {

using nlohmann::json;

std::string_view command_verb_name(CommandVerb verb) {
  switch (verb) {
    case CommandVerb::kInstall:
      return "install";
    case CommandVerb::kRevoke:
      return "revoke";
    case CommandVerb::kAmend:
      return "amend";
  }
  return "install";
}

json alert_to_json(const AdminAlert& alert) {
  json out = {{"admin", alert.admin},
              {"organization", alert.organization},
              {"message", alert.message},
              {"source", alert.source},
              {"acknowledged", alert.acknowledged}};
  out["id"] = alert.id.empty() ? json(nullptr) : json(alert.id);
  return out;
}

Controller::Controller(KnowledgeBase& kb, EventClock clock)
    : kb_(kb), clock_(std::move(clock)) {}

void Controller::restore() {
  table_.clear();
  seen_commands_.clear();
  alerts_.clear();

  std::map<std::string, std::string> last_command;
  for (const auto& event : kb_.telemetry.events()) {
    if (const auto* applied = std::get_if<PolicyAppliedEvent>(&event.payload)) {
      seen_commands_.insert(applied->command_id);
      last_command[applied->policy_id] = applied->command_id;
    } else if (const auto* alert = std::get_if<AlertEvent>(&event.payload)) {
      if (alert->action == AlertAction::kRaised) {
        alerts_.push_back(alert->alert);
      } else {
        for (auto& a : alerts_) {
          if (a.id == alert->alert.id) a.acknowledged = true;
        }
      }
    }
  }
  for (const auto& policy : kb_.policies.policies()) {
    if (!policy.active()) continue;
    table_.emplace(policy.id,
                   EnforcementEntry{policy.id, last_command[policy.id], render_policy(policy)});
  }
}

ControllerCommand Controller::make_command(std::string_view policy_id, CommandVerb verb) const {
  ControllerCommand command;
  std::size_t n = seen_commands_.size() + 1;
  do {
    command.id = "c-" + std::to_string(n++);
  } while (seen_commands_.contains(command.id));
  command.policy_id = std::string(policy_id);
  command.verb = verb;
  if (const PolicyProgram* policy = kb_.policies.find(policy_id)) {
    command.rendered_lines = render_policy(*policy);
  }
  return command;
}

CommandAck Controller::enact(const ControllerCommand& command) {
  if (seen_commands_.contains(command.id)) {
    throw Error(ErrorCode::kDuplicateCommand,
                "command '" + command.id + "' was already enacted");
  }
  if (kb_.policies.find(command.policy_id) == nullptr) {
    throw Error(ErrorCode::kUnknownPolicy, "unknown policy '" + command.policy_id + "'");
  }
  if (command.rendered_lines.empty()) {
    throw Error(ErrorCode::kMalformedDocument,
                "command '" + command.id + "' carries no rendered lines");
  }
  auto it = table_.find(command.policy_id);
  switch (command.verb) {
    case CommandVerb::kInstall:
      if (it != table_.end()) {
        throw Error(ErrorCode::kDuplicateCommand,
                    "policy '" + command.policy_id + "' is already installed");
      }
      table_.emplace(command.policy_id,
                     EnforcementEntry{command.policy_id, command.id, command.rendered_lines});
      break;
    case CommandVerb::kRevoke:
    case CommandVerb::kAmend:
      if (it == table_.end()) {
        throw Error(ErrorCode::kUnknownPolicy,
                    "policy '" + command.policy_id + "' is not installed");
      }
      if (command.verb == CommandVerb::kRevoke) {
        table_.erase(it);
      } else {
        it->second = EnforcementEntry{command.policy_id, command.id, command.rendered_lines};
      }
      break;
  }
  seen_commands_.insert(command.id);
  record_event(kb_, {clock_(), PolicyAppliedEvent{command.id, command.policy_id,
                                                  std::string(command_verb_name(command.verb))}});
  return {command.id, "applied"};
}

const AdminAlert& Controller::raise_alert(AdminAlert alert) {
  alert.id = "a-" + std::to_string(alerts_.size() + 1);
  alert.acknowledged = false;
  record_event(kb_, {clock_(), AlertEvent{AlertAction::kRaised, alert}});
  alerts_.push_back(std::move(alert));
  return alerts_.back();
}

std::vector<AdminAlert> Controller::pending_alerts(std::string_view admin) const {
  std::vector<AdminAlert> out;
  for (const auto& alert : alerts_) {
    if (alert.admin == admin && !alert.acknowledged) out.push_back(alert);
  }
  return out;
}

AdminAlert Controller::acknowledge_alert(std::string_view alert_id) {
  auto it = std::find_if(alerts_.begin(), alerts_.end(),
                         [&](const AdminAlert& a) { return a.id == alert_id; });
  if (it == alerts_.end()) {
    throw Error(ErrorCode::kUnknownAlert, "unknown alert '" + std::string(alert_id) + "'");
  }
  if (it->acknowledged) {
    throw Error(ErrorCode::kAlreadyAcknowledged,
                "alert '" + std::string(alert_id) + "' is already acknowledged");
  }
  it->acknowledged = true;
  record_event(kb_, {clock_(), AlertEvent{AlertAction::kAcknowledged, *it}});
  return *it;
}

json enforcement_to_json(const Controller& controller) {
  json out = json::array();
  for (const auto& [id, entry] : controller.table()) {
    out.push_back({{"policy_id", entry.policy_id},
                   {"command_id", entry.command_id},
                   {"rendered_lines", entry.rendered_lines}});
  }
  return out;
}

}  // namespace scintent
