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
//
// In-process stand-in for the network controller. It keeps an enforcement
// table keyed by policy id and an admin alert queue. Both are rebuilt from the
// knowledge base on restore(), so neither needs a document of its own.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "scintent/alert.hpp"
#include "scintent/knowledge_base.hpp"

namespace scintent {

enum class CommandVerb { kInstall, kRevoke, kAmend };

std::string_view command_verb_name(CommandVerb verb);

struct ControllerCommand {
  std::string id;
  std::string policy_id;
  CommandVerb verb = CommandVerb::kInstall;
  std::vector<std::string> rendered_lines;
};

struct CommandAck {
  std::string command_id;
  std::string status;
};

struct EnforcementEntry {
  std::string policy_id;
  std::string command_id;
  std::vector<std::string> rendered_lines;

  bool operator==(const EnforcementEntry&) const = default;
};

/// Minutes on the event clock.
using EventClock = std::function<std::int64_t()>;

class Controller {
 public:
  Controller(KnowledgeBase& kb, EventClock clock);

  Controller(const Controller&) = delete;
  Controller& operator=(const Controller&) = delete;

  /// Rebuilds the table from the active policies and the alert queue from
  /// telemetry. Records nothing.
  void restore();

  /// Builds the next command for `policy_id` with freshly rendered lines.
  ControllerCommand make_command(std::string_view policy_id, CommandVerb verb) const;

  /// Applies one command and records a policy-applied event. Throws Error
  /// with kUnknownPolicy or kDuplicateCommand; the table is untouched then.
  CommandAck enact(const ControllerCommand& command);

  const std::map<std::string, EnforcementEntry, std::less<>>& table() const { return table_; }

  /// Assigns the next alert id, queues the alert and records it.
  const AdminAlert& raise_alert(AdminAlert alert);

  /// Unacknowledged alerts for `admin`, oldest first.
  std::vector<AdminAlert> pending_alerts(std::string_view admin) const;
  const std::vector<AdminAlert>& alerts() const { return alerts_; }

  /// Throws Error with kUnknownAlert or kAlreadyAcknowledged.
  AdminAlert acknowledge_alert(std::string_view alert_id);

 private:
  KnowledgeBase& kb_;
  EventClock clock_;
  std::map<std::string, EnforcementEntry, std::less<>> table_;
  std::set<std::string, std::less<>> seen_commands_;
  std::vector<AdminAlert> alerts_;
};

nlohmann::json enforcement_to_json(const Controller& controller);

}  // namespace scintent
