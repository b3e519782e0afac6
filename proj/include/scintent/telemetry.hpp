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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "scintent/alert.hpp"
#include "scintent/engine.hpp"

namespace scintent {

enum class EventKind { kDecision, kConflict, kAlert, kIntentSubmitted, kPolicyApplied };

std::string_view event_kind_name(EventKind kind);

struct DecisionEvent {
  std::string user;
  std::string asset;
  std::string organization;  // owner of the asset
  int minute = 0;
  Verdict verdict = Verdict::kBlocked;
  std::vector<std::string> policies;
  bool default_applied = true;

  bool operator==(const DecisionEvent&) const = default;
};

struct ConflictEvent {
  Conflict conflict;

  bool operator==(const ConflictEvent&) const = default;
};

enum class AlertAction { kRaised, kAcknowledged };

struct AlertEvent {
  AlertAction action = AlertAction::kRaised;
  AdminAlert alert;

  bool operator==(const AlertEvent&) const = default;
};

struct IntentSubmittedEvent {
  std::string intent_id;
  std::string text;

  bool operator==(const IntentSubmittedEvent&) const = default;
};

struct PolicyAppliedEvent {
  std::string command_id;
  std::string policy_id;
  std::string verb;

  bool operator==(const PolicyAppliedEvent&) const = default;
};

using EventPayload = std::variant<DecisionEvent, ConflictEvent, AlertEvent,
                                  IntentSubmittedEvent, PolicyAppliedEvent>;

struct TelemetryEvent {
  std::int64_t timestamp = 0;  // minutes on the event clock
  EventPayload payload;

  EventKind kind() const { return static_cast<EventKind>(payload.index()); }
  bool operator==(const TelemetryEvent&) const = default;
};

/// Append-only event log with non-decreasing timestamps.
class TelemetryLog {
 public:
  /// Appends `event`; a timestamp older than the last one is raised to it.
  void append(TelemetryEvent event);

  const std::vector<TelemetryEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }

  bool operator==(const TelemetryLog&) const = default;

 private:
  std::vector<TelemetryEvent> events_;
};

nlohmann::json event_to_json(const TelemetryEvent& event);
/// Throws Error(kMalformedDocument) on unknown kinds or payload fields.
TelemetryEvent event_from_json(const nlohmann::json& doc);

/// One compact JSON object per line.
std::string telemetry_to_jsonl(const TelemetryLog& log);
TelemetryLog telemetry_from_jsonl(std::string_view text);

}  // namespace scintent
