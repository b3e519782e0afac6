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

#include "scintent/telemetry.hpp"

#include <algorithm>
#include <set>

#include "scintent/error.hpp"

namespace scintent {

using nlohmann::json;

std::string_view event_kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::kDecision:
      return "decision";
    case EventKind::kConflict:
      return "conflict";
    case EventKind::kAlert:
      return "alert";
    case EventKind::kIntentSubmitted:
      return "intent-submitted";
    case EventKind::kPolicyApplied:
      return "policy-applied";
  }
  return "decision";
}

void TelemetryLog::append(TelemetryEvent event) {
  if (!events_.empty()) {
    event.timestamp = std::max(event.timestamp, events_.back().timestamp);
  }
  events_.push_back(std::move(event));
}

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedDocument, "telemetry: " + what);
}

void require_fields(const json& payload, std::set<std::string> expected,
                    std::string_view kind) {
  if (!payload.is_object()) malformed("payload must be an object");
  std::set<std::string> found;
  for (const auto& [key, value] : payload.items()) found.insert(key);
  if (found != expected) {
    malformed("payload fields of '" + std::string(kind) + "' events do not match the schema");
  }
}

std::string str(const json& payload, const char* key) {
  const auto& v = payload.at(key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

ConflictRelation relation_from_name(const std::string& name) {
  for (auto r : {ConflictRelation::kExistingInsideNew, ConflictRelation::kNewInsideExisting,
                 ConflictRelation::kEqualScope}) {
    if (relation_name(r) == name) return r;
  }
  malformed("unknown conflict relation '" + name + "'");
}

}  // namespace

json event_to_json(const TelemetryEvent& event) {
  json payload = std::visit(
      Overloaded{
          [](const DecisionEvent& e) -> json {
            return {{"user", e.user},
                    {"asset", e.asset},
                    {"organization", e.organization},
                    {"minute", e.minute},
                    {"verdict", verdict_name(e.verdict)},
                    {"policies", e.policies},
                    {"default_applied", e.default_applied}};
          },
          [](const ConflictEvent& e) -> json { return conflict_to_json(e.conflict); },
          [](const AlertEvent& e) -> json {
            return {{"action", e.action == AlertAction::kRaised ? "raised" : "acknowledged"},
                    {"alert_id", e.alert.id},
                    {"admin", e.alert.admin},
                    {"organization", e.alert.organization},
                    {"message", e.alert.message},
                    {"source", e.alert.source}};
          },
          [](const IntentSubmittedEvent& e) -> json {
            return {{"intent_id", e.intent_id}, {"text", e.text}};
          },
          [](const PolicyAppliedEvent& e) -> json {
            return {{"command_id", e.command_id},
                    {"policy_id", e.policy_id},
                    {"verb", e.verb}};
          },
      },
      event.payload);
  return {{"ts", event.timestamp},
          {"kind", event_kind_name(event.kind())},
          {"payload", std::move(payload)}};
}

TelemetryEvent event_from_json(const json& doc) {
  if (!doc.is_object() || doc.size() != 3 || !doc.contains("ts") || !doc.contains("kind") ||
      !doc.contains("payload")) {
    malformed("event must be {ts, kind, payload}");
  }
  if (!doc["ts"].is_number_integer()) malformed("ts must be an integer");
  if (!doc["kind"].is_string()) malformed("kind must be a string");

  TelemetryEvent event;
  event.timestamp = doc["ts"].get<std::int64_t>();
  const auto kind = doc["kind"].get<std::string>();
  const json& p = doc["payload"];

  if (kind == "decision") {
    require_fields(p, {"user", "asset", "organization", "minute", "verdict", "policies",
                       "default_applied"},
                   kind);
    DecisionEvent e;
    e.user = str(p, "user");
    e.asset = str(p, "asset");
    e.organization = str(p, "organization");
    if (!p["minute"].is_number_integer()) malformed("minute must be an integer");
    e.minute = p["minute"].get<int>();
    const auto verdict = str(p, "verdict");
    if (verdict != "allowed" && verdict != "blocked") malformed("unknown verdict");
    e.verdict = verdict == "allowed" ? Verdict::kAllowed : Verdict::kBlocked;
    if (!p["policies"].is_array()) malformed("policies must be an array");
    e.policies = p["policies"].get<std::vector<std::string>>();
    if (!p["default_applied"].is_boolean()) malformed("default_applied must be a boolean");
    e.default_applied = p["default_applied"].get<bool>();
    event.payload = std::move(e);
  } else if (kind == "conflict") {
    require_fields(p, {"new_intent", "candidate_policy", "existing_policy", "relation",
                       "overlapping_shifts"},
                   kind);
    Conflict c;
    c.new_intent = str(p, "new_intent");
    c.candidate_policy = str(p, "candidate_policy");
    c.existing_policy = str(p, "existing_policy");
    c.relation = relation_from_name(str(p, "relation"));
    c.overlapping_shifts = shifts_from_json(p["overlapping_shifts"]);
    event.payload = ConflictEvent{std::move(c)};
  } else if (kind == "alert") {
    require_fields(p, {"action", "alert_id", "admin", "organization", "message", "source"},
                   kind);
    AlertEvent e;
    const auto action = str(p, "action");
    if (action != "raised" && action != "acknowledged") malformed("unknown alert action");
    e.action = action == "raised" ? AlertAction::kRaised : AlertAction::kAcknowledged;
    e.alert.id = str(p, "alert_id");
    e.alert.admin = str(p, "admin");
    e.alert.organization = str(p, "organization");
    e.alert.message = str(p, "message");
    e.alert.source = str(p, "source");
    e.alert.acknowledged = e.action == AlertAction::kAcknowledged;
    event.payload = std::move(e);
  } else if (kind == "intent-submitted") {
    require_fields(p, {"intent_id", "text"}, kind);
    event.payload = IntentSubmittedEvent{str(p, "intent_id"), str(p, "text")};
  } else if (kind == "policy-applied") {
    require_fields(p, {"command_id", "policy_id", "verb"}, kind);
    event.payload =
        PolicyAppliedEvent{str(p, "command_id"), str(p, "policy_id"), str(p, "verb")};
  } else {
    malformed("unknown event kind '" + kind + "'");
  }
  return event;
}

std::string telemetry_to_jsonl(const TelemetryLog& log) {
  std::string out;
  for (const auto& event : log.events()) {
    out += event_to_json(event).dump();
    out += '\n';
  }
  return out;
}

TelemetryLog telemetry_from_jsonl(std::string_view text) {
  TelemetryLog log;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    json doc;
    try {
      doc = json::parse(line);
    } catch (const json::parse_error& e) {
      malformed("line " + std::to_string(line_no) + ": " + e.what());
    }
    log.append(event_from_json(doc));
  }
  return log;
}

}  // namespace scintent
