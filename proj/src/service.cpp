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

#include "scintent/service.hpp"

#include <chrono>
#include <mutex>

namespace scintent {

using nlohmann::json;

ServiceConfig service_config_from_json(const json& doc) {
  ServiceConfig config;
  if (!doc.is_object()) {
    throw Error(ErrorCode::kMalformedDocument, "service config must be an object");
  }
  if (auto it = doc.find("anomaly"); it != doc.end()) {
    if (!it->is_object()) {
      throw Error(ErrorCode::kMalformedDocument, "'anomaly' must be an object");
    }
    if (it->contains("threshold")) config.anomaly.threshold = it->at("threshold").get<int>();
    if (it->contains("window_minutes")) {
      config.anomaly.window_minutes = it->at("window_minutes").get<int>();
    }
  }
  config.anomaly.validate();
  return config;
}

int http_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownUser:
    case ErrorCode::kUnknownSpot:
    case ErrorCode::kKindMismatch:
    case ErrorCode::kUnknownAsset:
    case ErrorCode::kUnknownPolicy:
    case ErrorCode::kUnknownAlert:
      return 404;
    case ErrorCode::kStaleVersion:
    case ErrorCode::kVocabularyCollision:
    case ErrorCode::kAlreadyAcknowledged:
    case ErrorCode::kDuplicateCommand:
      return 409;
    case ErrorCode::kStorage:
      return 500;
    default:
      return 400;
  }
}

json error_to_json(const Error& error) {
  json body = {{"code", error_code_name(error.code())}, {"message", error.what()}};
  if (const auto* parse = dynamic_cast<const ParseError*>(&error)) {
    body["position"] = parse->position();
    body["expected"] = parse->expected();
    body["found"] = parse->found();
  }
  return body;
}

json submission_to_json(const SubmissionResponse& response) {
  json parse = nullptr;
  if (response.intent) {
    parse = {{"ok", true}, {"intent", intent_to_json(*response.intent)}};
  } else if (response.parse_error) {
    parse = {{"ok", false}, {"error", error_to_json(*response.parse_error)}};
  }
  // std::optional<Error> slices a ParseError, so report the parse failure itself.
  json error = nullptr;
  if (response.parse_error) {
    error = error_to_json(*response.parse_error);
  } else if (response.error) {
    error = error_to_json(*response.error);
  }
  json alerts = json::array();
  for (const auto& a : response.raised_alerts) alerts.push_back(alert_to_json(a));
  return {{"parse", std::move(parse)},
          {"compilation",
           response.compilation ? compilation_to_json(*response.compilation) : json(nullptr)},
          {"applied", response.applied},
          {"rendered_policies", response.rendered_policies},
          {"raised_alerts", std::move(alerts)},
          {"store_version", response.store_version},
          {"error", error}};
}

namespace {

EventClock make_clock(bool test_mode) {
  if (test_mode) return [] { return std::int64_t{0}; };
  return [] {
    using namespace std::chrono;
    return duration_cast<minutes>(system_clock::now().time_since_epoch()).count();
  };
}

}  // namespace

IntentService::IntentService(KnowledgeBase kb, ServiceConfig config)
    : kb_(std::move(kb)),
      config_(std::move(config)),
      controller_(kb_, make_clock(config_.test_mode)) {
  config_.anomaly.validate();
  controller_.restore();
}

std::unique_ptr<IntentService> IntentService::open(const std::filesystem::path& dir,
                                                   ServiceConfig config) {
  config.kb_dir = dir;
  return std::make_unique<IntentService>(kb_load(KbPaths::in(dir)), std::move(config));
}

void IntentService::persist_locked() {
  if (config_.kb_dir) kb_save(kb_, KbPaths::in(*config_.kb_dir));
}

SubmissionResponse IntentService::submit(const IntentSubmission& submission) {
  std::unique_lock lock(mutex_);
  SubmissionResponse response;
  response.store_version = kb_.policies.version();

  if (submission.text.find_first_not_of(" \t\r\n") == std::string::npos) {
    response.status = 400;
    response.parse_error = ParseError(0, "intent text", "");
    response.error = Error(ErrorCode::kParse, "intent text must not be empty");
    return response;
  }

  try {
    response.intent = parse_intent(submission.text, kb_.vocabulary);
  } catch (const ParseError& e) {
    response.status = 400;
    response.parse_error = e;
    response.error = e;
    return response;
  }

  try {
    response.compilation = compile_intent(*response.intent, kb_.model, kb_.policies);
  } catch (const Error& e) {
    response.status = http_status_for(e.code());
    response.error = e;
    return response;
  }
  for (const auto& program : response.compilation->programs) {
    response.rendered_policies.push_back(render_policy(program));
  }

  if (submission.expected_version &&
      *submission.expected_version != kb_.policies.version()) {
    response.status = 409;
    response.error = Error(ErrorCode::kStaleVersion,
                           "store is at version " + std::to_string(kb_.policies.version()) +
                               ", submission expected " +
                               std::to_string(*submission.expected_version));
    return response;
  }
  if (submission.dry_run) return response;

  const auto& result = *response.compilation;
  ApplyOutcome outcome;
  try {
    outcome = apply(result, kb_.policies);
  } catch (const Error& e) {
    response.status = http_status_for(e.code());
    response.error = e;
    return response;
  }

  const EventClock clock = make_clock(config_.test_mode);
  record_event(kb_, {clock(), IntentSubmittedEvent{result.intent_id, submission.text}});
  for (const auto& conflict : result.conflicts) {
    record_event(kb_, {clock(), ConflictEvent{conflict}});
  }
  for (const auto& alert : result.alerts) {
    response.raised_alerts.push_back(controller_.raise_alert(alert));
  }
  for (const auto& id : outcome.revoked) {
    controller_.enact(controller_.make_command(id, CommandVerb::kRevoke));
  }
  for (const auto& id : outcome.amended) {
    controller_.enact(controller_.make_command(id, CommandVerb::kAmend));
  }
  for (const auto& id : outcome.installed) {
    controller_.enact(controller_.make_command(id, CommandVerb::kInstall));
  }

  response.applied = true;
  response.store_version = kb_.policies.version();
  persist_locked();
  return response;
}

Decision IntentService::query_decision(std::string_view user, std::string_view asset,
                                       int minute, bool record) {
  if (!record) {
    std::shared_lock lock(mutex_);
    return decide(kb_.policies, kb_.model, user, asset, minute);
  }
  std::unique_lock lock(mutex_);
  Decision decision = decide(kb_.policies, kb_.model, user, asset, minute);
  DecisionEvent event;
  event.user = std::string(user);
  event.asset = std::string(asset);
  event.organization = kb_.model.asset_domain(asset).organization();
  event.minute = minute;
  event.verdict = decision.verdict;
  event.policies = decision.justification;
  event.default_applied = decision.default_applied;
  record_event(kb_, {make_clock(config_.test_mode)(), std::move(event)});
  persist_locked();
  return decision;
}

AdminAlert IntentService::acknowledge_alert(std::string_view alert_id) {
  std::unique_lock lock(mutex_);
  AdminAlert alert = controller_.acknowledge_alert(alert_id);
  persist_locked();
  return alert;
}

bool IntentService::add_vocabulary(std::string_view slot, std::string_view canonical,
                                   std::string_view synonym) {
  const auto parsed = slot_from_name(slot);
  if (!parsed) {
    throw Error(ErrorCode::kUnknownSlot, "unknown vocabulary slot '" + std::string(slot) + "'");
  }
  std::unique_lock lock(mutex_);
  const bool added = vocab_add(kb_, *parsed, canonical, synonym);
  if (added) persist_locked();
  return added;
}

json IntentService::policies_json() const {
  std::shared_lock lock(mutex_);
  json out = json::array();
  for (const auto& p : kb_.policies.policies()) {
    auto doc = policy_to_json(p);
    doc["rendered"] = render_policy(p);
    out.push_back(std::move(doc));
  }
  return out;
}

json IntentService::alerts_json(std::optional<std::string_view> admin) const {
  std::shared_lock lock(mutex_);
  json out = json::array();
  for (const auto& alert : controller_.alerts()) {
    if (alert.acknowledged) continue;
    if (admin && alert.admin != *admin) continue;
    out.push_back(alert_to_json(alert));
  }
  return out;
}

json IntentService::hierarchy_json() const {
  std::shared_lock lock(mutex_);
  return model_to_json(kb_.model);
}

json IntentService::vocabulary_json() const {
  std::shared_lock lock(mutex_);
  return vocabulary_to_json(kb_.vocabulary);
}

json IntentService::anomalies_json() const {
  std::shared_lock lock(mutex_);
  json out = json::array();
  for (const auto& flag : anomaly_scan(kb_.telemetry, config_.anomaly)) {
    out.push_back(anomaly_flag_to_json(flag));
  }
  return out;
}

json IntentService::enforcement_json() const {
  std::shared_lock lock(mutex_);
  return enforcement_to_json(controller_);
}

KnowledgeBase IntentService::snapshot() const {
  std::shared_lock lock(mutex_);
  return kb_;
}

std::uint64_t IntentService::store_version() const {
  std::shared_lock lock(mutex_);
  return kb_.policies.version();
}

}  // namespace scintent
