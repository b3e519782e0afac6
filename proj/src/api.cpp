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

#include "scintent/api.hpp"

#include <optional>
#include <string_view>

namespace scintent {

using nlohmann::json;

namespace {

json parse_body(const std::string& text) {
  json body;
  try {
    body = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedDocument, std::string("invalid JSON body: ") + e.what());
  }
  if (!body.is_object()) throw Error(ErrorCode::kMalformedDocument, "body must be a JSON object");
  return body;
}

std::string string_member(const json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end() || !it->is_string()) {
    throw Error(ErrorCode::kMalformedDocument,
                std::string("missing string field '") + key + "'");
  }
  return it->get<std::string>();
}

ApiReply route(IntentService& service, const ApiRequest& req) {
  const std::string_view path = req.path;
  const bool get = req.method == "GET";
  const bool post = req.method == "POST";

  if (post && path == "/intents") {
    const json body = parse_body(req.body);
    IntentSubmission submission;
    submission.text = string_member(body, "text");
    if (auto it = body.find("dry_run"); it != body.end()) submission.dry_run = it->get<bool>();
    if (auto it = body.find("expected_version"); it != body.end() && !it->is_null()) {
      submission.expected_version = it->get<std::uint64_t>();
    }
    const auto response = service.submit(submission);
    return {response.status, submission_to_json(response)};
  }
  if (post && path == "/decisions/query") {
    const json body = parse_body(req.body);
    const auto time = string_member(body, "time");
    const auto minute = parse_clock_time(time);
    if (!minute) {
      throw Error(ErrorCode::kOutOfRange, "time '" + time + "' is not a valid HH:MM");
    }
    const auto decision = service.query_decision(
        string_member(body, "user"), string_member(body, "asset"), *minute, req.record);
    return {200, decision_to_json(decision)};
  }
  if (get && path == "/policies") return {200, service.policies_json()};
  if (get && path == "/alerts") {
    std::optional<std::string_view> admin;
    if (auto it = req.params.find("admin"); it != req.params.end()) admin = it->second;
    return {200, service.alerts_json(admin)};
  }
  if (post && path.starts_with("/alerts/") && path.ends_with("/ack")) {
    const auto id = path.substr(8, path.size() - 8 - 4);
    if (!id.empty() && id.find('/') == std::string_view::npos) {
      return {200, alert_to_json(service.acknowledge_alert(id))};
    }
  }
  if (get && path == "/hierarchy") return {200, service.hierarchy_json()};
  if (get && path == "/vocabulary") return {200, service.vocabulary_json()};
  if (post && path == "/vocabulary") {
    const json body = parse_body(req.body);
    const bool added =
        service.add_vocabulary(string_member(body, "slot"), string_member(body, "canonical"),
                               string_member(body, "synonym"));
    return {200, {{"added", added}, {"vocabulary", service.vocabulary_json()}}};
  }
  if (get && path == "/telemetry/anomalies") return {200, service.anomalies_json()};
  if (get && path == "/debug/enforcement") return {200, service.enforcement_json()};

  return {404,
          {{"error",
            {{"code", "not-found"}, {"message", req.method + " " + req.path + " is not a route"}}}}};
}

}  // namespace

ApiReply dispatch(IntentService& service, const ApiRequest& request) {
  try {
    return route(service, request);
  } catch (const Error& e) {
    return {http_status_for(e.code()), {{"error", error_to_json(e)}}};
  } catch (const json::exception& e) {
    return {400, {{"error", error_to_json(Error(ErrorCode::kMalformedDocument, e.what()))}}};
  }
}

}  // namespace scintent
