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
// IntentService ties the parser, configurator, knowledge base, controller and
// anomaly check together behind one serialized command path. Reads share a
// lock; every mutation takes it exclusively and, when the service is bound to
// a KB directory, saves the KB before releasing it.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "scintent/anomaly.hpp"
#include "scintent/controller.hpp"
#include "scintent/engine.hpp"
#include "scintent/error.hpp"
#include "scintent/intent.hpp"
#include "scintent/knowledge_base.hpp"

namespace scintent {

struct ServiceConfig {
  AnomalyRule anomaly;
  /// Pins the event clock to 0 so responses and saved documents reproduce.
  bool test_mode = false;
  /// When set, every mutation is saved here.
  std::optional<std::filesystem::path> kb_dir;
};

/// Reads {"anomaly": {"threshold": n, "window_minutes": w}}.
ServiceConfig service_config_from_json(const nlohmann::json& doc);

struct IntentSubmission {
  std::string text;
  bool dry_run = false;
  /// Store version the caller last saw; a mismatch is a stale-version error.
  std::optional<std::uint64_t> expected_version;
};

struct SubmissionResponse {
  int status = 200;
  std::optional<IntentSpec> intent;
  std::optional<ParseError> parse_error;
  std::optional<CompilationResult> compilation;
  bool applied = false;
  std::vector<std::vector<std::string>> rendered_policies;
  std::vector<AdminAlert> raised_alerts;
  std::uint64_t store_version = 0;
  std::optional<Error> error;
};

nlohmann::json submission_to_json(const SubmissionResponse& response);
nlohmann::json error_to_json(const Error& error);

/// HTTP status used for each error code.
int http_status_for(ErrorCode code);

class IntentService {
 public:
  IntentService(KnowledgeBase kb, ServiceConfig config);

  /// Loads the KB from `dir` and binds the service to it.
  static std::unique_ptr<IntentService> open(const std::filesystem::path& dir,
                                             ServiceConfig config);

  IntentService(const IntentService&) = delete;
  IntentService& operator=(const IntentService&) = delete;

  /// parse -> compile -> (unless dry run) apply, alert, enact, record.
  SubmissionResponse submit(const IntentSubmission& submission);

  /// Throws Error with kUnknownUser, kUnknownAsset or kOutOfRange.
  Decision query_decision(std::string_view user, std::string_view asset, int minute,
                          bool record);

  AdminAlert acknowledge_alert(std::string_view alert_id);

  /// Returns false when the synonym was already present.
  bool add_vocabulary(std::string_view slot, std::string_view canonical,
                      std::string_view synonym);

  nlohmann::json policies_json() const;
  /// Pending alerts, optionally only those addressed to `admin`.
  nlohmann::json alerts_json(std::optional<std::string_view> admin) const;
  nlohmann::json hierarchy_json() const;
  nlohmann::json vocabulary_json() const;
  nlohmann::json anomalies_json() const;
  nlohmann::json enforcement_json() const;

  KnowledgeBase snapshot() const;
  std::uint64_t store_version() const;

 private:
  void persist_locked();

  mutable std::shared_mutex mutex_;
  KnowledgeBase kb_;
  ServiceConfig config_;
  Controller controller_;
};

}  // namespace scintent
