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
// Behavioral check over decision telemetry: a user who collects N blocked
// decisions inside W minutes is flagged, and a block intent is suggested for
// the organization they hit most. Suggestions are advisory only.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "scintent/telemetry.hpp"

namespace scintent {

struct AnomalyRule {
  int threshold = 5;        // N >= 1
  int window_minutes = 60;  // W >= 1

  /// Throws Error(kOutOfRange) unless both fields are >= 1.
  void validate() const;
};

struct AnomalyFlag {
  std::string user;
  int count = 0;
  std::int64_t window_end = 0;
  std::string organization;
  std::string suggested_intent;

  bool operator==(const AnomalyFlag&) const = default;
};

/// Blocked decisions with timestamps in (end - W, end] form a window. Each
/// user is flagged at most once, at the first event that brings a window to
/// N. Flags come out sorted by user.
std::vector<AnomalyFlag> anomaly_scan(const TelemetryLog& log, const AnomalyRule& rule);

/// "<user> is blocked to access to organization <org>"
std::string suggest_block_intent(const AnomalyFlag& flag);

/// Signature of a scorer that can stand in for anomaly_scan.
using AnomalyScorer =
    std::function<std::vector<AnomalyFlag>(const TelemetryLog&, const AnomalyRule&)>;

nlohmann::json anomaly_flag_to_json(const AnomalyFlag& flag);

}  // namespace scintent
