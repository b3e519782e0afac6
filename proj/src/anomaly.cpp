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

#include "scintent/anomaly.hpp"

#include <deque>
#include <map>

#include "scintent/error.hpp"

namespace scintent {

void AnomalyRule::validate() const {
  if (threshold < 1 || window_minutes < 1) {
    throw Error(ErrorCode::kOutOfRange,
                "anomaly rule needs threshold >= 1 and window_minutes >= 1");
  }
}

namespace {

struct Hit {
  std::int64_t timestamp;
  const DecisionEvent* decision;
};

}  // namespace

std::vector<AnomalyFlag> anomaly_scan(const TelemetryLog& log, const AnomalyRule& rule) {
  rule.validate();
  std::map<std::string, std::deque<Hit>> windows;
  std::map<std::string, AnomalyFlag> flags;

  for (const auto& event : log.events()) {
    const auto* decision = std::get_if<DecisionEvent>(&event.payload);
    if (decision == nullptr || decision->verdict != Verdict::kBlocked) continue;
    if (flags.contains(decision->user)) continue;

    auto& window = windows[decision->user];
    window.push_back({event.timestamp, decision});
    while (window.front().timestamp <= event.timestamp - rule.window_minutes) {
      window.pop_front();
    }
    if (static_cast<int>(window.size()) < rule.threshold) continue;

    // Most-hit asset in the window; ties go to the smallest asset id.
    std::map<std::string, std::pair<int, std::string>> per_asset;
    for (const auto& hit : window) {
      auto& slot = per_asset[hit.decision->asset];
      ++slot.first;
      slot.second = hit.decision->organization;
    }
    auto best = per_asset.begin();
    for (auto it = per_asset.begin(); it != per_asset.end(); ++it) {
      if (it->second.first > best->second.first) best = it;
    }

    AnomalyFlag flag;
    flag.user = decision->user;
    flag.count = static_cast<int>(window.size());
    flag.window_end = event.timestamp;
    flag.organization = best->second.second;
    flag.suggested_intent = suggest_block_intent(flag);
    flags.emplace(flag.user, std::move(flag));
  }

  std::vector<AnomalyFlag> out;
  for (auto& [user, flag] : flags) out.push_back(std::move(flag));
  return out;
}

std::string suggest_block_intent(const AnomalyFlag& flag) {
  return flag.user + " is blocked to access to organization " + flag.organization;
}

nlohmann::json anomaly_flag_to_json(const AnomalyFlag& flag) {
  return {{"user", flag.user},
          {"count", flag.count},
          {"window_end", flag.window_end},
          {"organization", flag.organization},
          {"suggested_intent", flag.suggested_intent}};
}

}  // namespace scintent
