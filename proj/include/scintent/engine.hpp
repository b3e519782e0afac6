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
// Policy configurator: turns parsed intents into per-user policy programs,
// reconciles them with the stored policies, and answers access queries.
//
// Conflict rules, for a candidate C and an active stored policy P of the same
// user with the opposite effect and overlapping shifts O:
//   P strictly inside C   C gets exception (P.scope, O)
//   C strictly inside P   P gets exception (C.scope, O)
//   same scope            C takes over O; P keeps any remaining shifts and is
//                         superseded once none remain
// Each resolution raises one alert to the owning organization's admin.
//
// Decisions pick, among applicable policies, the deepest scope and then the
// highest sequence number. Nothing applicable means blocked (default deny).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "scintent/alert.hpp"
#include "scintent/intent.hpp"
#include "scintent/model.hpp"
#include "scintent/policy.hpp"

namespace scintent {

enum class ConflictRelation { kExistingInsideNew, kNewInsideExisting, kEqualScope };
enum class ResolutionKind { kCarveExceptionInNew, kCarveExceptionInExisting, kSupersedeExisting };
enum class Verdict { kAllowed, kBlocked };

std::string_view relation_name(ConflictRelation relation);
std::string_view resolution_kind_name(ResolutionKind kind);
std::string_view verdict_name(Verdict verdict);

struct Conflict {
  std::string new_intent;
  std::string candidate_policy;
  std::string existing_policy;
  ConflictRelation relation = ConflictRelation::kEqualScope;
  ShiftSet overlapping_shifts;

  bool operator==(const Conflict&) const = default;
};

struct Resolution {
  ResolutionKind kind = ResolutionKind::kSupersedeExisting;
  std::string target_policy;
  std::optional<ExceptionEntry> exception;  // carve kinds only
  ShiftSet superseded_shifts;               // supersede only

  bool operator==(const Resolution&) const = default;
};

/// A proposal: nothing is persisted until apply().
struct CompilationResult {
  std::string intent_id;
  std::uint64_t base_version = 0;
  std::vector<PolicyProgram> programs;
  std::vector<Conflict> conflicts;
  std::vector<Resolution> resolutions;
  std::vector<AdminAlert> alerts;
};

/// Policy ids touched by apply(), grouped by what the controller must do.
struct ApplyOutcome {
  std::vector<std::string> installed;
  std::vector<std::string> amended;
  std::vector<std::string> revoked;
};

struct Decision {
  Verdict verdict = Verdict::kBlocked;
  std::vector<std::string> justification;  // most specific first
  bool default_applied = true;

  bool operator==(const Decision&) const = default;
};

/// Throws Error with kUnknownUser, kUnknownSpot or kKindMismatch.
CompilationResult compile_intent(const IntentSpec& spec, const HierarchyModel& model,
                                 const PolicyStore& store);

std::vector<Conflict> detect_conflicts(const PolicyProgram& candidate,
                                       const PolicyStore& store,
                                       const HierarchyModel& model);

Resolution resolve_conflict(const Conflict& conflict, const PolicyProgram& candidate,
                            const PolicyStore& store);

/// Throws Error(kStaleVersion) when `store` moved past result.base_version.
ApplyOutcome apply(const CompilationResult& result, PolicyStore& store);

/// Throws Error with kUnknownUser, kUnknownAsset or kOutOfRange.
Decision decide(const PolicyStore& store, const HierarchyModel& model,
                std::string_view user, std::string_view asset, int minute);

nlohmann::json conflict_to_json(const Conflict& conflict);
nlohmann::json resolution_to_json(const Resolution& resolution);
nlohmann::json compilation_to_json(const CompilationResult& result);
nlohmann::json decision_to_json(const Decision& decision);

}  // namespace scintent
