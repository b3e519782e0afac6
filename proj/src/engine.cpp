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

#include "scintent/engine.hpp"

#include <algorithm>
#include <tuple>

#include "scintent/error.hpp"

namespace scintent {

using nlohmann::json;

std::string_view relation_name(ConflictRelation relation) {
  switch (relation) {
    case ConflictRelation::kExistingInsideNew:
      return "existing-inside-new";
    case ConflictRelation::kNewInsideExisting:
      return "new-inside-existing";
    case ConflictRelation::kEqualScope:
      return "equal-scope";
  }
  return "equal-scope";
}

std::string_view resolution_kind_name(ResolutionKind kind) {
  switch (kind) {
    case ResolutionKind::kCarveExceptionInNew:
      return "carve-exception-in-new";
    case ResolutionKind::kCarveExceptionInExisting:
      return "carve-exception-in-existing";
    case ResolutionKind::kSupersedeExisting:
      return "supersede-existing";
  }
  return "supersede-existing";
}

std::string_view verdict_name(Verdict verdict) {
  return verdict == Verdict::kAllowed ? "allowed" : "blocked";
}

namespace {

std::string shift_list(ShiftSet shifts) {
  std::string out;
  for (Shift s : shifts.members()) {
    if (!out.empty()) out += ", ";
    out += shift_name(s);
  }
  return out;
}

AdminAlert alert_for(const Conflict& conflict, const Resolution& resolution,
                     const PolicyProgram& candidate, const HierarchyModel& model) {
  AdminAlert alert;
  alert.organization = candidate.scope.organization();
  alert.admin = admin_of(model, candidate.scope);
  alert.source = conflict.new_intent;
  alert.message = "conflict between " + conflict.candidate_policy + " (" +
                  conflict.new_intent + ") and " + conflict.existing_policy + ": " +
                  std::string(relation_name(conflict.relation)) + " over " +
                  shift_list(conflict.overlapping_shifts) + "; resolved by " +
                  std::string(resolution_kind_name(resolution.kind)) + " on " +
                  resolution.target_policy;
  if (resolution.exception) {
    alert.message += " except " + resolution.exception->scope.node_id;
  }
  return alert;
}

}  // namespace

CompilationResult compile_intent(const IntentSpec& spec, const HierarchyModel& model,
                                 const PolicyStore& store) {
  for (const auto& user : spec.users) {
    if (!model.has_user(user)) {
      throw Error(ErrorCode::kUnknownUser,
                  "user '" + user + "' is not in the database of Users");
    }
  }
  const ScopePath scope = resolve_spot(model, spec.scope_kind, spec.spot);

  CompilationResult result;
  result.intent_id = store.next_intent_id();
  result.base_version = store.version();

  std::uint64_t seq = store.next_sequence();
  for (const auto& user : spec.users) {
    PolicyProgram candidate;
    candidate.id = policy_id_for(seq);
    candidate.user = user;
    candidate.effect = spec.permission;
    candidate.scope = scope;
    candidate.timeframes = spec.timeframes;
    candidate.provenance = {result.intent_id, seq};
    ++seq;

    for (auto& conflict : detect_conflicts(candidate, store, model)) {
      auto resolution = resolve_conflict(conflict, candidate, store);
      if (resolution.kind == ResolutionKind::kCarveExceptionInNew) {
        candidate.add_exception(*resolution.exception);
      }
      result.alerts.push_back(alert_for(conflict, resolution, candidate, model));
      result.conflicts.push_back(std::move(conflict));
      result.resolutions.push_back(std::move(resolution));
    }
    result.programs.push_back(std::move(candidate));
  }
  return result;
}

std::vector<Conflict> detect_conflicts(const PolicyProgram& candidate,
                                       const PolicyStore& store,
                                       const HierarchyModel& model) {
  std::vector<Conflict> out;
  for (const auto& existing : store.policies()) {
    if (!existing.active() || existing.user != candidate.user ||
        existing.effect == candidate.effect) {
      continue;
    }
    const ShiftSet overlap = existing.timeframes & candidate.timeframes;
    if (overlap.empty()) continue;

    ConflictRelation relation;
    if (existing.scope == candidate.scope) {
      relation = ConflictRelation::kEqualScope;
    } else if (scope_contains(model, candidate.scope, existing.scope)) {
      relation = ConflictRelation::kExistingInsideNew;
    } else if (scope_contains(model, existing.scope, candidate.scope)) {
      relation = ConflictRelation::kNewInsideExisting;
    } else {
      continue;
    }
    out.push_back({candidate.provenance.intent_id, candidate.id, existing.id, relation,
                   overlap});
  }
  return out;
}

Resolution resolve_conflict(const Conflict& conflict, const PolicyProgram& candidate,
                            const PolicyStore& store) {
  const PolicyProgram* existing = store.find(conflict.existing_policy);
  if (existing == nullptr) {
    throw Error(ErrorCode::kUnknownPolicy, "unknown policy '" + conflict.existing_policy + "'");
  }
  Resolution resolution;
  switch (conflict.relation) {
    case ConflictRelation::kExistingInsideNew:
      resolution.kind = ResolutionKind::kCarveExceptionInNew;
      resolution.target_policy = candidate.id;
      resolution.exception = ExceptionEntry{existing->scope, conflict.overlapping_shifts};
      break;
    case ConflictRelation::kNewInsideExisting:
      resolution.kind = ResolutionKind::kCarveExceptionInExisting;
      resolution.target_policy = existing->id;
      resolution.exception = ExceptionEntry{candidate.scope, conflict.overlapping_shifts};
      break;
    case ConflictRelation::kEqualScope:
      resolution.kind = ResolutionKind::kSupersedeExisting;
      resolution.target_policy = existing->id;
      resolution.superseded_shifts = conflict.overlapping_shifts;
      break;
  }
  return resolution;
}

ApplyOutcome apply(const CompilationResult& result, PolicyStore& store) {
  if (result.base_version != store.version()) {
    throw Error(ErrorCode::kStaleVersion,
                "policy store is at version " + std::to_string(store.version()) +
                    " but the compilation was made against version " +
                    std::to_string(result.base_version) + "; recompile");
  }
  ApplyOutcome outcome;
  auto note = [](std::vector<std::string>& ids, const std::string& id) {
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  };

  for (const auto& resolution : result.resolutions) {
    if (resolution.kind == ResolutionKind::kCarveExceptionInNew) continue;
    PolicyProgram* target = store.find(resolution.target_policy);
    if (target == nullptr) {
      throw Error(ErrorCode::kUnknownPolicy,
                  "unknown policy '" + resolution.target_policy + "'");
    }
    if (resolution.kind == ResolutionKind::kCarveExceptionInExisting) {
      target->add_exception(*resolution.exception);
    } else {
      const ShiftSet remaining = target->timeframes - resolution.superseded_shifts;
      if (remaining.empty()) {
        target->status = PolicyStatus::kSuperseded;
      } else {
        target->timeframes = remaining;
      }
    }
  }
  // Superseded beats amended when one apply touched a policy twice.
  for (const auto& resolution : result.resolutions) {
    if (resolution.kind == ResolutionKind::kCarveExceptionInNew) continue;
    const PolicyProgram* target = store.find(resolution.target_policy);
    if (target->active()) {
      note(outcome.amended, target->id);
    } else {
      note(outcome.revoked, target->id);
    }
  }
  std::erase_if(outcome.amended, [&](const std::string& id) {
    return std::find(outcome.revoked.begin(), outcome.revoked.end(), id) !=
           outcome.revoked.end();
  });

  for (const auto& program : result.programs) {
    store.append(program);
    outcome.installed.push_back(program.id);
  }
  store.bump_version();
  return outcome;
}

Decision decide(const PolicyStore& store, const HierarchyModel& model,
                std::string_view user, std::string_view asset, int minute) {
  if (!model.has_user(user)) {
    throw Error(ErrorCode::kUnknownUser, "unknown user '" + std::string(user) + "'");
  }
  const ScopePath& domain = model.asset_domain(asset);
  const Shift shift = shift_of(minute);

  std::vector<const PolicyProgram*> applicable;
  for (const auto& p : store.policies()) {
    if (p.active() && p.user == user && p.timeframes.contains(shift) &&
        scope_contains(model, p.scope, domain) && !p.excepts(model, domain, shift)) {
      applicable.push_back(&p);
    }
  }
  std::sort(applicable.begin(), applicable.end(),
            [](const PolicyProgram* a, const PolicyProgram* b) {
              return std::tuple(scope_depth(a->scope.kind), a->provenance.seq) >
                     std::tuple(scope_depth(b->scope.kind), b->provenance.seq);
            });

  Decision decision;
  if (applicable.empty()) return decision;
  decision.default_applied = false;
  decision.verdict =
      applicable.front()->effect == Effect::kAllow ? Verdict::kAllowed : Verdict::kBlocked;
  for (const auto* p : applicable) decision.justification.push_back(p->id);
  return decision;
}

// -----------------------------------------------------------------------------
// JSON
// -----------------------------------------------------------------------------

json conflict_to_json(const Conflict& conflict) {
  return {{"new_intent", conflict.new_intent},
          {"candidate_policy", conflict.candidate_policy},
          {"existing_policy", conflict.existing_policy},
          {"relation", relation_name(conflict.relation)},
          {"overlapping_shifts", shifts_to_json(conflict.overlapping_shifts)}};
}

json resolution_to_json(const Resolution& resolution) {
  json out = {{"kind", resolution_kind_name(resolution.kind)},
              {"target_policy", resolution.target_policy}};
  if (resolution.exception) {
    out["exception"] = {{"spot", resolution.exception->scope.node_id},
                        {"shifts", shifts_to_json(resolution.exception->shifts)}};
  } else {
    out["exception"] = nullptr;
  }
  if (resolution.kind == ResolutionKind::kSupersedeExisting) {
    out["superseded_shifts"] = shifts_to_json(resolution.superseded_shifts);
  }
  return out;
}

json compilation_to_json(const CompilationResult& result) {
  json programs = json::array();
  for (const auto& p : result.programs) {
    auto doc = policy_to_json(p);
    doc["rendered"] = render_policy(p);
    programs.push_back(std::move(doc));
  }
  json conflicts = json::array();
  for (const auto& c : result.conflicts) conflicts.push_back(conflict_to_json(c));
  json resolutions = json::array();
  for (const auto& r : result.resolutions) resolutions.push_back(resolution_to_json(r));
  json alerts = json::array();
  for (const auto& a : result.alerts) alerts.push_back(alert_to_json(a));
  return {{"intent_id", result.intent_id},
          {"base_version", result.base_version},
          {"programs", std::move(programs)},
          {"conflicts", std::move(conflicts)},
          {"resolutions", std::move(resolutions)},
          {"alerts", std::move(alerts)}};
}

json decision_to_json(const Decision& decision) {
  return {{"verdict", verdict_name(decision.verdict)},
          {"justification", decision.justification},
          {"default_applied", decision.default_applied}};
}

}  // namespace scintent
