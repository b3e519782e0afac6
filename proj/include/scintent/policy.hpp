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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "scintent/intent.hpp"
#include "scintent/model.hpp"
#include "scintent/shift.hpp"

namespace scintent {

enum class PolicyStatus { kActive, kSuperseded };

std::string_view policy_status_name(PolicyStatus status);

/// Part of a policy scope excluded over some shifts.
struct ExceptionEntry {
  ScopePath scope;
  ShiftSet shifts;

  bool operator==(const ExceptionEntry&) const = default;
};

enum class ActionKind { kCheckUser, kAllowAccess, kBlockAccess, kAlertAdmin };

struct PolicyAction {
  ActionKind kind = ActionKind::kCheckUser;
  std::string user;                     // check-user, allow/block
  std::optional<ScopePath> scope;       // allow/block
  std::vector<std::string> exceptions;  // allow/block, sorted spot ids
  std::string organization;             // alert-admin
};

struct Provenance {
  std::string intent_id;
  std::uint64_t seq = 0;

  bool operator==(const Provenance&) const = default;
};

/// One user's compiled access rule. Exceptions are kept sorted by spot id
/// with at most one entry per spot.
struct PolicyProgram {
  std::string id;
  std::string user;
  Effect effect = Effect::kAllow;
  ScopePath scope;
  std::vector<ExceptionEntry> exceptions;
  ShiftSet timeframes = ShiftSet::all();
  Provenance provenance;
  PolicyStatus status = PolicyStatus::kActive;

  bool active() const { return status == PolicyStatus::kActive; }

  /// check-user, allow/block, alert-admin.
  std::vector<PolicyAction> actions() const;

  /// Adds or widens the exception for `entry.scope`.
  void add_exception(const ExceptionEntry& entry);

  /// True iff (domain, shift) falls inside one of the exceptions.
  bool excepts(const HierarchyModel& model, const ScopePath& domain,
               Shift shift) const;

  bool operator==(const PolicyProgram&) const = default;
};

/// "p-<seq>"
std::string policy_id_for(std::uint64_t seq);

/// Renders one line per action:
///   check <user> in database of Users
///   allow|block <user> to access assets in <spot>[ except <a>, <b>]
///   alert admin in <organization>
std::vector<std::string> render_policy(const PolicyProgram& program);

/// Versioned policy collection. The version advances once per apply.
class PolicyStore {
 public:
  std::uint64_t version() const { return version_; }
  const std::vector<PolicyProgram>& policies() const { return policies_; }

  const PolicyProgram* find(std::string_view id) const;
  PolicyProgram* find(std::string_view id);

  /// Highest provenance sequence + 1 (1 for an empty store).
  std::uint64_t next_sequence() const;
  /// Id the next applied intent will carry: "i-<version + 1>".
  std::string next_intent_id() const;

  void append(PolicyProgram program) { policies_.push_back(std::move(program)); }
  void bump_version() { ++version_; }

  bool operator==(const PolicyStore&) const = default;

 private:
  friend PolicyStore policy_store_from_json(const nlohmann::json&, const HierarchyModel&);

  std::uint64_t version_ = 0;
  std::vector<PolicyProgram> policies_;
};

nlohmann::json policy_to_json(const PolicyProgram& program);
/// Resolves spots against `model`; unresolvable references throw
/// Error(kCrossReference).
PolicyProgram policy_from_json(const nlohmann::json& doc, const HierarchyModel& model);

/// {"version": n, "policies": [...]}
nlohmann::json policy_store_to_json(const PolicyStore& store);
PolicyStore policy_store_from_json(const nlohmann::json& doc, const HierarchyModel& model);

}  // namespace scintent
