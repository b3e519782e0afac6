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

#include "scintent/policy.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "scintent/error.hpp"

namespace scintent {

using nlohmann::json;

std::string_view policy_status_name(PolicyStatus status) {
  return status == PolicyStatus::kActive ? "active" : "superseded";
}

std::string policy_id_for(std::uint64_t seq) { return "p-" + std::to_string(seq); }

std::vector<PolicyAction> PolicyProgram::actions() const {
  std::vector<PolicyAction> out;
  out.push_back({ActionKind::kCheckUser, user, std::nullopt, {}, {}});

  PolicyAction access;
  access.kind = effect == Effect::kAllow ? ActionKind::kAllowAccess : ActionKind::kBlockAccess;
  access.user = user;
  access.scope = scope;
  for (const auto& e : exceptions) access.exceptions.push_back(e.scope.node_id);
  out.push_back(std::move(access));

  PolicyAction alert;
  alert.kind = ActionKind::kAlertAdmin;
  alert.organization = scope.organization();
  out.push_back(std::move(alert));
  return out;
}

void PolicyProgram::add_exception(const ExceptionEntry& entry) {
  auto it = std::lower_bound(
      exceptions.begin(), exceptions.end(), entry.scope.node_id,
      [](const ExceptionEntry& e, const std::string& id) { return e.scope.node_id < id; });
  if (it != exceptions.end() && it->scope.node_id == entry.scope.node_id) {
    it->shifts = it->shifts | entry.shifts;
  } else {
    exceptions.insert(it, entry);
  }
}

bool PolicyProgram::excepts(const HierarchyModel& model, const ScopePath& domain,
                            Shift shift) const {
  return std::any_of(exceptions.begin(), exceptions.end(), [&](const ExceptionEntry& e) {
    return e.shifts.contains(shift) && scope_contains(model, e.scope, domain);
  });
}

std::vector<std::string> render_policy(const PolicyProgram& program) {
  std::vector<std::string> lines;
  for (const auto& action : program.actions()) {
    switch (action.kind) {
      case ActionKind::kCheckUser:
        lines.push_back("check " + action.user + " in database of Users");
        break;
      case ActionKind::kAllowAccess:
      case ActionKind::kBlockAccess: {
        std::string line = (action.kind == ActionKind::kAllowAccess ? "allow " : "block ") +
                           action.user + " to access assets in " + action.scope->node_id;
        for (std::size_t i = 0; i < action.exceptions.size(); ++i) {
          line += (i == 0 ? " except " : ", ") + action.exceptions[i];
        }
        lines.push_back(std::move(line));
        break;
      }
      case ActionKind::kAlertAdmin:
        lines.push_back("alert admin in " + action.organization);
        break;
    }
  }
  return lines;
}

const PolicyProgram* PolicyStore::find(std::string_view id) const {
  auto it = std::find_if(policies_.begin(), policies_.end(),
                         [&](const PolicyProgram& p) { return p.id == id; });
  return it == policies_.end() ? nullptr : &*it;
}

PolicyProgram* PolicyStore::find(std::string_view id) {
  return const_cast<PolicyProgram*>(std::as_const(*this).find(id));
}

std::uint64_t PolicyStore::next_sequence() const {
  std::uint64_t next = 1;
  for (const auto& p : policies_) next = std::max(next, p.provenance.seq + 1);
  return next;
}

std::string PolicyStore::next_intent_id() const {
  return "i-" + std::to_string(version_ + 1);
}

// -----------------------------------------------------------------------------
// JSON
// -----------------------------------------------------------------------------

json policy_to_json(const PolicyProgram& program) {
  json exceptions = json::array();
  for (const auto& e : program.exceptions) {
    exceptions.push_back({{"spot", e.scope.node_id}, {"shifts", shifts_to_json(e.shifts)}});
  }
  return {{"id", program.id},
          {"user", program.user},
          {"effect", effect_name(program.effect)},
          {"scope",
           {{"kind", scope_kind_name(program.scope.kind)}, {"spot", program.scope.node_id}}},
          {"exceptions", std::move(exceptions)},
          {"shifts", shifts_to_json(program.timeframes)},
          {"status", policy_status_name(program.status)},
          {"provenance",
           {{"intent_id", program.provenance.intent_id}, {"seq", program.provenance.seq}}}};
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedDocument, "policy store: " + what);
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    malformed(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

std::string string_field(const json& obj, const char* key) {
  const auto& value = field(obj, key);
  if (!value.is_string()) malformed(std::string("field '") + key + "' must be a string");
  return value.get<std::string>();
}

}  // namespace

PolicyProgram policy_from_json(const json& doc, const HierarchyModel& model) {
  PolicyProgram p;
  p.id = string_field(doc, "id");
  p.user = string_field(doc, "user");
  if (!model.has_user(p.user)) {
    throw Error(ErrorCode::kCrossReference,
                "policy " + p.id + " names unknown user '" + p.user + "'");
  }

  const auto effect = string_field(doc, "effect");
  if (effect != "allow" && effect != "block") malformed("unknown effect '" + effect + "'");
  p.effect = effect == "allow" ? Effect::kAllow : Effect::kBlock;

  const auto& scope = field(doc, "scope");
  const auto kind_name = string_field(scope, "kind");
  const auto kind = scope_kind_from_name(kind_name);
  if (!kind) malformed("unknown scope kind '" + kind_name + "'");
  const auto spot = string_field(scope, "spot");
  const ScopePath* path = model.find_node(spot);
  if (path == nullptr || path->kind != *kind) {
    throw Error(ErrorCode::kCrossReference,
                "policy " + p.id + " names " + kind_name + " '" + spot +
                    "' which is absent from the model");
  }
  p.scope = *path;

  const auto& exceptions = field(doc, "exceptions");
  if (!exceptions.is_array()) malformed("exceptions must be an array");
  for (const auto& e : exceptions) {
    const auto exception_spot = string_field(e, "spot");
    const ScopePath* exception_path = model.find_node(exception_spot);
    if (exception_path == nullptr) {
      throw Error(ErrorCode::kCrossReference,
                  "policy " + p.id + " excepts '" + exception_spot +
                      "' which is absent from the model");
    }
    if (*exception_path == p.scope || !scope_contains(model, p.scope, *exception_path)) {
      throw Error(ErrorCode::kCrossReference,
                  "policy " + p.id + " exception '" + exception_spot +
                      "' is not strictly inside " + spot);
    }
    p.add_exception({*exception_path, shifts_from_json(field(e, "shifts"))});
  }

  p.timeframes = shifts_from_json(field(doc, "shifts"));

  const auto status = string_field(doc, "status");
  if (status != "active" && status != "superseded") malformed("unknown status '" + status + "'");
  p.status = status == "active" ? PolicyStatus::kActive : PolicyStatus::kSuperseded;

  const auto& provenance = field(doc, "provenance");
  p.provenance.intent_id = string_field(provenance, "intent_id");
  const auto& seq = field(provenance, "seq");
  if (!seq.is_number_unsigned()) malformed("provenance.seq must be a non-negative integer");
  p.provenance.seq = seq.get<std::uint64_t>();
  return p;
}

json policy_store_to_json(const PolicyStore& store) {
  json policies = json::array();
  for (const auto& p : store.policies()) policies.push_back(policy_to_json(p));
  return {{"version", store.version()}, {"policies", std::move(policies)}};
}

PolicyStore policy_store_from_json(const json& doc, const HierarchyModel& model) {
  const auto& version = field(doc, "version");
  if (!version.is_number_unsigned()) malformed("version must be a non-negative integer");
  const auto& policies = field(doc, "policies");
  if (!policies.is_array()) malformed("policies must be an array");

  PolicyStore store;
  store.version_ = version.get<std::uint64_t>();
  std::set<std::string> ids;
  for (const auto& item : policies) {
    auto program = policy_from_json(item, model);
    if (!ids.insert(program.id).second) malformed("duplicate policy id '" + program.id + "'");
    store.policies_.push_back(std::move(program));
  }
  return store;
}

}  // namespace scintent
