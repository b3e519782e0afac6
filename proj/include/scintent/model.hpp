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
// Supply-chain hierarchy: organizations contain realms, realms contain
// domains, and domains hold assets. Node and asset identifiers are unique
// across the whole model, so a bare identifier addresses exactly one node.
// The model is immutable once built.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace scintent {

enum class ScopeKind { kOrganization = 0, kRealm = 1, kDomain = 2 };

std::string_view scope_kind_name(ScopeKind kind);
std::optional<ScopeKind> scope_kind_from_name(std::string_view name);

/// Position of `kind` in an ancestry list: organization 0, realm 1, domain 2.
inline int scope_depth(ScopeKind kind) { return static_cast<int>(kind); }

/// Identifiers are `[a-z0-9-]+`.
bool is_valid_identifier(std::string_view id);

struct AssetRecord {
  std::string id;
  std::string description;

  bool operator==(const AssetRecord&) const = default;
};

struct UserRecord {
  std::string id;
  std::string display_name;

  bool operator==(const UserRecord&) const = default;
};

struct ScopeNode {
  std::string id;
  ScopeKind kind = ScopeKind::kOrganization;
  std::vector<ScopeNode> children;
  std::vector<AssetRecord> assets;  // domains only
  std::string admin;                // organizations only

  bool operator==(const ScopeNode&) const = default;
};

/// Canonical address of a node: its kind, id, and the ids from the owning
/// organization down to the node itself.
struct ScopePath {
  ScopeKind kind = ScopeKind::kOrganization;
  std::string node_id;
  std::vector<std::string> ancestry;

  const std::string& organization() const { return ancestry.front(); }
  bool operator==(const ScopePath&) const = default;
};

class HierarchyModel {
 public:
  HierarchyModel() = default;

  /// Validates the tree and builds the lookup indexes. Throws Error with
  /// kDuplicateId, kOrphanNode, or kMalformedId.
  static HierarchyModel build(std::vector<ScopeNode> organizations,
                              std::vector<UserRecord> users);

  const std::vector<ScopeNode>& organizations() const { return organizations_; }
  const std::vector<UserRecord>& users() const { return users_; }

  bool has_user(std::string_view user) const;
  bool has_asset(std::string_view asset) const;

  /// Path of any node, or nullptr when the id is not a node.
  const ScopePath* find_node(std::string_view node_id) const;

  /// Path of the domain holding `asset`. Throws Error(kUnknownAsset).
  const ScopePath& asset_domain(std::string_view asset) const;

  /// Admin identifier of an organization id. Throws Error(kUnknownSpot).
  const std::string& organization_admin(std::string_view organization) const;

  /// Every node path, sorted by id.
  std::vector<ScopePath> all_nodes() const;
  /// Every asset, sorted by id.
  std::vector<AssetRecord> all_assets() const;

  bool operator==(const HierarchyModel& other) const {
    return organizations_ == other.organizations_ && users_ == other.users_;
  }

 private:
  struct AssetEntry {
    AssetRecord record;
    std::string domain;
  };

  std::vector<ScopeNode> organizations_;
  std::vector<UserRecord> users_;
  std::map<std::string, ScopePath, std::less<>> nodes_;
  std::map<std::string, AssetEntry, std::less<>> assets_;
  std::map<std::string, std::string, std::less<>> admins_;
  std::map<std::string, std::size_t, std::less<>> user_index_;
};

/// Parses the hierarchy document. Unknown fields are rejected.
HierarchyModel load_model(const nlohmann::json& doc);
nlohmann::json model_to_json(const HierarchyModel& model);

/// Throws Error(kUnknownSpot) or Error(kKindMismatch).
ScopePath resolve_spot(const HierarchyModel& model, ScopeKind kind,
                       std::string_view spot);

/// True iff `inner` lies at or below `outer` in the tree.
bool scope_contains(const HierarchyModel& model, const ScopePath& outer,
                    const ScopePath& inner);

/// All assets transitively under `scope`, sorted by id.
std::vector<AssetRecord> assets_under(const HierarchyModel& model,
                                      const ScopePath& scope);

/// Admin of the organization owning `scope`.
std::string admin_of(const HierarchyModel& model, const ScopePath& scope);

}  // namespace scintent
