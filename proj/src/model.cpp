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

#include "scintent/model.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "scintent/error.hpp"

namespace scintent {

using nlohmann::json;

std::string_view scope_kind_name(ScopeKind kind) {
  switch (kind) {
    case ScopeKind::kOrganization:
      return "organization";
    case ScopeKind::kRealm:
      return "realm";
    case ScopeKind::kDomain:
      return "domain";
  }
  return "organization";
}

std::optional<ScopeKind> scope_kind_from_name(std::string_view name) {
  if (name == "organization") return ScopeKind::kOrganization;
  if (name == "realm") return ScopeKind::kRealm;
  if (name == "domain") return ScopeKind::kDomain;
  return std::nullopt;
}

bool is_valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
  });
}

namespace {

void require_identifier(std::string_view id, std::string_view what) {
  if (!is_valid_identifier(id)) {
    throw Error(ErrorCode::kMalformedId,
                std::string(what) + " identifier '" + std::string(id) +
                    "' does not match [a-z0-9-]+");
  }
}

}  // namespace

HierarchyModel HierarchyModel::build(std::vector<ScopeNode> organizations,
                                     std::vector<UserRecord> users) {
  HierarchyModel model;
  std::set<std::string, std::less<>> seen;
  auto claim = [&seen](const std::string& id) {
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::kDuplicateId, "duplicate identifier '" + id + "'");
    }
  };

  // Walks one subtree; `expected` is the kind this level must have.
  auto walk = [&](auto&& self, const ScopeNode& node, ScopeKind expected,
                  std::vector<std::string> ancestry) -> void {
    require_identifier(node.id, scope_kind_name(node.kind));
    if (node.kind != expected) {
      throw Error(ErrorCode::kOrphanNode,
                  std::string(scope_kind_name(node.kind)) + " '" + node.id +
                      "' cannot appear where a " +
                      std::string(scope_kind_name(expected)) + " is expected");
    }
    claim(node.id);
    ancestry.push_back(node.id);
    model.nodes_.emplace(node.id, ScopePath{node.kind, node.id, ancestry});

    if (node.kind == ScopeKind::kOrganization) {
      require_identifier(node.admin, "admin");
      model.admins_.emplace(node.id, node.admin);
    } else if (!node.admin.empty()) {
      throw Error(ErrorCode::kMalformedDocument,
                  "only organizations carry an admin ('" + node.id + "')");
    }

    if (node.kind == ScopeKind::kDomain) {
      if (!node.children.empty()) {
        throw Error(ErrorCode::kOrphanNode,
                    "domain '" + node.id + "' cannot have child nodes");
      }
      for (const auto& asset : node.assets) {
        require_identifier(asset.id, "asset");
        claim(asset.id);
        model.assets_.emplace(asset.id, AssetEntry{asset, node.id});
      }
      return;
    }
    if (!node.assets.empty()) {
      throw Error(ErrorCode::kOrphanNode,
                  "assets must belong to a domain, not " +
                      std::string(scope_kind_name(node.kind)) + " '" + node.id +
                      "'");
    }
    const auto child_kind = static_cast<ScopeKind>(scope_depth(node.kind) + 1);
    for (const auto& child : node.children) self(self, child, child_kind, ancestry);
  };

  for (const auto& org : organizations) {
    walk(walk, org, ScopeKind::kOrganization, {});
  }

  for (std::size_t i = 0; i < users.size(); ++i) {
    require_identifier(users[i].id, "user");
    if (!model.user_index_.emplace(users[i].id, i).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate user identifier '" + users[i].id + "'");
    }
  }

  model.organizations_ = std::move(organizations);
  model.users_ = std::move(users);
  return model;
}

bool HierarchyModel::has_user(std::string_view user) const {
  return user_index_.find(user) != user_index_.end();
}

bool HierarchyModel::has_asset(std::string_view asset) const {
  return assets_.find(asset) != assets_.end();
}

const ScopePath* HierarchyModel::find_node(std::string_view node_id) const {
  auto it = nodes_.find(node_id);
  return it == nodes_.end() ? nullptr : &it->second;
}

const ScopePath& HierarchyModel::asset_domain(std::string_view asset) const {
  auto it = assets_.find(asset);
  if (it == assets_.end()) {
    throw Error(ErrorCode::kUnknownAsset,
                "unknown asset '" + std::string(asset) + "'");
  }
  return nodes_.find(it->second.domain)->second;
}

const std::string& HierarchyModel::organization_admin(
    std::string_view organization) const {
  auto it = admins_.find(organization);
  if (it == admins_.end()) {
    throw Error(ErrorCode::kUnknownSpot,
                "unknown organization '" + std::string(organization) + "'");
  }
  return it->second;
}

std::vector<ScopePath> HierarchyModel::all_nodes() const {
  std::vector<ScopePath> out;
  out.reserve(nodes_.size());
  for (const auto& [id, path] : nodes_) out.push_back(path);
  return out;
}

std::vector<AssetRecord> HierarchyModel::all_assets() const {
  std::vector<AssetRecord> out;
  out.reserve(assets_.size());
  for (const auto& [id, entry] : assets_) out.push_back(entry.record);
  return out;
}

// -----------------------------------------------------------------------------
// JSON document
// -----------------------------------------------------------------------------

namespace {

void reject_unknown_fields(const json& obj, std::initializer_list<std::string_view> allowed,
                           std::string_view where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(ErrorCode::kMalformedDocument,
                  "unknown field '" + key + "' in " + std::string(where));
    }
  }
}

std::string require_string(const json& obj, const char* key, std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw Error(ErrorCode::kMalformedDocument,
                std::string(where) + " requires string field '" + key + "'");
  }
  return it->get<std::string>();
}

const json& optional_array(const json& obj, const char* key, std::string_view where) {
  static const json kEmpty = json::array();
  auto it = obj.find(key);
  if (it == obj.end()) return kEmpty;
  if (!it->is_array()) {
    throw Error(ErrorCode::kMalformedDocument,
                std::string(where) + " field '" + key + "' must be an array");
  }
  return *it;
}

ScopeNode node_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::kMalformedDocument, "hierarchy node must be an object");
  }
  reject_unknown_fields(doc, {"id", "kind", "admin", "children", "assets"}, "node");
  ScopeNode node;
  node.id = require_string(doc, "id", "node");
  const auto kind_name = require_string(doc, "kind", "node");
  auto kind = scope_kind_from_name(kind_name);
  if (!kind) {
    throw Error(ErrorCode::kUnknownKind,
                "unknown node kind '" + kind_name + "' for '" + node.id + "'");
  }
  node.kind = *kind;
  if (doc.contains("admin")) node.admin = require_string(doc, "admin", "node");
  if (node.kind == ScopeKind::kOrganization && node.admin.empty()) {
    throw Error(ErrorCode::kMalformedDocument,
                "organization '" + node.id + "' requires an admin");
  }
  for (const auto& child : optional_array(doc, "children", "node")) {
    node.children.push_back(node_from_json(child));
  }
  for (const auto& asset : optional_array(doc, "assets", "node")) {
    if (!asset.is_object()) {
      throw Error(ErrorCode::kMalformedDocument, "asset must be an object");
    }
    reject_unknown_fields(asset, {"id", "description"}, "asset");
    AssetRecord record;
    record.id = require_string(asset, "id", "asset");
    if (asset.contains("description")) {
      record.description = require_string(asset, "description", "asset");
    }
    node.assets.push_back(std::move(record));
  }
  return node;
}

json node_to_json(const ScopeNode& node) {
  json out = {{"id", node.id}, {"kind", scope_kind_name(node.kind)}};
  if (node.kind == ScopeKind::kOrganization) out["admin"] = node.admin;
  out["children"] = json::array();
  for (const auto& child : node.children) out["children"].push_back(node_to_json(child));
  out["assets"] = json::array();
  for (const auto& asset : node.assets) {
    out["assets"].push_back({{"id", asset.id}, {"description", asset.description}});
  }
  return out;
}

}  // namespace

HierarchyModel load_model(const json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::kMalformedDocument, "hierarchy document must be an object");
  }
  reject_unknown_fields(doc, {"organizations", "users"}, "hierarchy document");
  if (!doc.contains("organizations")) {
    throw Error(ErrorCode::kMalformedDocument,
                "hierarchy document requires 'organizations'");
  }
  std::vector<ScopeNode> organizations;
  for (const auto& org : optional_array(doc, "organizations", "hierarchy document")) {
    organizations.push_back(node_from_json(org));
  }
  std::vector<UserRecord> users;
  for (const auto& user : optional_array(doc, "users", "hierarchy document")) {
    if (!user.is_object()) {
      throw Error(ErrorCode::kMalformedDocument, "user must be an object");
    }
    reject_unknown_fields(user, {"id", "display_name"}, "user");
    UserRecord record;
    record.id = require_string(user, "id", "user");
    if (user.contains("display_name")) {
      record.display_name = require_string(user, "display_name", "user");
    }
    users.push_back(std::move(record));
  }
  return HierarchyModel::build(std::move(organizations), std::move(users));
}

json model_to_json(const HierarchyModel& model) {
  json out = {{"organizations", json::array()}, {"users", json::array()}};
  for (const auto& org : model.organizations()) {
    out["organizations"].push_back(node_to_json(org));
  }
  for (const auto& user : model.users()) {
    out["users"].push_back({{"id", user.id}, {"display_name", user.display_name}});
  }
  return out;
}

// -----------------------------------------------------------------------------
// Scope queries
// -----------------------------------------------------------------------------

ScopePath resolve_spot(const HierarchyModel& model, ScopeKind kind,
                       std::string_view spot) {
  const ScopePath* path = model.find_node(spot);
  if (path == nullptr) {
    throw Error(ErrorCode::kUnknownSpot, "unknown spot '" + std::string(spot) + "'");
  }
  if (path->kind != kind) {
    throw Error(ErrorCode::kKindMismatch,
                "spot '" + std::string(spot) + "' is a " +
                    std::string(scope_kind_name(path->kind)) + ", not a " +
                    std::string(scope_kind_name(kind)));
  }
  return *path;
}

bool scope_contains(const HierarchyModel& /*model*/, const ScopePath& outer,
                    const ScopePath& inner) {
  const auto depth = static_cast<std::size_t>(scope_depth(outer.kind));
  return depth < inner.ancestry.size() && inner.ancestry[depth] == outer.node_id;
}

std::vector<AssetRecord> assets_under(const HierarchyModel& model,
                                      const ScopePath& scope) {
  std::vector<AssetRecord> out;
  for (auto& asset : model.all_assets()) {
    if (scope_contains(model, scope, model.asset_domain(asset.id))) {
      out.push_back(std::move(asset));
    }
  }
  return out;
}

std::string admin_of(const HierarchyModel& model, const ScopePath& scope) {
  return model.organization_admin(scope.organization());
}

}  // namespace scintent
