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
// Test-only scenario generators and the brute-force decision table.
//
// The table deliberately avoids ScopePath and the engine: containment is a
// parent-pointer walk over GenModel, and each intent is replayed as direct
// writes to (user, asset, shift) cells.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "scintent/intent.hpp"
#include "scintent/model.hpp"
#include "scintent/policy.hpp"

namespace scintent::testing {

using Rng = std::mt19937_64;

/// Hierarchy fixture from tests/fixtures/plant_model.json: org o1 (admin
/// admin-o1) with realms o1-r1 and o1-r2, one domain each, two assets each.
nlohmann::json plant_model_json();
HierarchyModel plant_model();

struct GenNode {
  std::string id;
  ScopeKind kind = ScopeKind::kOrganization;
  int parent = -1;
};

struct GenAsset {
  std::string id;
  int domain = -1;
};

/// Flat model description with parent pointers.
struct GenModel {
  std::vector<GenNode> nodes;
  std::vector<GenAsset> assets;
  std::vector<std::string> users;

  nlohmann::json to_json() const;
  HierarchyModel build() const;
  int index_of(const std::string& node_id) const;
  /// inner == outer or outer is an ancestor of inner.
  bool within(int inner, int outer) const;
  bool asset_under(int asset, int node) const { return within(assets[asset].domain, node); }
};

/// The plant fixture in GenModel form.
GenModel plant_gen_model();

/// Up to 3 organizations, 3 realms each, 3 domains each, 4 assets each and
/// 5 users. Always at least one organization and one user.
GenModel random_model(Rng& rng);

/// Same shape, but guarantees at least one asset below some realm.
GenModel random_model_with_assets(Rng& rng);

ShiftSet random_shifts(Rng& rng);
IntentSpec random_intent(Rng& rng, const GenModel& model);

/// Brute-force decision table.
class TableOracle {
 public:
  struct Cell {
    Effect effect = Effect::kBlock;
    int scope = -1;
    std::uint64_t seq = 0;
  };

  explicit TableOracle(const GenModel& model) : model_(model) {}

  /// Replays one intent; users take consecutive sequence numbers.
  void apply(const IntentSpec& spec);

  std::optional<Cell> at(const std::string& user, int asset, Shift shift) const;

 private:
  const GenModel& model_;
  std::uint64_t next_seq_ = 1;
  std::map<std::tuple<std::string, int, Shift>, Cell> cells_;
};

/// Empty when no two active opposite-effect policies of one user both cover
/// an (asset, shift) point; otherwise a description of the first clash.
std::string find_effect_clash(const PolicyStore& store, const HierarchyModel& model,
                              const GenModel& gen);

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// -----------------------------------------------------------------------------
// Sentences
// -----------------------------------------------------------------------------

enum class Part { kUser, kConj, kCopula, kPermission, kTo, kAccess, kKind, kSpot, kAt, kShift };

/// A sentence kept as tagged word groups so mutations can target a slot.
struct Sentence {
  std::vector<std::pair<Part, std::string>> parts;
  IntentSpec expected;

  std::string text() const;
};

/// Random surface form over the default vocabulary: copula and permission
/// synonyms, the three shift spellings, all list separators, random case and
/// spacing.
Sentence random_sentence(Rng& rng);

/// Applies one of several edits that always leave the grammar.
std::string mutate_sentence(Rng& rng, const Sentence& sentence);

}  // namespace scintent::testing
