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

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace scintent {

/// Grammar positions whose wording is taken from the vocabulary.
enum class Slot { kPermission, kScopeKind, kShift, kListConjunction, kCopula };

inline constexpr std::array<Slot, 5> kAllSlots = {
    Slot::kPermission, Slot::kScopeKind, Slot::kShift, Slot::kListConjunction,
    Slot::kCopula};

std::string_view slot_name(Slot slot);
std::optional<Slot> slot_from_name(std::string_view name);

/// Canonical tokens a slot may map to, e.g. {"allow", "block"} for permission.
std::span<const std::string_view> canonical_tokens(Slot slot);

struct SynonymMatch {
  std::string canonical;
  std::size_t consumed = 0;  // tokens
};

/// Synonym table: per slot, canonical token -> accepted phrases. Phrases are
/// stored normalized (tokenized, lowercased, single-space joined) and no phrase
/// maps to two canonicals within one slot.
class Vocabulary {
 public:
  using Entries = std::map<std::string, std::vector<std::string>>;

  /// Empty slots; parses nothing. Use defaults() for the stock wording.
  Vocabulary() = default;
  static Vocabulary defaults();

  const Entries& entries(Slot slot) const { return slots_[index(slot)]; }

  /// Adds `synonym` for `canonical`. Returns false when it was already bound
  /// to that canonical. Throws Error(kVocabularyCollision) when the phrase is
  /// bound elsewhere or would shadow an existing phrase by extending it, and
  /// Error(kUnknownSlot) for a canonical the slot does not define.
  bool add(Slot slot, std::string_view canonical, std::string_view synonym);

  /// Canonical bound to an exact (normalized) phrase, if any.
  std::optional<std::string> canonical_of(Slot slot, std::string_view phrase) const;

  bool operator==(const Vocabulary&) const = default;

 private:
  static std::size_t index(Slot slot) { return static_cast<std::size_t>(slot); }
  void insert_unchecked(Slot slot, std::string canonical, std::string phrase);

  friend Vocabulary vocabulary_from_json(const nlohmann::json& doc);

  std::array<Entries, kAllSlots.size()> slots_;
};

/// Normalized phrase form: tokenized and joined with single spaces.
std::string normalize_phrase(std::string_view phrase);

/// Longest synonym of `slot` that is a prefix of `tokens`; nullopt when none.
std::optional<SynonymMatch> expand_synonyms(const Vocabulary& vocab,
                                            std::span<const std::string> tokens,
                                            Slot slot);

/// Intent-store document: {"slots": {"permission": {"allow": [...]}, ...}}.
/// Slots absent from the document keep their default wording.
Vocabulary vocabulary_from_json(const nlohmann::json& doc);
nlohmann::json vocabulary_to_json(const Vocabulary& vocab);

}  // namespace scintent
