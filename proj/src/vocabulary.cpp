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

#include "scintent/vocabulary.hpp"

#include <algorithm>

#include "scintent/error.hpp"
#include "scintent/intent.hpp"

namespace scintent {

using nlohmann::json;

namespace {

constexpr std::string_view kPermissionTokens[] = {"allow", "block"};
constexpr std::string_view kScopeKindTokens[] = {"organization", "realm", "domain"};
constexpr std::string_view kShiftTokens[] = {"morning", "late", "night"};
constexpr std::string_view kConjunctionTokens[] = {"and"};
constexpr std::string_view kCopulaTokens[] = {"is"};

std::vector<std::string> split_phrase(std::string_view phrase) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < phrase.size()) {
    auto end = phrase.find(' ', start);
    if (end == std::string_view::npos) end = phrase.size();
    out.emplace_back(phrase.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

bool is_proper_prefix(const std::vector<std::string>& prefix,
                      const std::vector<std::string>& tokens) {
  return prefix.size() < tokens.size() &&
         std::equal(prefix.begin(), prefix.end(), tokens.begin());
}

}  // namespace

std::string_view slot_name(Slot slot) {
  switch (slot) {
    case Slot::kPermission:
      return "permission";
    case Slot::kScopeKind:
      return "scope_kind";
    case Slot::kShift:
      return "shift";
    case Slot::kListConjunction:
      return "list_conjunction";
    case Slot::kCopula:
      return "copula";
  }
  return "permission";
}

std::optional<Slot> slot_from_name(std::string_view name) {
  for (Slot s : kAllSlots) {
    if (slot_name(s) == name) return s;
  }
  return std::nullopt;
}

std::span<const std::string_view> canonical_tokens(Slot slot) {
  switch (slot) {
    case Slot::kPermission:
      return kPermissionTokens;
    case Slot::kScopeKind:
      return kScopeKindTokens;
    case Slot::kShift:
      return kShiftTokens;
    case Slot::kListConjunction:
      return kConjunctionTokens;
    case Slot::kCopula:
      return kCopulaTokens;
  }
  return {};
}

std::string normalize_phrase(std::string_view phrase) {
  std::string out;
  for (const auto& token : tokenize(phrase)) {
    if (!out.empty()) out += ' ';
    out += token.text;
  }
  return out;
}

Vocabulary Vocabulary::defaults() {
  Vocabulary v;
  v.insert_unchecked(Slot::kPermission, "allow", "allowed");
  v.insert_unchecked(Slot::kPermission, "block", "blocked");
  v.insert_unchecked(Slot::kPermission, "block", "not allowed");
  v.insert_unchecked(Slot::kScopeKind, "organization", "organization");
  v.insert_unchecked(Slot::kScopeKind, "realm", "realm");
  v.insert_unchecked(Slot::kScopeKind, "domain", "domain");
  v.insert_unchecked(Slot::kShift, "morning", "morning shift");
  v.insert_unchecked(Slot::kShift, "morning", "[6:00-13:59]");
  v.insert_unchecked(Slot::kShift, "late", "late shift");
  v.insert_unchecked(Slot::kShift, "late", "[14:00-21:59]");
  v.insert_unchecked(Slot::kShift, "night", "night shift");
  v.insert_unchecked(Slot::kShift, "night", "[22:00-5:59]");
  v.insert_unchecked(Slot::kListConjunction, "and", ",");
  v.insert_unchecked(Slot::kListConjunction, "and", "and");
  v.insert_unchecked(Slot::kListConjunction, "and", ", and");
  v.insert_unchecked(Slot::kCopula, "is", "is");
  v.insert_unchecked(Slot::kCopula, "is", "are");
  return v;
}

void Vocabulary::insert_unchecked(Slot slot, std::string canonical,
                                  std::string phrase) {
  slots_[index(slot)][std::move(canonical)].push_back(std::move(phrase));
}

std::optional<std::string> Vocabulary::canonical_of(Slot slot,
                                                    std::string_view phrase) const {
  for (const auto& [canonical, phrases] : entries(slot)) {
    if (std::find(phrases.begin(), phrases.end(), phrase) != phrases.end()) {
      return canonical;
    }
  }
  return std::nullopt;
}

bool Vocabulary::add(Slot slot, std::string_view canonical,
                     std::string_view synonym) {
  const auto allowed = canonical_tokens(slot);
  if (std::find(allowed.begin(), allowed.end(), canonical) == allowed.end()) {
    throw Error(ErrorCode::kUnknownSlot,
                "slot '" + std::string(slot_name(slot)) +
                    "' has no canonical token '" + std::string(canonical) + "'");
  }
  const std::string phrase = normalize_phrase(synonym);
  if (phrase.empty()) {
    throw Error(ErrorCode::kMalformedDocument, "synonym must not be empty");
  }

  if (auto bound = canonical_of(slot, phrase)) {
    if (*bound == canonical) return false;
    throw Error(ErrorCode::kVocabularyCollision,
                "'" + phrase + "' already maps to '" + *bound + "' in slot '" +
                    std::string(slot_name(slot)) + "'");
  }

  // A phrase that extends an existing one would win longest-match and change
  // how already-accepted sentences parse.
  const auto tokens = split_phrase(phrase);
  for (Slot other : kAllSlots) {
    for (const auto& [other_canonical, phrases] : entries(other)) {
      for (const auto& existing : phrases) {
        if (existing == phrase) {
          throw Error(ErrorCode::kVocabularyCollision,
                      "'" + phrase + "' is already used by slot '" +
                          std::string(slot_name(other)) + "'");
        }
        if (is_proper_prefix(split_phrase(existing), tokens)) {
          throw Error(ErrorCode::kVocabularyCollision,
                      "'" + phrase + "' would shadow '" + existing +
                          "' in slot '" + std::string(slot_name(other)) + "'");
        }
      }
    }
  }
  insert_unchecked(slot, std::string(canonical), phrase);
  return true;
}

std::optional<SynonymMatch> expand_synonyms(const Vocabulary& vocab,
                                            std::span<const std::string> tokens,
                                            Slot slot) {
  std::optional<SynonymMatch> best;
  for (const auto& [canonical, phrases] : vocab.entries(slot)) {
    for (const auto& phrase : phrases) {
      const auto words = split_phrase(phrase);
      if (words.empty() || words.size() > tokens.size()) continue;
      if (best && words.size() <= best->consumed) continue;
      if (std::equal(words.begin(), words.end(), tokens.begin())) {
        best = SynonymMatch{canonical, words.size()};
      }
    }
  }
  return best;
}

Vocabulary vocabulary_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("slots") || !doc["slots"].is_object() ||
      doc.size() != 1) {
    throw Error(ErrorCode::kMalformedDocument,
                "intent store must be an object with a single 'slots' object");
  }
  const Vocabulary stock = Vocabulary::defaults();
  Vocabulary vocab;
  for (Slot slot : kAllSlots) {
    const auto name = std::string(slot_name(slot));
    if (!doc["slots"].contains(name)) {
      vocab.slots_[Vocabulary::index(slot)] = stock.entries(slot);
    }
  }
  for (const auto& [name, entries] : doc["slots"].items()) {
    auto slot = slot_from_name(name);
    if (!slot) {
      throw Error(ErrorCode::kMalformedDocument, "unknown vocabulary slot '" + name + "'");
    }
    if (!entries.is_object()) {
      throw Error(ErrorCode::kMalformedDocument,
                  "slot '" + name + "' must map canonical tokens to arrays");
    }
    const auto allowed = canonical_tokens(*slot);
    for (const auto& [canonical, phrases] : entries.items()) {
      if (std::find(allowed.begin(), allowed.end(), canonical) == allowed.end()) {
        throw Error(ErrorCode::kMalformedDocument, "slot '" + name +
                                                       "' has no canonical token '" +
                                                       canonical + "'");
      }
      if (!phrases.is_array()) {
        throw Error(ErrorCode::kMalformedDocument,
                    "synonyms of '" + canonical + "' must be an array");
      }
      for (const auto& raw : phrases) {
        if (!raw.is_string()) {
          throw Error(ErrorCode::kMalformedDocument, "synonym must be a string");
        }
        const auto phrase = normalize_phrase(raw.get<std::string>());
        if (phrase.empty()) {
          throw Error(ErrorCode::kMalformedDocument, "synonym must not be empty");
        }
        if (auto bound = vocab.canonical_of(*slot, phrase)) {
          if (*bound != canonical) {
            throw Error(ErrorCode::kVocabularyCollision,
                        "'" + phrase + "' maps to both '" + *bound + "' and '" +
                            canonical + "' in slot '" + name + "'");
          }
          continue;
        }
        vocab.insert_unchecked(*slot, canonical, phrase);
      }
    }
  }
  return vocab;
}

json vocabulary_to_json(const Vocabulary& vocab) {
  json slots = json::object();
  for (Slot slot : kAllSlots) {
    json entries = json::object();
    for (const auto& [canonical, phrases] : vocab.entries(slot)) {
      entries[canonical] = phrases;
    }
    slots[std::string(slot_name(slot))] = std::move(entries);
  }
  return {{"slots", std::move(slots)}};
}

}  // namespace scintent
