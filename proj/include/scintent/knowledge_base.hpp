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
// File-backed knowledge base. A KB directory holds four documents:
//
//   model.json          hierarchy and user registry
//   intent_store.json   vocabulary
//   policy_store.json   {"version": n, "policies": [...]}
//   telemetry.jsonl     one event per line
//
// Every save replaces each document atomically (write to a sibling temp file,
// then rename over the original).

#pragma once

#include <filesystem>
#include <string_view>

#include "scintent/model.hpp"
#include "scintent/policy.hpp"
#include "scintent/telemetry.hpp"
#include "scintent/vocabulary.hpp"

namespace scintent {

struct KbPaths {
  std::filesystem::path model;
  std::filesystem::path intent_store;
  std::filesystem::path policy_store;
  std::filesystem::path telemetry;

  static KbPaths in(const std::filesystem::path& dir);
};

struct KnowledgeBase {
  HierarchyModel model;
  Vocabulary vocabulary = Vocabulary::defaults();
  PolicyStore policies;
  TelemetryLog telemetry;

  bool operator==(const KnowledgeBase&) const = default;
};

/// Loads and cross-validates all documents. A missing telemetry file reads
/// as an empty log. Throws Error with kMalformedDocument, kCrossReference or
/// kStorage.
KnowledgeBase kb_load(const KbPaths& paths);

/// Throws Error(kStorage) when a document cannot be written.
void kb_save(const KnowledgeBase& kb, const KbPaths& paths);

/// Adds a synonym to the intent store. Returns false when it was already
/// present (no-op). Throws Error(kVocabularyCollision) or Error(kUnknownSlot).
bool vocab_add(KnowledgeBase& kb, Slot slot, std::string_view canonical,
               std::string_view synonym);

void record_event(KnowledgeBase& kb, TelemetryEvent event);

/// Reads a whole file. Throws Error(kStorage).
std::string read_text_file(const std::filesystem::path& path);
/// Write-then-rename replacement of `path`. Throws Error(kStorage).
void write_text_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace scintent
