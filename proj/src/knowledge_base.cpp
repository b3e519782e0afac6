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

#include "scintent/knowledge_base.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "scintent/error.hpp"

namespace scintent {

namespace fs = std::filesystem;
using nlohmann::json;

KbPaths KbPaths::in(const fs::path& dir) {
  return {dir / "model.json", dir / "intent_store.json", dir / "policy_store.json",
          dir / "telemetry.jsonl"};
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kStorage, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file_atomic(const fs::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kStorage, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::kStorage, "short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    throw Error(ErrorCode::kStorage,
                "cannot replace " + path.string() + ": " + ec.message());
  }
}

namespace {

json read_json(const fs::path& path) {
  const auto text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedDocument, path.string() + ": " + e.what());
  }
}

}  // namespace

KnowledgeBase kb_load(const KbPaths& paths) {
  KnowledgeBase kb;
  kb.model = load_model(read_json(paths.model));
  kb.vocabulary = vocabulary_from_json(read_json(paths.intent_store));
  kb.policies = policy_store_from_json(read_json(paths.policy_store), kb.model);
  if (fs::exists(paths.telemetry)) {
    kb.telemetry = telemetry_from_jsonl(read_text_file(paths.telemetry));
  }
  return kb;
}

void kb_save(const KnowledgeBase& kb, const KbPaths& paths) {
  for (const auto* p : {&paths.model, &paths.intent_store, &paths.policy_store, &paths.telemetry}) {
    if (p->has_parent_path()) {
      std::error_code ec;
      fs::create_directories(p->parent_path(), ec);
      if (ec) throw Error(ErrorCode::kStorage, "cannot create " + p->parent_path().string());
    }
  }
  write_text_file_atomic(paths.model, model_to_json(kb.model).dump(2) + "\n");
  write_text_file_atomic(paths.intent_store, vocabulary_to_json(kb.vocabulary).dump(2) + "\n");
  write_text_file_atomic(paths.policy_store, policy_store_to_json(kb.policies).dump(2) + "\n");
  write_text_file_atomic(paths.telemetry, telemetry_to_jsonl(kb.telemetry));
}

bool vocab_add(KnowledgeBase& kb, Slot slot, std::string_view canonical,
               std::string_view synonym) {
  return kb.vocabulary.add(slot, canonical, synonym);
}

void record_event(KnowledgeBase& kb, TelemetryEvent event) {
  kb.telemetry.append(std::move(event));
}

}  // namespace scintent
