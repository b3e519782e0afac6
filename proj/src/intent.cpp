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

#include "scintent/intent.hpp"

#include <algorithm>
#include <cctype>
#include <span>

#include "scintent/error.hpp"

namespace scintent {

std::string_view effect_name(Effect effect) {
  return effect == Effect::kAllow ? "allow" : "block";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::string current;
  std::size_t start = 0;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back({std::move(current), start});
    current.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      flush();
    } else if (c == ',') {
      flush();
      tokens.push_back({",", i});
    } else {
      if (current.empty()) start = i;
      current += static_cast<char>(std::tolower(c));
    }
  }
  flush();
  return tokens;
}

namespace {

class IntentParser {
 public:
  IntentParser(std::string_view text, const Vocabulary& vocab)
      : text_(text), vocab_(vocab) {
    for (auto& token : tokenize(text)) {
      words_.push_back(token.text);
      offsets_.push_back(token.offset);
    }
  }

  IntentSpec parse() {
    IntentSpec spec;
    spec.raw_text = std::string(text_);

    parse_users(spec);
    if (!accept(Slot::kCopula)) fail("copula (is/are)");

    auto permission = accept(Slot::kPermission);
    if (!permission) fail("permission (allowed/blocked)");
    spec.permission = permission->canonical == "allow" ? Effect::kAllow : Effect::kBlock;

    expect_literal("to");
    expect_literal("access");
    expect_literal("to");

    auto kind = accept(Slot::kScopeKind);
    if (!kind) fail("scope kind (organization/realm/domain)");
    spec.scope_kind = *scope_kind_from_name(kind->canonical);
    spec.spot = identifier("spot identifier");

    if (at_end()) {
      spec.timeframes = ShiftSet::all();
      return spec;
    }
    if (words_[pos_] != "at") fail("'at' or end of input");
    ++pos_;
    spec.timeframes = ShiftSet{};
    do {
      auto shift = accept(Slot::kShift);
      if (!shift) fail("shift (morning/late/night shift)");
      spec.timeframes.insert(*shift_from_name(shift->canonical));
    } while (accept(Slot::kListConjunction));

    if (!at_end()) fail("end of input");
    return spec;
  }

 private:
  void parse_users(IntentSpec& spec) {
    do {
      const std::size_t at = pos_;
      auto user = identifier("user identifier");
      if (std::find(spec.users.begin(), spec.users.end(), user) != spec.users.end()) {
        pos_ = at;
        fail("distinct user identifier");
      }
      spec.users.push_back(std::move(user));
    } while (accept(Slot::kListConjunction));
  }

  bool at_end() const { return pos_ >= words_.size(); }

  std::optional<SynonymMatch> accept(Slot slot) {
    auto rest = std::span<const std::string>(words_).subspan(pos_);
    auto match = expand_synonyms(vocab_, rest, slot);
    if (match) pos_ += match->consumed;
    return match;
  }

  void expect_literal(std::string_view word) {
    if (at_end() || words_[pos_] != word) fail("'" + std::string(word) + "'");
    ++pos_;
  }

  std::string identifier(const std::string& what) {
    if (at_end() || !is_valid_identifier(words_[pos_])) fail(what);
    return words_[pos_++];
  }

  [[noreturn]] void fail(const std::string& expected) const {
    if (at_end()) throw ParseError(text_.size(), expected, "");
    throw ParseError(offsets_[pos_], expected, words_[pos_]);
  }

  std::string_view text_;
  const Vocabulary& vocab_;
  std::vector<std::string> words_;
  std::vector<std::size_t> offsets_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

IntentSpec parse_intent(std::string_view text, const Vocabulary& vocab) {
  return IntentParser(text, vocab).parse();
}

std::string render_intent(const IntentSpec& spec) {
  std::vector<std::string> shifts;
  for (Shift s : spec.timeframes.members()) {
    shifts.push_back(std::string(shift_name(s)) + " shift");
  }
  return join(spec.users, ", and ") + " is " +
         (spec.permission == Effect::kAllow ? "allowed" : "blocked") +
         " to access to " + std::string(scope_kind_name(spec.scope_kind)) + " " +
         spec.spot + " at " + join(shifts, ", and ");
}

nlohmann::json intent_to_json(const IntentSpec& spec) {
  return {{"users", spec.users},
          {"permission", effect_name(spec.permission)},
          {"scope_kind", scope_kind_name(spec.scope_kind)},
          {"spot", spec.spot},
          {"timeframes", shifts_to_json(spec.timeframes)},
          {"raw_text", spec.raw_text}};
}

}  // namespace scintent
