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
// Access-control intent language.
//
//   intent     ::= users COPULA PERMISSION "to" "access" "to" SCOPE_KIND spot
//                  [ "at" timeframes ]
//   users      ::= user { CONJ user }
//   timeframes ::= SHIFT { CONJ SHIFT }
//   user, spot ::= [a-z0-9-]+
//
// Upper-case symbols are vocabulary slots (see vocabulary.hpp); CONJ accepts
// ",", "and" and ", and". A missing time clause means every shift.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "scintent/model.hpp"
#include "scintent/shift.hpp"
#include "scintent/vocabulary.hpp"

namespace scintent {

enum class Effect { kAllow, kBlock };

std::string_view effect_name(Effect effect);

struct Token {
  std::string text;     // lowercased
  std::size_t offset;   // into the original input
};

/// Splits on whitespace, splits commas into their own tokens, lowercases.
std::vector<Token> tokenize(std::string_view text);

struct IntentSpec {
  std::vector<std::string> users;
  Effect permission = Effect::kAllow;
  ScopeKind scope_kind = ScopeKind::kOrganization;
  std::string spot;
  ShiftSet timeframes = ShiftSet::all();
  std::string raw_text;

  /// Field-wise equality; raw_text is provenance and does not participate.
  bool operator==(const IntentSpec& other) const {
    return users == other.users && permission == other.permission &&
           scope_kind == other.scope_kind && spot == other.spot &&
           timeframes == other.timeframes;
  }
};

/// Recursive-descent parse. Throws ParseError at the first slot that fails.
IntentSpec parse_intent(std::string_view text, const Vocabulary& vocab);

/// Canonical sentence: "a, and b is allowed to access to realm r at morning
/// shift, and night shift". The time clause is always spelled out.
std::string render_intent(const IntentSpec& spec);

nlohmann::json intent_to_json(const IntentSpec& spec);

}  // namespace scintent
