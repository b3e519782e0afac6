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

#include "scintent/error.hpp"

#include <utility>

namespace scintent {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedDocument:
      return "malformed-document";
    case ErrorCode::kDuplicateId:
      return "duplicate-identifier";
    case ErrorCode::kOrphanNode:
      return "orphan-node";
    case ErrorCode::kMalformedId:
      return "malformed-identifier";
    case ErrorCode::kUnknownKind:
      return "unknown-kind";
    case ErrorCode::kUnknownSpot:
      return "unknown-spot";
    case ErrorCode::kKindMismatch:
      return "kind-mismatch";
    case ErrorCode::kUnknownUser:
      return "unknown-user";
    case ErrorCode::kUnknownAsset:
      return "unknown-asset";
    case ErrorCode::kOutOfRange:
      return "out-of-range";
    case ErrorCode::kParse:
      return "parse-error";
    case ErrorCode::kUnknownSlot:
      return "unknown-slot";
    case ErrorCode::kVocabularyCollision:
      return "vocabulary-collision";
    case ErrorCode::kStaleVersion:
      return "stale-version";
    case ErrorCode::kCrossReference:
      return "cross-reference";
    case ErrorCode::kStorage:
      return "storage-failure";
    case ErrorCode::kUnknownPolicy:
      return "unknown-policy";
    case ErrorCode::kDuplicateCommand:
      return "duplicate-command";
    case ErrorCode::kUnknownAlert:
      return "unknown-alert";
    case ErrorCode::kAlreadyAcknowledged:
      return "already-acknowledged";
  }
  return "unknown";
}

ParseError::ParseError(std::size_t position, std::string expected,
                       std::string found)
    : Error(ErrorCode::kParse,
            "expected " + expected + " at offset " + std::to_string(position) +
                (found.empty() ? std::string(", found end of input")
                               : ", found '" + found + "'")),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

}  // namespace scintent
