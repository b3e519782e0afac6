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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scintent {

enum class ErrorCode {
  kMalformedDocument,
  kDuplicateId,
  kOrphanNode,
  kMalformedId,
  kUnknownKind,
  kUnknownSpot,
  kKindMismatch,
  kUnknownUser,
  kUnknownAsset,
  kOutOfRange,
  kParse,
  kUnknownSlot,
  kVocabularyCollision,
  kStaleVersion,
  kCrossReference,
  kStorage,
  kUnknownPolicy,
  kDuplicateCommand,
  kUnknownAlert,
  kAlreadyAcknowledged,
};

/// Stable lowercase name used in JSON error bodies, e.g. "unknown-user".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the intent parser at the first grammar slot it cannot match.
/// `position` is a character offset into the original text and never exceeds
/// its length (end-of-input failures report the length itself).
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found);

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

}  // namespace scintent
