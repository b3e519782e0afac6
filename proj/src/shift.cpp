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

#include "scintent/shift.hpp"

#include <bit>
#include <cctype>

#include "scintent/error.hpp"

namespace scintent {

std::string_view shift_name(Shift shift) {
  switch (shift) {
    case Shift::kMorning:
      return "morning";
    case Shift::kLate:
      return "late";
    case Shift::kNight:
      return "night";
  }
  return "morning";
}

std::optional<Shift> shift_from_name(std::string_view name) {
  for (Shift s : kAllShifts) {
    if (shift_name(s) == name) return s;
  }
  return std::nullopt;
}

std::vector<MinuteRange> shift_window(Shift shift) {
  switch (shift) {
    case Shift::kMorning:
      return {{6 * 60, 14 * 60 - 1}};
    case Shift::kLate:
      return {{14 * 60, 22 * 60 - 1}};
    case Shift::kNight:
      return {{22 * 60, kMinutesPerDay - 1}, {0, 6 * 60 - 1}};
  }
  return {};
}

Shift shift_of(int minute) {
  if (minute < 0 || minute >= kMinutesPerDay) {
    throw Error(ErrorCode::kOutOfRange,
                "minute of day out of range: " + std::to_string(minute));
  }
  if (minute < 6 * 60) return Shift::kNight;
  if (minute < 14 * 60) return Shift::kMorning;
  if (minute < 22 * 60) return Shift::kLate;
  return Shift::kNight;
}

int representative_minute(Shift shift) {
  return shift_window(shift).front().first;
}

std::optional<int> parse_clock_time(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon > 2 ||
      text.size() - colon - 1 != 2) {
    return std::nullopt;
  }
  int hours = 0;
  for (char c : text.substr(0, colon)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    hours = hours * 10 + (c - '0');
  }
  int minutes = 0;
  for (char c : text.substr(colon + 1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    minutes = minutes * 10 + (c - '0');
  }
  if (hours > 23 || minutes > 59) return std::nullopt;
  return hours * 60 + minutes;
}

int ShiftSet::size() const { return std::popcount(bits_); }

std::vector<Shift> ShiftSet::members() const {
  std::vector<Shift> out;
  for (Shift s : kAllShifts) {
    if (contains(s)) out.push_back(s);
  }
  return out;
}

nlohmann::json shifts_to_json(ShiftSet shifts) {
  auto out = nlohmann::json::array();
  for (Shift s : shifts.members()) out.push_back(shift_name(s));
  return out;
}

ShiftSet shifts_from_json(const nlohmann::json& doc) {
  if (!doc.is_array() || doc.empty()) {
    throw Error(ErrorCode::kMalformedDocument,
                "shift list must be a non-empty array");
  }
  ShiftSet out;
  for (const auto& item : doc) {
    if (!item.is_string()) {
      throw Error(ErrorCode::kMalformedDocument, "shift name must be a string");
    }
    auto s = shift_from_name(item.get<std::string>());
    if (!s) {
      throw Error(ErrorCode::kMalformedDocument,
                  "unknown shift '" + item.get<std::string>() + "'");
    }
    out.insert(*s);
  }
  return out;
}

}  // namespace scintent
