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
// Working shifts. Each day is split into three fixed windows:
//   morning  06:00-13:59   minutes [360, 839]
//   late     14:00-21:59   minutes [840, 1319]
//   night    22:00-05:59   minutes [1320, 1439] and [0, 359]

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace scintent {

enum class Shift : std::uint8_t { kMorning = 0, kLate = 1, kNight = 2 };

inline constexpr std::array<Shift, 3> kAllShifts = {Shift::kMorning,
                                                    Shift::kLate, Shift::kNight};
inline constexpr int kMinutesPerDay = 1440;

/// Closed minute-of-day interval.
struct MinuteRange {
  int first = 0;
  int last = 0;

  int size() const { return last - first + 1; }
  bool contains(int minute) const { return minute >= first && minute <= last; }
};

std::string_view shift_name(Shift shift);
std::optional<Shift> shift_from_name(std::string_view name);

/// The minute ranges covered by `shift`; night wraps midnight and has two.
std::vector<MinuteRange> shift_window(Shift shift);

/// Throws Error(kOutOfRange) unless 0 <= minute <= 1439.
Shift shift_of(int minute);

/// A minute that lies inside `shift`, used when probing decisions per shift.
int representative_minute(Shift shift);

/// Parses "H:MM" or "HH:MM" into a minute of day; nullopt on any malformation.
std::optional<int> parse_clock_time(std::string_view text);

/// Small value-type set of shifts.
class ShiftSet {
 public:
  constexpr ShiftSet() = default;
  ShiftSet(std::initializer_list<Shift> shifts) {
    for (Shift s : shifts) insert(s);
  }

  static constexpr ShiftSet all() { return ShiftSet(0b111); }

  constexpr bool contains(Shift s) const { return (bits_ >> bit(s)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr void insert(Shift s) { bits_ |= (1u << bit(s)); }
  constexpr void erase(Shift s) { bits_ &= ~(1u << bit(s)); }
  int size() const;

  constexpr ShiftSet operator&(ShiftSet o) const { return ShiftSet(bits_ & o.bits_); }
  constexpr ShiftSet operator|(ShiftSet o) const { return ShiftSet(bits_ | o.bits_); }
  /// Set difference.
  constexpr ShiftSet operator-(ShiftSet o) const {
    return ShiftSet(bits_ & ~o.bits_);
  }
  constexpr bool operator==(const ShiftSet&) const = default;
  constexpr bool is_subset_of(ShiftSet o) const { return (bits_ & ~o.bits_) == 0; }

  /// Members in canonical order (morning, late, night).
  std::vector<Shift> members() const;
  std::uint8_t bits() const { return bits_; }

 private:
  explicit constexpr ShiftSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr unsigned bit(Shift s) { return static_cast<unsigned>(s); }

  std::uint8_t bits_ = 0;
};

/// JSON form is an array of shift names in canonical order.
nlohmann::json shifts_to_json(ShiftSet shifts);
/// Throws Error(kMalformedDocument) on unknown names or an empty array.
ShiftSet shifts_from_json(const nlohmann::json& doc);

}  // namespace scintent
