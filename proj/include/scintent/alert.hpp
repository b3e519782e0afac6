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

#include <string>

#include "json.hpp"

namespace scintent {

/// Notice for an organization's administrator. `id` stays empty until the
/// controller raises it.
struct AdminAlert {
  std::string id;
  std::string admin;
  std::string organization;
  std::string message;
  std::string source;
  bool acknowledged = false;

  bool operator==(const AdminAlert&) const = default;
};

nlohmann::json alert_to_json(const AdminAlert& alert);

}  // namespace scintent
