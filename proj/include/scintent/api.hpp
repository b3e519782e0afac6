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
// Transport-independent request routing. The HTTP server and the in-process
// CLI both go through dispatch(), so they produce identical bodies.
//
//   POST /intents              {text, dry_run?, expected_version?}
//   POST /decisions/query      {user, asset, time "HH:MM"}   X-Record: true
//   GET  /policies
//   GET  /alerts[?admin=<id>]
//   POST /alerts/{id}/ack
//   GET  /hierarchy
//   GET  /vocabulary
//   POST /vocabulary           {slot, canonical, synonym}
//   GET  /telemetry/anomalies
//   GET  /debug/enforcement

#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "scintent/service.hpp"

namespace scintent {

struct ApiRequest {
  std::string method;  // "GET" or "POST"
  std::string path;
  std::map<std::string, std::string> params;
  std::string body;
  bool record = false;  // X-Record: true
};

struct ApiReply {
  int status = 200;
  nlohmann::json body;
};

ApiReply dispatch(IntentService& service, const ApiRequest& request);

}  // namespace scintent
