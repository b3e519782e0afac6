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

#include "scintent/http_server.hpp"

#include "httplib.h"
#include "scintent/api.hpp"

namespace scintent {

void register_routes(httplib::Server& server, IntentService& service) {
  auto handler = [&service](const httplib::Request& req, httplib::Response& res) {
    ApiRequest request;
    request.method = req.method;
    request.path = req.path;
    for (const auto& [key, value] : req.params) request.params.emplace(key, value);
    request.body = req.body;
    request.record = req.get_header_value("X-Record") == "true";
    const ApiReply reply = dispatch(service, request);
    res.status = reply.status;
    res.set_content(reply.body.dump(), "application/json");
  };
  server.Get(".*", handler);
  server.Post(".*", handler);
}

}  // namespace scintent
