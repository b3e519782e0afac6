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
// scintent command-line client and server.
//
// Client commands build the same JSON requests the HTTP API takes. With
// --url they are sent to a running server; otherwise they run in-process
// against the KB directory (--kb-dir or SCINTENT_KB_DIR).

#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "httplib.h"
#include "scintent/api.hpp"
#include "scintent/http_server.hpp"
#include "scintent/knowledge_base.hpp"
#include "scintent/service.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace scintent;

namespace {

struct GlobalOptions {
  std::string kb_dir;
  std::string url;
  std::string config_path;
  bool test_mode = false;
};

ServiceConfig make_config(const GlobalOptions& opts) {
  ServiceConfig config;
  if (!opts.config_path.empty()) {
    config = service_config_from_json(json::parse(read_text_file(opts.config_path)));
  }
  config.test_mode = opts.test_mode;
  return config;
}

fs::path require_kb_dir(const GlobalOptions& opts) {
  if (opts.kb_dir.empty()) {
    throw Error(ErrorCode::kStorage, "no knowledge base: pass --kb-dir or set SCINTENT_KB_DIR");
  }
  return opts.kb_dir;
}

ApiReply call(const GlobalOptions& opts, ApiRequest request) {
  if (opts.url.empty()) {
    auto service = IntentService::open(require_kb_dir(opts), make_config(opts));
    return dispatch(*service, request);
  }

  httplib::Client client(opts.url);
  httplib::Headers headers;
  if (request.record) headers.emplace("X-Record", "true");
  std::string target = request.path;
  if (!request.params.empty()) {
    target += "?" + httplib::detail::params_to_query_str(
                        httplib::Params(request.params.begin(), request.params.end()));
  }
  auto result = request.method == "GET"
                    ? client.Get(target, headers)
                    : client.Post(target, headers, request.body, "application/json");
  if (!result) {
    throw Error(ErrorCode::kStorage, "cannot reach " + opts.url + ": " +
                                         httplib::to_string(result.error()));
  }
  return {result->status, json::parse(result->body)};
}

int print(const ApiReply& reply) {
  std::cout << reply.body.dump(2) << "\n";
  return reply.status >= 200 && reply.status < 300 ? 0 : 1;
}

int kb_init(const GlobalOptions& opts, const std::string& model_path, bool force) {
  const auto dir = require_kb_dir(opts);
  const auto paths = KbPaths::in(dir);
  if (!force && fs::exists(paths.policy_store)) {
    std::cerr << "knowledge base already exists at " << dir << " (use --force)\n";
    return 1;
  }
  KnowledgeBase kb;
  if (!model_path.empty()) kb.model = load_model(json::parse(read_text_file(model_path)));
  kb_save(kb, paths);
  std::cout << "initialized knowledge base at " << dir << "\n";
  return 0;
}

int serve(const GlobalOptions& opts, const std::string& host, int port) {
  auto service = IntentService::open(require_kb_dir(opts), make_config(opts));
  httplib::Server server;
  register_routes(server, *service);
  std::cerr << "serving " << opts.kb_dir << " on http://" << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "cannot listen on " << host << ":" << port << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scintent: intent-based access control for supply-chain assets"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--kb-dir", opts.kb_dir, "Knowledge base directory")
      ->envname("SCINTENT_KB_DIR");
  app.add_option("--url", opts.url, "Send requests to a running server instead");
  app.add_option("--config", opts.config_path, "Service config JSON (anomaly rule)");
  app.add_flag("--test-mode", opts.test_mode, "Pin the event clock for reproducible output");

  auto* kb = app.add_subcommand("kb", "Knowledge base maintenance");
  kb->require_subcommand(1);
  auto* init = kb->add_subcommand("init", "Create a fresh knowledge base");
  std::string model_path;
  bool force = false;
  init->add_option("--model", model_path, "Hierarchy document to start from");
  init->add_flag("--force", force, "Overwrite an existing knowledge base");

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  std::string host = "127.0.0.1";
  int port = 8080;
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--port", port);

  auto* submit = app.add_subcommand("submit", "Submit an intent sentence");
  std::string text;
  bool dry_run = false;
  std::optional<std::uint64_t> expected_version;
  submit->add_option("text", text)->required();
  submit->add_flag("--dry-run", dry_run, "Compile and report without applying");
  submit->add_option("--expected-version", expected_version);

  auto* decide_cmd = app.add_subcommand("decide", "Query an access decision");
  std::string user, asset, time;
  bool record = false;
  decide_cmd->add_option("user", user)->required();
  decide_cmd->add_option("asset", asset)->required();
  decide_cmd->add_option("time", time, "HH:MM")->required();
  decide_cmd->add_flag("--record", record, "Record the decision in telemetry");

  auto* policies = app.add_subcommand("policies", "List stored policies");

  auto* alerts = app.add_subcommand("alerts", "List pending admin alerts");
  std::string admin;
  alerts->add_option("--admin", admin);

  auto* ack = app.add_subcommand("ack", "Acknowledge an alert");
  std::string alert_id;
  ack->add_option("alert_id", alert_id)->required();

  auto* anomalies = app.add_subcommand("anomalies", "Run the anomaly scan");
  auto* hierarchy = app.add_subcommand("hierarchy", "Print the hierarchy document");
  auto* enforcement = app.add_subcommand("enforcement", "Print the enforcement table");

  auto* vocab = app.add_subcommand("vocab", "Vocabulary maintenance");
  vocab->require_subcommand(1);
  auto* vocab_add_cmd = vocab->add_subcommand("add", "Add a synonym");
  std::string slot, canonical, synonym;
  vocab_add_cmd->add_option("slot", slot)->required();
  vocab_add_cmd->add_option("canonical", canonical)->required();
  vocab_add_cmd->add_option("synonym", synonym)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (init->parsed()) return kb_init(opts, model_path, force);
    if (serve_cmd->parsed()) return serve(opts, host, port);

    ApiRequest request;
    if (submit->parsed()) {
      json body = {{"text", text}, {"dry_run", dry_run}};
      if (expected_version) body["expected_version"] = *expected_version;
      request = {"POST", "/intents", {}, body.dump()};
    } else if (decide_cmd->parsed()) {
      request = {"POST", "/decisions/query", {},
                 json{{"user", user}, {"asset", asset}, {"time", time}}.dump(), record};
    } else if (policies->parsed()) {
      request = {"GET", "/policies"};
    } else if (alerts->parsed()) {
      request = {"GET", "/alerts"};
      if (!admin.empty()) request.params.emplace("admin", admin);
    } else if (ack->parsed()) {
      request = {"POST", "/alerts/" + alert_id + "/ack"};
    } else if (anomalies->parsed()) {
      request = {"GET", "/telemetry/anomalies"};
    } else if (hierarchy->parsed()) {
      request = {"GET", "/hierarchy"};
    } else if (enforcement->parsed()) {
      request = {"GET", "/debug/enforcement"};
    } else if (vocab_add_cmd->parsed()) {
      request = {"POST", "/vocabulary", {},
                 json{{"slot", slot}, {"canonical", canonical}, {"synonym", synonym}}.dump()};
    }
    return print(call(opts, std::move(request)));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
