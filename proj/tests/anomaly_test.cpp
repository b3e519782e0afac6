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

#include "doctest.h"
#include "scenario.hpp"
#include "scintent/anomaly.hpp"
#include "scintent/engine.hpp"
#include "scintent/error.hpp"

using namespace scintent;

namespace {

TelemetryEvent blocked(std::int64_t ts, const std::string& user, const std::string& asset = "plc-1",
                       const std::string& org = "o1") {
  return {ts, DecisionEvent{user, asset, org, 600, Verdict::kBlocked, {}, true}};
}

// Quadratic rescan: for every blocked event, count the same user's blocked
// events at or before it in log order whose timestamps fall in (t - W, t].
std::vector<AnomalyFlag> brute_force_scan(const TelemetryLog& log, const AnomalyRule& rule) {
  std::map<std::string, AnomalyFlag> flags;
  const auto& events = log.events();
  for (std::size_t k = 0; k < events.size(); ++k) {
    const auto* d = std::get_if<DecisionEvent>(&events[k].payload);
    if (d == nullptr || d->verdict != Verdict::kBlocked || flags.contains(d->user)) continue;
    const auto end = events[k].timestamp;
    std::map<std::string, int> hits;
    std::map<std::string, std::string> org_of;
    int count = 0;
    for (std::size_t j = 0; j <= k; ++j) {
      const auto* e = std::get_if<DecisionEvent>(&events[j].payload);
      if (e == nullptr || e->verdict != Verdict::kBlocked || e->user != d->user) continue;
      if (events[j].timestamp <= end - rule.window_minutes) continue;
      ++count;
      ++hits[e->asset];
      org_of[e->asset] = e->organization;
    }
    if (count < rule.threshold) continue;
    std::string top;
    for (const auto& [asset, n] : hits) {
      if (top.empty() || n > hits[top]) top = asset;
    }
    AnomalyFlag flag;
    flag.user = d->user;
    flag.count = count;
    flag.window_end = end;
    flag.organization = org_of[top];
    flag.suggested_intent = d->user + " is blocked to access to organization " + org_of[top];
    flags.emplace(d->user, flag);
  }
  std::vector<AnomalyFlag> out;
  for (const auto& [user, flag] : flags) out.push_back(flag);
  return out;
}

TelemetryLog random_log(testing::Rng& rng, const testing::GenModel& gen, const HierarchyModel& model,
                        int length) {
  TelemetryLog log;
  std::int64_t ts = 0;
  std::uniform_int_distribution<int> gap(0, 40);
  std::uniform_int_distribution<int> kind(0, 9);
  for (int i = 0; i < length; ++i) {
    ts += gap(rng);
    const auto& user = gen.users[std::uniform_int_distribution<std::size_t>(0, gen.users.size() - 1)(rng)];
    const auto& asset =
        gen.assets[std::uniform_int_distribution<std::size_t>(0, gen.assets.size() - 1)(rng)].id;
    const int k = kind(rng);
    if (k == 0) {
      log.append({ts, IntentSubmittedEvent{"i-1", "noise"}});
      continue;
    }
    const auto org = model.asset_domain(asset).organization();
    log.append({ts, DecisionEvent{user, asset, org, 0, k < 7 ? Verdict::kBlocked : Verdict::kAllowed,
                                  {}, true}});
  }
  return log;
}

}  // namespace

TEST_CASE("three blocked attempts inside an hour raise one flag") {
  TelemetryLog log;
  for (int t : {0, 10, 20}) log.append(blocked(t, "user-x"));
  const auto flags = anomaly_scan(log, {3, 60});
  CHECK(flags == brute_force_scan(log, {3, 60}));
  REQUIRE(flags.size() == 1);
  CHECK(flags[0].user == "user-x");
  CHECK(flags[0].count == 3);
  CHECK(flags[0].window_end == 20);
  CHECK(flags[0].suggested_intent == "user-x is blocked to access to organization o1");
}

TEST_CASE("quiet logs raise nothing") {
  CHECK(anomaly_scan(TelemetryLog{}, {3, 60}).empty());
  TelemetryLog two;
  two.append(blocked(0, "user-x"));
  two.append(blocked(5, "user-x"));
  CHECK(anomaly_scan(two, {3, 60}).empty());

  // Spread wider than the window.
  TelemetryLog spread;
  for (int t : {0, 60, 120}) spread.append(blocked(t, "user-x"));
  CHECK(anomaly_scan(spread, {3, 60}).empty());
  CHECK(anomaly_scan(spread, {3, 121}).size() == 1);
}

TEST_CASE("rule validation") {
  CHECK_THROWS_AS(anomaly_scan(TelemetryLog{}, {0, 60}), Error);
  CHECK_THROWS_AS(anomaly_scan(TelemetryLog{}, {3, 0}), Error);
}

TEST_CASE("most-hit asset picks the suggested organization") {
  TelemetryLog log;
  log.append(blocked(0, "user-x", "b1", "o2"));
  log.append(blocked(1, "user-x", "a1", "o1"));
  log.append(blocked(2, "user-x", "b1", "o2"));
  const auto flags = anomaly_scan(log, {3, 60});
  REQUIRE(flags.size() == 1);
  CHECK(flags[0].organization == "o2");

  TelemetryLog tie;
  tie.append(blocked(0, "user-x", "b1", "o2"));
  tie.append(blocked(1, "user-x", "a1", "o1"));
  CHECK(anomaly_scan(tie, {2, 60})[0].organization == "o1");
}

TEST_CASE("scan matches the brute-force rescan on random logs") {
  testing::Rng rng(17);
  int flagged = 0;
  for (int round = 0; round < 300; ++round) {
    const auto gen = testing::random_model_with_assets(rng);
    const auto model = gen.build();
    const auto log = random_log(rng, gen, model, 60);
    const AnomalyRule rule{std::uniform_int_distribution<int>(1, 6)(rng),
                           std::uniform_int_distribution<int>(1, 120)(rng)};
    const auto flags = anomaly_scan(log, rule);
    CHECK(flags == brute_force_scan(log, rule));
    CHECK(anomaly_scan(log, rule) == flags);
    flagged += static_cast<int>(flags.size());

    for (const auto& flag : flags) {
      CHECK(flag.count >= rule.threshold);
      // The suggestion closes the loop: it parses and compiles to a block.
      const auto spec = parse_intent(flag.suggested_intent, Vocabulary::defaults());
      const auto result = compile_intent(spec, model, PolicyStore{});
      REQUIRE(result.programs.size() == 1);
      CHECK(result.programs[0].user == flag.user);
      CHECK(result.programs[0].effect == Effect::kBlock);
    }

    // Allowed decisions, other kinds, and more hits for already-flagged
    // users do not move any flag.
    auto extended = log;
    const auto last = log.events().empty() ? 0 : log.events().back().timestamp;
    extended.append({last, IntentSubmittedEvent{"i-9", "noise"}});
    extended.append({last + 1, DecisionEvent{gen.users[0], gen.assets[0].id, "o1", 0,
                                             Verdict::kAllowed, {"p-1"}, false}});
    for (const auto& flag : flags) extended.append(blocked(last + 2, flag.user));
    CHECK(anomaly_scan(extended, rule) == flags);
  }
  CHECK(flagged > 0);
}
