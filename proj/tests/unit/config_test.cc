// Copyright 2026 The Sleepnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/config.h"

#include <string>

#include "doctest.h"

#include "core/errors.h"

namespace sleepnet {
namespace {

ErrorKind KindOf(const std::string& json) {
  try {
    ParseConfig(json);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a configuration error");
  return ErrorKind::kIo;
}

std::string MessageOf(const std::string& json) {
  try {
    ParseConfig(json);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

// Published simulation parameters.
TEST_CASE("defaults carry the published simulation parameters") {
  const ScenarioConfig c;
  CHECK(c.channel.bandwidth_hz == 10e6);
  CHECK(c.channel.noise_density_dbm_per_hz == -174.0);
  CHECK(c.traffic.mean_bps == 180e3);
  CHECK(c.mbs.max_transmit_dbm == 46.0);
  CHECK(c.sbs.max_transmit_dbm == 30.0);
  CHECK(c.min_distances.mbs_sbs == 75.0);
  CHECK(c.min_distances.mbs_ue == 35.0);
  CHECK(c.min_distances.sbs_sbs == 40.0);
  CHECK(c.min_distances.sbs_ue == 10.0);
  CHECK(c.channel.pathloss_mbs.intercept_db == 128.1);
  CHECK(c.channel.pathloss_sbs.intercept_db == 140.7);
  CHECK(c.channel.pathloss_mbs.slope_db_per_decade == 37.6);
  CHECK(c.channel.pathloss_sbs.slope_db_per_decade == 37.6);
  CHECK(c.learning.kappa == 10.0);
  CHECK(c.cost.alpha == 0.5);
  CHECK(c.cost.beta == 0.5);
  CHECK(c.learning.tau_exponent == 0.6);
  CHECK(c.learning.iota_exponent == 0.7);
  CHECK(c.learning.epsilon_exponent == 0.8);
}

TEST_CASE("engineering defaults") {
  const ScenarioConfig c;
  CHECK(c.cell_radius_m == 500.0);
  CHECK(c.seeds.size() == 20);
  CHECK(c.experiments.iterations_per_epoch == 500);
  CHECK(c.oracle.budget == 1000000);
  CHECK(c.oracle.max_rounds == 100);
  CHECK(c.cost.overload_penalty_weight == 10.0);
  CHECK(c.convergence.window == 50);
  CHECK_FALSE(c.mbs.sleep_capable);
  CHECK(c.sbs.sleep_capable);
  CHECK_NOTHROW(Validate(c));
}

TEST_CASE("empty document yields defaults") {
  CHECK(ConfigToJson(ParseConfig("{}")) == ConfigToJson(ScenarioConfig{}));
}

TEST_CASE("round trip through JSON") {
  ScenarioConfig c;
  c.n_sbs = 3;
  c.n_ue = 42;
  c.seeds = {5, 9};
  c.traffic.mode = TrafficMode::kExponential;
  c.association.delta = 0.5;
  c.association.creb_mode = CrebMode::kLinearAdditive;
  c.load_schedule.constant = true;
  c.load_schedule.constant_rate = 0.2;
  c.cost.utility_ceiling_sbs = 7.5;
  c.sbs.creb_db = {0.0, 2.0};
  c.experiments.case2.ue_delta = -7;
  c.mbs.power.p_max_w = 900.0;
  const std::string text = ConfigToJson(c);
  const ScenarioConfig back = ParseConfig(text);
  CHECK(ConfigToJson(back) == text);
  CHECK(back.n_ue == 42);
  CHECK(back.association.creb_mode == CrebMode::kLinearAdditive);
  CHECK(back.cost.utility_ceiling_sbs == 7.5);
  CHECK_FALSE(back.cost.utility_ceiling_mbs.has_value());
  CHECK(back.experiments.case2.ue_delta == -7);
  CHECK(back.mbs.power.p_max_w == 900.0);
  CHECK(back.sbs.power.p_max_w == ScenarioConfig{}.sbs.power.p_max_w);
  CHECK(ParseConfig(ConfigToJson(c, -1)).n_sbs == 3);
}

TEST_CASE("rejections") {
  CHECK(KindOf(R"({"scenario": {"n_sbs": 2, "bogus": 1}})") == ErrorKind::kConfig);
  CHECK(MessageOf(R"({"scenario": {"bogus": 1}})").find("scenario.bogus") !=
        std::string::npos);
  CHECK(KindOf(R"({"nonsense": {}})") == ErrorKind::kConfig);
  CHECK(KindOf("{not json") == ErrorKind::kConfig);
  CHECK(KindOf(R"({"scenario": {"n_sbs": -1}})") == ErrorKind::kConfig);
  CHECK(KindOf(R"({"scenario": {"n_sbs": "two"}})") == ErrorKind::kConfig);
  CHECK(KindOf(R"({"scenario": {"cell_radius_m": 0}})") == ErrorKind::kConfig);
  CHECK(KindOf(R"({"scenario": {"traffic": {"mean_bps": 0}}})") == ErrorKind::kConfig);
  CHECK(KindOf(R"({"scenario": {"min_distances_m": {"sbs_ue": 0}}})") ==
        ErrorKind::kConfig);
  CHECK(KindOf(R"({"association": {"creb_mode": "sideways"}})") == ErrorKind::kConfig);
  CHECK(KindOf(R"({"learning": {"tau_exponent": 0.4}})") == ErrorKind::kConfig);
  CHECK(MessageOf(R"({"learning": {"tau_exponent": 0.75}})").find("(iii)") !=
        std::string::npos);
  CHECK(KindOf(R"({"mbs": {"creb_db": [3]}})") == ErrorKind::kConfig);
  CHECK(KindOf(R"({"sbs": {"power_offsets_db": [1]}})") == ErrorKind::kConfig);
  CHECK(KindOf(R"({"sbs": {"p_max_total_w": 5}})") == ErrorKind::kConfig);
  CHECK(KindOf(R"({"sbs": {"sigma_dc": 1.0}})") == ErrorKind::kConfig);
  CHECK(KindOf(R"({"cost": {"alpha": -1}})") == ErrorKind::kConfig);
  CHECK(KindOf(R"({"convergence": {"window": 1}})") == ErrorKind::kConfig);
}

TEST_CASE("shipped configuration file parses to the defaults") {
  const ScenarioConfig c = LoadConfig(SLEEPNET_SOURCE_DIR "/configs/default.json");
  CHECK(ConfigToJson(c) == ConfigToJson(ScenarioConfig{}));
  try {
    LoadConfig(SLEEPNET_SOURCE_DIR "/configs/does_not_exist.json");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kConfig);
  }
}

}  // namespace
}  // namespace sleepnet
