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

#include "core/environment.h"

#include <cmath>
#include <random>

#include "doctest.h"

#include "core/power_model.h"
#include "core/station.h"
#include "support/reference_model.h"

namespace sleepnet {
namespace {

UserEquipment Ue(std::int64_t id, double x, double y, double bps = 180e3) {
  UserEquipment u;
  u.id = id;
  u.pos = {x, y};
  u.mean_packet_size_bits = 12000.0;
  u.arrival_rate_pps = bps / 12000.0;
  return u;
}

std::vector<BaseStation> SmallNetwork(const ScenarioConfig& cfg) {
  return {MakeStation(0, BsKind::kMacro, {0, 0}, cfg.mbs),
          MakeStation(1, BsKind::kSmall, {150, 0}, cfg.sbs),
          MakeStation(2, BsKind::kSmall, {-100, 120}, cfg.sbs)};
}

TEST_CASE("cost examples") {
  const CostConfig c;
  CHECK(Cost(10.0, 0.4, c) == doctest::Approx(5.2).epsilon(1e-15));
  CostConfig energy_only;
  energy_only.beta = 0.0;
  CHECK(Cost(17.0, 0.8, energy_only) == 0.5 * 17.0);
  CHECK(Cost(0.0, 1.5, c) == doctest::Approx(0.5 * (1.5 + 5.0)).epsilon(1e-15));
  CHECK(Cost(0.0, 1.0, c) == 0.5);
}

TEST_CASE("utility scale maps the reachable range onto [-1, 0]") {
  const ScenarioConfig cfg;
  const BaseStation sbs = MakeStation(1, BsKind::kSmall, {100, 0}, cfg.sbs);
  const UtilityScale s = MakeUtilityScale(sbs, cfg.cost, std::nullopt);
  const double idle = IdlePowerW(sbs.power);
  const double full = TotalPowerW(sbs.power, {1.0, 6.0, true});
  CHECK(s.floor == doctest::Approx(0.5 * idle));
  CHECK(s.ceiling == doctest::Approx(0.5 * full + 0.5));
  CHECK(s.Normalize(s.floor) == 0.0);
  CHECK(s.Normalize(s.ceiling) == -1.0);
  CHECK(s.Normalize(-100.0) == 0.0);
  CHECK(s.Normalize(1e9) == -1.0);
  CHECK(s.Normalize(0.5 * (s.floor + s.ceiling)) == doctest::Approx(-0.5));
  CHECK(MakeUtilityScale(sbs, cfg.cost, 100.0).ceiling == 100.0);
}

TEST_CASE("evaluate empty and macro-only networks") {
  ScenarioConfig cfg;
  const Environment env =
      MakeEnvironment({MakeStation(0, BsKind::kMacro, {0, 0}, cfg.mbs)}, cfg);
  const UeSet none;
  const GainTable t0(env, none);
  const std::vector<Action> act{env.stations[0].actions[1]};
  const Outcome o = Evaluate(env, t0, none, act, std::vector<double>{0.0});
  CHECK(o.loads[0] == 0.0);
  CHECK(o.costs[0] == 0.5 * TotalPowerW(env.stations[0].power, act[0]));
  CHECK(o.association.serving.empty());

  const Environment net = MakeEnvironment(SmallNetwork(cfg), cfg);
  const UeSet ues{Ue(0, 140, 10), Ue(1, -90, 110), Ue(2, 300, 300)};
  const GainTable table(net, ues);
  const std::vector<Action> sbs_off{net.stations[0].actions[1], net.stations[1].actions[0],
                                    net.stations[2].actions[0]};
  const Outcome m = Evaluate(net, table, ues, sbs_off, std::vector<double>(3, 0.0));
  for (int s : m.association.serving) CHECK(s == 0);
  CHECK(m.active_count == 1);
}

TEST_CASE("evaluate agrees with the reference model") {
  std::mt19937_64 gen(43);
  std::uniform_real_distribution<double> pos(-450.0, 450.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ScenarioConfig cfg;
  for (int trial = 0; trial < 200; ++trial) {
    if (trial % 2 == 1) cfg.association.delta = unit(gen) * 2.0;
    std::vector<BaseStation> bss{MakeStation(0, BsKind::kMacro, {0, 0}, cfg.mbs)};
    const int n = 1 + static_cast<int>(unit(gen) * 5);
    for (int i = 0; i < n; ++i) {
      bss.push_back(MakeStation(i + 1, BsKind::kSmall, {pos(gen), pos(gen)}, cfg.sbs));
    }
    UeSet ues;
    const int m = static_cast<int>(unit(gen) * 60);
    // Heavy traffic now and then so overload is exercised.
    const double bps = trial % 5 == 0 ? 5e6 : 180e3;
    for (int u = 0; u < m; ++u) ues.push_back(Ue(u, pos(gen), pos(gen), bps));
    std::vector<Action> act;
    std::vector<double> rho_hat;
    for (const BaseStation& b : bss) {
      act.push_back(b.actions[static_cast<std::size_t>(unit(gen) * b.actions.size())]);
      rho_hat.push_back(unit(gen) * 1.5);
    }
    const Environment env = MakeEnvironment(bss, cfg);
    const GainTable table(env, ues);
    const Outcome o = Evaluate(env, table, ues, act, rho_hat);
    const ref::Result r = ref::Evaluate(bss, ues, act, rho_hat, cfg);
    CHECK(o.association.serving == r.serving);
    bool feasible = true;
    for (std::size_t b = 0; b < bss.size(); ++b) {
      CHECK(o.loads[b] == doctest::Approx(r.loads[b]).epsilon(1e-12));
      CHECK(o.costs[b] == doctest::Approx(r.costs[b]).epsilon(1e-12));
      CHECK(o.utilities[b] == doctest::Approx(r.utilities[b]).epsilon(1e-12));
      feasible = feasible && !o.overloaded[b];
    }
    CHECK(feasible == r.feasible);
    CHECK(o.TotalCost() == doctest::Approx(r.total).epsilon(1e-12));
  }
}

TEST_CASE("energy accounting") {
  std::mt19937_64 gen(47);
  std::uniform_real_distribution<double> pos(-450.0, 450.0);
  ScenarioConfig cfg;
  const Environment env = MakeEnvironment(SmallNetwork(cfg), cfg);
  UeSet ues;
  for (int u = 0; u < 30; ++u) ues.push_back(Ue(u, pos(gen), pos(gen)));
  const GainTable table(env, ues);
  const std::vector<double> rho(3, 0.2);
  for (std::size_t i = 1; i < env.stations[1].actions.size(); ++i) {
    std::vector<Action> on{env.stations[0].actions[1], env.stations[1].actions[i],
                           env.stations[2].actions[i]};
    std::vector<Action> off = on;
    off[1] = env.stations[1].actions[0];
    const Outcome a = Evaluate(env, table, ues, on, rho);
    const Outcome b = Evaluate(env, table, ues, off, rho);
    double ea = 0.0, eb = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(a.total_power_w[k] == TotalPowerW(env.stations[k].power, on[k]));
      ea += a.total_power_w[k];
      eb += b.total_power_w[k];
    }
    CHECK(eb < ea);
  }
}

TEST_CASE("an untouched station's outcome ignores unserved UEs") {
  ScenarioConfig cfg;
  const Environment env = MakeEnvironment(SmallNetwork(cfg), cfg);
  UeSet ues{Ue(0, 10, 10)};
  const GainTable table(env, ues);
  const std::vector<Action> act{env.stations[0].actions[1], env.stations[1].actions[0],
                                env.stations[2].actions[0]};
  const Outcome o = Evaluate(env, table, ues, act, std::vector<double>(3, 0.0));
  CHECK(o.loads[1] == 0.0);
  CHECK(o.costs[1] == 0.5 * IdlePowerW(env.stations[1].power));
  CHECK(o.utilities[1] == 0.0);
  CHECK_FALSE(o.outage);
}

}  // namespace
}  // namespace sleepnet
