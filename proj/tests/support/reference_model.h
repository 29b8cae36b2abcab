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

// Straight-line reimplementation of the network model used as a test oracle.
// It shares only plain data types with the library: every formula is written
// out again here, with its own loop structure.

#ifndef SLEEPNET_TESTS_SUPPORT_REFERENCE_MODEL_H_
#define SLEEPNET_TESTS_SUPPORT_REFERENCE_MODEL_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "core/config.h"
#include "core/types.h"

namespace sleepnet::ref {

inline double Watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

inline double PathLoss(BsKind kind, double d, const ChannelParams& ch) {
  const double a = kind == BsKind::kMacro ? ch.pathloss_mbs.intercept_db
                                          : ch.pathloss_sbs.intercept_db;
  const double s = kind == BsKind::kMacro ? ch.pathloss_mbs.slope_db_per_decade
                                          : ch.pathloss_sbs.slope_db_per_decade;
  const double dmin = kind == BsKind::kMacro ? ch.pathloss_mbs.min_distance_m
                                             : ch.pathloss_sbs.min_distance_m;
  if (d < dmin) d = dmin;
  return a + s * std::log10(d / 1000.0);
}

inline double Gain(const BaseStation& bs, const Position& p,
                   const ChannelParams& ch) {
  const double d = std::hypot(bs.pos.x - p.x, bs.pos.y - p.y);
  return std::pow(10.0, -PathLoss(bs.kind, d, ch) / 10.0);
}

inline double Noise(const ChannelParams& ch) {
  return Watts(ch.noise_density_dbm_per_hz + 10.0 * std::log10(ch.bandwidth_hz));
}

inline double Power(const PowerModelParams& m, const Action& a) {
  const double sigma =
      (1.0 - m.sigma_dc) * (1.0 - m.sigma_ms) * (1.0 - m.sigma_cool);
  const double idle = (m.p_rf_w + m.p_bb_w) / sigma;
  if (!a.active) return idle;
  return a.transmit_power_w / (m.eta * sigma * (1.0 - m.sigma_feed)) +
         m.p_bck_w + idle;
}

inline double StationCost(double power, double load, const CostConfig& c) {
  const double over = load > 1.0 ? load - 1.0 : 0.0;
  return c.alpha * power + c.beta * (load + c.overload_penalty_weight * over);
}

struct Result {
  std::vector<int> serving;
  std::vector<double> loads;
  std::vector<double> costs;
  std::vector<double> utilities;
  bool feasible = true;
  double total = 0.0;
};

// Normalized utility from the scale definition: the cheapest power draw at
// zero load maps to 0, the largest draw at the configured load ceiling to -1.
inline double Utility(const BaseStation& bs, double cost, const CostConfig& c) {
  double lo = 1e300;
  double hi = -1e300;
  for (const Action& a : bs.actions) {
    lo = std::min(lo, Power(bs.power, a));
    hi = std::max(hi, Power(bs.power, a));
  }
  const double floor = StationCost(lo, 0.0, c);
  const double ceil = StationCost(hi, c.utility_load_ceiling, c);
  double x = (cost - floor) / (ceil - floor);
  if (x < 0.0) x = 0.0;
  if (x > 1.0) x = 1.0;
  return -x;
}

inline Result Evaluate(const std::vector<BaseStation>& bss,
                       const std::vector<UserEquipment>& ues,
                       const std::vector<Action>& act,
                       const std::vector<double>& rho_hat,
                       const ScenarioConfig& cfg) {
  const std::size_t nb = bss.size();
  Result r;
  r.serving.assign(ues.size(), -1);
  std::vector<double> load(nb, 0.0);
  const double noise = Noise(cfg.channel);
  for (std::size_t u = 0; u < ues.size(); ++u) {
    int best = -1;
    double best_m = 0.0;
    for (std::size_t b = 0; b < nb; ++b) {
      if (!act[b].active) continue;
      const double zeta = bss[b].kind == BsKind::kSmall ? act[b].creb_bias_db : 0;
      const double bias = std::pow(10.0, zeta / 10.0);
      const double eps = 1.0 - bss[b].rho_best;
      const double m = std::pow(rho_hat[b] + eps, -cfg.association.delta) *
                       bias * act[b].transmit_power_w * Gain(bss[b], ues[u].pos,
                                                             cfg.channel);
      if (best < 0 || m > best_m) {
        best = static_cast<int>(b);
        best_m = m;
      }
    }
    r.serving[u] = best;
    if (best < 0) continue;
    double signal = 0.0;
    double interf = 0.0;
    for (std::size_t b = 0; b < nb; ++b) {
      if (!act[b].active) continue;
      const double rx = act[b].transmit_power_w * Gain(bss[b], ues[u].pos,
                                                       cfg.channel);
      if (static_cast<int>(b) == best) {
        signal = rx;
      } else {
        interf += rx;
      }
    }
    const double rate =
        cfg.channel.bandwidth_hz * std::log2(1.0 + signal / (interf + noise));
    load[best] += ues[u].arrival_rate_pps * ues[u].mean_packet_size_bits / rate;
  }
  for (std::size_t b = 0; b < nb; ++b) {
    if (load[b] > 1.0) r.feasible = false;
    const double capped = std::min(load[b], 10.0);
    r.loads.push_back(capped);
    const double c = StationCost(Power(bss[b].power, act[b]), capped, cfg.cost);
    r.costs.push_back(c);
    r.utilities.push_back(Utility(bss[b], c, cfg.cost));
    r.total += c;
  }
  return r;
}

// Static joint action evaluated with advertised loads iterated to the loads
// they induce: start from zero, stop when max |rho - rho_hat| < tol or after
// max_rounds rounds.
inline Result EvaluateFixedPoint(const std::vector<BaseStation>& bss,
                                 const std::vector<UserEquipment>& ues,
                                 const std::vector<Action>& act,
                                 const ScenarioConfig& cfg) {
  std::vector<double> rho_hat(bss.size(), 0.0);
  Result r;
  for (std::size_t round = 0; round < cfg.oracle.max_rounds; ++round) {
    r = Evaluate(bss, ues, act, rho_hat, cfg);
    double diff = 0.0;
    for (std::size_t b = 0; b < bss.size(); ++b) {
      diff = std::max(diff, std::fabs(r.loads[b] - rho_hat[b]));
    }
    if (diff < cfg.oracle.tol) break;
    rho_hat = r.loads;
  }
  return r;
}

struct OracleAnswer {
  std::vector<std::size_t> choice;
  Result result;
};

// Nested enumeration of every joint action via an odometer whose last
// station turns fastest. Keeps the first best seen: feasible beats
// infeasible, then lower total cost.
inline OracleAnswer BruteForceOracle(const std::vector<BaseStation>& bss,
                                     const std::vector<UserEquipment>& ues,
                                     const ScenarioConfig& cfg) {
  std::vector<std::size_t> digits(bss.size(), 0);
  OracleAnswer best;
  bool have = false;
  while (true) {
    std::vector<Action> act;
    for (std::size_t b = 0; b < bss.size(); ++b) {
      act.push_back(bss[b].actions[digits[b]]);
    }
    Result r = EvaluateFixedPoint(bss, ues, act, cfg);
    const bool better =
        !have || (r.feasible && !best.result.feasible) ||
        (r.feasible == best.result.feasible && r.total < best.result.total);
    if (better) {
      best.choice = digits;
      best.result = std::move(r);
      have = true;
    }
    std::size_t b = bss.size();
    while (b > 0) {
      --b;
      if (++digits[b] < bss[b].actions.size()) break;
      digits[b] = 0;
      if (b == 0) return best;
    }
    if (bss.empty()) return best;
  }
}

}  // namespace sleepnet::ref

#endif  // SLEEPNET_TESTS_SUPPORT_REFERENCE_MODEL_H_
