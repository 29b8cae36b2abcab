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

#include <algorithm>
#include <cmath>

#include "core/errors.h"
#include "core/power_model.h"

namespace sleepnet {

double Cost(double total_power_w, double load, const CostConfig& config) {
  const double effective =
      load + config.overload_penalty_weight * std::max(0.0, load - 1.0);
  return config.alpha * total_power_w + config.beta * effective;
}

double UtilityScale::Normalize(double cost) const {
  const double x = (cost - floor) / (ceiling - floor);
  return -std::clamp(x, 0.0, 1.0);
}

UtilityScale MakeUtilityScale(const BaseStation& station,
                              const CostConfig& config,
                              std::optional<double> ceiling_override) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const Action& a : station.actions) {
    const double p = TotalPowerW(station.power, a);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  UtilityScale scale;
  scale.floor = Cost(lo, 0.0, config);
  scale.ceiling = ceiling_override
                      ? *ceiling_override
                      : Cost(hi, config.utility_load_ceiling, config);
  if (!(scale.ceiling > scale.floor)) scale.ceiling = scale.floor + 1.0;
  return scale;
}

Environment MakeEnvironment(std::vector<BaseStation> stations,
                            const ScenarioConfig& config) {
  Environment env;
  env.channel = config.channel;
  env.association = config.association;
  env.cost = config.cost;
  for (const BaseStation& s : stations) {
    env.scales.push_back(MakeUtilityScale(
        s, config.cost,
        s.kind == BsKind::kMacro ? config.cost.utility_ceiling_mbs
                                 : config.cost.utility_ceiling_sbs));
  }
  env.stations = std::move(stations);
  return env;
}

GainTable::GainTable(const Environment& env, const UeSet& ues)
    : n_ues_(ues.size()),
      n_bs_(env.stations.size()),
      gains_(n_ues_ * n_bs_),
      noise_w_(NoisePowerW(env.channel)) {
  for (std::size_t u = 0; u < n_ues_; ++u) {
    for (std::size_t b = 0; b < n_bs_; ++b) {
      const BaseStation& s = env.stations[b];
      gains_[u * n_bs_ + b] = ChannelGain(s.kind, s.pos, ues[u].pos, env.channel);
    }
  }
}

double Outcome::TotalCost() const {
  double total = 0.0;
  for (double c : costs) total += c;
  return total;
}

Outcome Evaluate(const Environment& env, const GainTable& table,
                 const UeSet& ues, std::span<const Action> actions,
                 std::span<const double> advertised_loads) {
  const std::size_t n_bs = env.size();
  const std::size_t n_ues = ues.size();
  if (actions.size() != n_bs || table.n_ues() != n_ues) {
    Fail(ErrorKind::kInput, "evaluate: action or gain table size mismatch");
  }
  Outcome out;
  out.association = AssociateWithGains(table.gains(), n_ues, env.stations,
                                       actions, advertised_loads,
                                       env.association);
  out.rates_bps.assign(n_ues, 0.0);
  std::vector<double> raw_load(n_bs, 0.0);
  for (std::size_t u = 0; u < n_ues; ++u) {
    const int s = out.association.serving[u];
    if (s == kUnserved) continue;
    // Same summation order as Sinr() so both paths agree bit for bit.
    double signal = 0.0;
    double interference = 0.0;
    for (std::size_t b = 0; b < n_bs; ++b) {
      if (!actions[b].active) continue;
      const double rx = actions[b].transmit_power_w * table.Gain(u, b);
      if (b == static_cast<std::size_t>(s)) {
        signal = rx;
      } else {
        interference += rx;
      }
    }
    const double sinr = signal / (interference + table.noise_w());
    const double rate = RateBps(sinr, env.channel);
    out.rates_bps[u] = rate;
    if (rate > 0.0) {
      raw_load[s] += ues[u].OfferedTrafficBps() / rate;
    } else {
      raw_load[s] = INFINITY;
      out.outage = true;
    }
  }
  out.loads.resize(n_bs);
  out.total_power_w.resize(n_bs);
  out.costs.resize(n_bs);
  out.utilities.resize(n_bs);
  out.overloaded.resize(n_bs);
  for (std::size_t b = 0; b < n_bs; ++b) {
    out.overloaded[b] = raw_load[b] > 1.0;
    out.loads[b] = std::min(raw_load[b], kOverloadCeiling);
    out.total_power_w[b] = TotalPowerW(env.stations[b].power, actions[b]);
    out.costs[b] = Cost(out.total_power_w[b], out.loads[b], env.cost);
    out.utilities[b] = env.scales[b].Normalize(out.costs[b]);
    if (actions[b].active) ++out.active_count;
  }
  return out;
}

}  // namespace sleepnet
