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

#include "core/association.h"

#include <limits>

#include <fmt/core.h>

#include "core/errors.h"

namespace sleepnet {

void Validate(const AssociationConfig& config) {
  if (!(config.delta >= 0.0) || !std::isfinite(config.delta)) {
    Fail(ErrorKind::kParameter,
         fmt::format("association: delta = {} must be >= 0", config.delta));
  }
}

void Validate(const LoadEstimateSchedule& schedule) {
  if (schedule.constant) {
    if (!(schedule.constant_rate >= 0.0 && schedule.constant_rate <= 1.0)) {
      Fail(ErrorKind::kParameter, "load estimate rate must lie in [0, 1]");
    }
  } else if (!(schedule.exponent >= 0.0)) {
    Fail(ErrorKind::kParameter, "load estimate exponent must be >= 0");
  }
}

double AssociationMetric(std::size_t bs, const UserEquipment& ue,
                         double advertised_load, const Action& action,
                         std::span<const BaseStation> stations,
                         const ChannelParams& params,
                         const AssociationConfig& config) {
  if (bs >= stations.size()) {
    Fail(ErrorKind::kInput, "association metric: station index out of range");
  }
  if (!(advertised_load >= 0.0)) {
    Fail(ErrorKind::kInput, "association metric: negative advertised load");
  }
  if (!action.active) return 0.0;
  const BaseStation& station = stations[bs];
  const double gain = ChannelGain(station.kind, station.pos, ue.pos, params);
  const double rx =
      AssociationRxPower(station.kind, action, gain, config.creb_mode);
  return LoadFactor(advertised_load, station.rho_best, config.delta) * rx;
}

namespace {

template <typename MetricFn>
AssociationMap AssociateImpl(std::size_t n_ues, std::size_t n_bs,
                             std::span<const BaseStation> stations,
                             std::span<const Action> actions,
                             std::span<const double> advertised_loads,
                             const AssociationConfig& config,
                             MetricFn metric_rx) {
  if (actions.size() != n_bs || advertised_loads.size() != n_bs) {
    Fail(ErrorKind::kInput, "associate: per-station vectors size mismatch");
  }
  std::vector<double> load_factor(n_bs, 0.0);
  for (std::size_t b = 0; b < n_bs; ++b) {
    if (!(advertised_loads[b] >= 0.0)) {
      Fail(ErrorKind::kInput, "associate: negative advertised load");
    }
    load_factor[b] =
        LoadFactor(advertised_loads[b], stations[b].rho_best, config.delta);
  }
  AssociationMap map;
  map.serving.assign(n_ues, kUnserved);
  for (std::size_t u = 0; u < n_ues; ++u) {
    int best = kUnserved;
    double best_metric = -1.0;
    for (std::size_t b = 0; b < n_bs; ++b) {
      if (!actions[b].active) continue;
      const double m = load_factor[b] * metric_rx(u, b);
      if (best == kUnserved || m > best_metric) {
        best = static_cast<int>(b);
        best_metric = m;
      }
    }
    map.serving[u] = best;
    if (best != kUnserved && std::isinf(load_factor[best])) {
      ++map.unbounded_metric_count;
    }
  }
  return map;
}

}  // namespace

AssociationMap Associate(std::span<const UserEquipment> ues,
                         std::span<const BaseStation> stations,
                         std::span<const Action> actions,
                         std::span<const double> advertised_loads,
                         const ChannelParams& params,
                         const AssociationConfig& config) {
  return AssociateImpl(
      ues.size(), stations.size(), stations, actions, advertised_loads, config,
      [&](std::size_t u, std::size_t b) {
        const double gain = ChannelGain(stations[b].kind, stations[b].pos,
                                        ues[u].pos, params);
        return AssociationRxPower(stations[b].kind, actions[b], gain,
                                  config.creb_mode);
      });
}

AssociationMap AssociateWithGains(std::span<const double> gains,
                                  std::size_t n_ues,
                                  std::span<const BaseStation> stations,
                                  std::span<const Action> actions,
                                  std::span<const double> advertised_loads,
                                  const AssociationConfig& config) {
  const std::size_t n_bs = stations.size();
  if (gains.size() != n_ues * n_bs) {
    Fail(ErrorKind::kInput, "associate: gain table size mismatch");
  }
  if (actions.size() != n_bs) {
    Fail(ErrorKind::kInput, "associate: per-station vectors size mismatch");
  }
  std::vector<double> weight(n_bs);
  for (std::size_t b = 0; b < n_bs; ++b) {
    weight[b] = AssociationTxWeight(stations[b].kind, actions[b],
                                    config.creb_mode);
  }
  return AssociateImpl(n_ues, n_bs, stations, actions, advertised_loads, config,
                       [&](std::size_t u, std::size_t b) {
                         return weight[b] * gains[u * n_bs + b];
                       });
}

double BsLoad(std::size_t bs, const AssociationMap& map,
              std::span<const double> rates_bps,
              std::span<const UserEquipment> ues) {
  if (map.serving.size() != ues.size() || rates_bps.size() != ues.size()) {
    Fail(ErrorKind::kInput, "bs_load: per-UE vectors size mismatch");
  }
  double load = 0.0;
  for (std::size_t u = 0; u < ues.size(); ++u) {
    if (map.serving[u] != static_cast<int>(bs)) continue;
    if (!(rates_bps[u] > 0.0)) return std::numeric_limits<double>::infinity();
    load += ues[u].OfferedTrafficBps() / rates_bps[u];
  }
  return load;
}

double UpdateLoadEstimate(double prev_estimate, double prev_actual, double nu) {
  if (!(nu >= 0.0 && nu <= 1.0)) {
    Fail(ErrorKind::kParameter,
         fmt::format("load estimate: rate {} outside [0, 1]", nu));
  }
  // Convex form: nu = 1 and nu = 0 reproduce their inputs exactly.
  return (1.0 - nu) * prev_estimate + nu * prev_actual;
}

double LoadEstimateRate(std::size_t t, const LoadEstimateSchedule& schedule) {
  if (t == 0) Fail(ErrorKind::kDomain, "load estimate rate: t must be >= 1");
  if (schedule.constant) return schedule.constant_rate;
  return std::pow(static_cast<double>(t), -schedule.exponent);
}

}  // namespace sleepnet
