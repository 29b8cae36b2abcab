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

// Load-aware UE association, per-station load and the slow load tracker.
//
// A UE at x joins argmax_b (rho_hat_b + eps_b)^(-delta) * Prx_b(x), where
// eps_b = 1 - rho_best_b and Prx_b is the (bias-adjusted) received power.
// delta = 0 reduces to max-RSSI association.

#ifndef SLEEPNET_CORE_ASSOCIATION_H_
#define SLEEPNET_CORE_ASSOCIATION_H_

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "core/geometry_channel.h"
#include "core/types.h"

namespace sleepnet {

enum class CrebMode {
  kDbMultiplicative,  // Prx = 10^(zeta/10) * P * h
  kLinearAdditive,    // Prx = (P + zeta) * h, zeta in watts
};

struct AssociationConfig {
  double delta = 1.0;
  CrebMode creb_mode = CrebMode::kDbMultiplicative;
};

void Validate(const AssociationConfig& config);

inline constexpr int kUnserved = -1;

// serving[u] is the station index serving UE u, or kUnserved.
struct AssociationMap {
  std::vector<int> serving;
  // UEs that chose a station whose load factor was unbounded (rho_hat + eps
  // = 0 with delta > 0).
  std::size_t unbounded_metric_count = 0;

  bool operator==(const AssociationMap&) const = default;
};

// Factor w with P^Rx = w * gain; zero for a sleeping station. The bias is
// used for association only and never enters SINR.
inline double AssociationTxWeight(BsKind kind, const Action& action,
                                  CrebMode mode) {
  if (!action.active) return 0.0;
  const double zeta = kind == BsKind::kSmall ? action.creb_bias_db : 0.0;
  if (mode == CrebMode::kLinearAdditive) return action.transmit_power_w + zeta;
  return std::pow(10.0, zeta / 10.0) * action.transmit_power_w;
}

inline double AssociationRxPower(BsKind kind, const Action& action, double gain,
                                 CrebMode mode) {
  return AssociationTxWeight(kind, action, mode) * gain;
}

// (rho_hat + eps)^(-delta); +infinity when the base is zero and delta > 0.
inline double LoadFactor(double advertised_load, double rho_best,
                         double delta) {
  return std::pow(advertised_load + (1.0 - rho_best), -delta);
}

double AssociationMetric(std::size_t bs, const UserEquipment& ue,
                         double advertised_load, const Action& action,
                         std::span<const BaseStation> stations,
                         const ChannelParams& params,
                         const AssociationConfig& config);

// Argmax association with lowest-index tie-break. Every UE is unserved when
// no station is active.
AssociationMap Associate(std::span<const UserEquipment> ues,
                         std::span<const BaseStation> stations,
                         std::span<const Action> actions,
                         std::span<const double> advertised_loads,
                         const ChannelParams& params,
                         const AssociationConfig& config);

// Same rule on precomputed gains, gains[u * n_bs + b].
AssociationMap AssociateWithGains(std::span<const double> gains,
                                  std::size_t n_ues,
                                  std::span<const BaseStation> stations,
                                  std::span<const Action> actions,
                                  std::span<const double> advertised_loads,
                                  const AssociationConfig& config);

// Sum over served UEs of offered traffic / rate. A zero rate contributes
// +infinity.
double BsLoad(std::size_t bs, const AssociationMap& map,
              std::span<const double> rates_bps,
              std::span<const UserEquipment> ues);

// rho_hat(t) = rho_hat(t-1) + nu * (rho(t-1) - rho_hat(t-1)), nu in [0, 1].
double UpdateLoadEstimate(double prev_estimate, double prev_actual, double nu);

struct LoadEstimateSchedule {
  bool constant = false;
  double exponent = 0.9;       // nu(t) = t^-exponent
  double constant_rate = 0.1;  // nu(t) = constant_rate
};

void Validate(const LoadEstimateSchedule& schedule);

double LoadEstimateRate(std::size_t t, const LoadEstimateSchedule& schedule);

}  // namespace sleepnet

#endif  // SLEEPNET_CORE_ASSOCIATION_H_
