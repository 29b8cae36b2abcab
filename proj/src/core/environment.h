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

// Evaluation of one joint action: association, SINR, rates, loads, power,
// cost and normalized utility. This is the single code path used by the
// learning loop, the baselines, the exhaustive oracle, counterfactual replay
// and trace replay, so identical inputs always give bit-identical outputs.

#ifndef SLEEPNET_CORE_ENVIRONMENT_H_
#define SLEEPNET_CORE_ENVIRONMENT_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "core/association.h"
#include "core/config.h"
#include "core/geometry_channel.h"
#include "core/types.h"

namespace sleepnet {

using UeSet = std::vector<UserEquipment>;
using UeSetPtr = std::shared_ptr<const UeSet>;

// Loads above this are treated as this value for cost purposes.
inline constexpr double kOverloadCeiling = 10.0;

// alpha * P_total + beta * (rho + w * max(0, rho - 1)).
double Cost(double total_power_w, double load, const CostConfig& config);

// Affine map of a station's cost onto [-1, 0]: the cheapest reachable cost
// (lowest power draw at zero load) maps to 0 and the ceiling to -1.
struct UtilityScale {
  double floor = 0.0;
  double ceiling = 1.0;

  double Normalize(double cost) const;
};

UtilityScale MakeUtilityScale(const BaseStation& station,
                              const CostConfig& config,
                              std::optional<double> ceiling_override);

struct Environment {
  std::vector<BaseStation> stations;
  ChannelParams channel;
  AssociationConfig association;
  CostConfig cost;
  std::vector<UtilityScale> scales;

  std::size_t size() const { return stations.size(); }
};

// Environment with utility scales derived from the configuration.
Environment MakeEnvironment(std::vector<BaseStation> stations,
                            const ScenarioConfig& config);

// Channel gains between every UE and every station, gains[u * n_bs + b].
class GainTable {
 public:
  GainTable(const Environment& env, const UeSet& ues);

  std::span<const double> gains() const { return gains_; }
  double Gain(std::size_t u, std::size_t b) const {
    return gains_[u * n_bs_ + b];
  }
  std::size_t n_ues() const { return n_ues_; }
  double noise_w() const { return noise_w_; }

 private:
  std::size_t n_ues_;
  std::size_t n_bs_;
  std::vector<double> gains_;
  double noise_w_;
};

struct Outcome {
  AssociationMap association;
  std::vector<double> rates_bps;       // per UE, 0 when unserved
  std::vector<double> loads;           // per station, capped at the ceiling
  std::vector<double> total_power_w;
  std::vector<double> costs;
  std::vector<double> utilities;       // normalized, in [-1, 0]
  std::vector<bool> overloaded;        // rho > 1
  std::size_t active_count = 0;
  bool outage = false;                 // a served UE had zero rate

  double TotalCost() const;
};

Outcome Evaluate(const Environment& env, const GainTable& table,
                 const UeSet& ues, std::span<const Action> actions,
                 std::span<const double> advertised_loads);

}  // namespace sleepnet

#endif  // SLEEPNET_CORE_ENVIRONMENT_H_
