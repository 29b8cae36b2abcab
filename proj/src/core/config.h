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

// Scenario configuration: every tunable of the simulator with its default.
// Files are JSON; missing keys keep their defaults and unknown keys are
// rejected.

#ifndef SLEEPNET_CORE_CONFIG_H_
#define SLEEPNET_CORE_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/association.h"
#include "core/geometry_channel.h"
#include "core/regret_learner.h"
#include "core/types.h"

namespace sleepnet {

struct StationKindConfig {
  double max_transmit_dbm = 30.0;
  PowerModelParams power;
  double rho_best = 0.7;
  // Active power levels relative to the maximum transmit power.
  std::vector<double> power_offsets_db;
  std::vector<double> creb_db;
  bool sleep_capable = true;
};

StationKindConfig DefaultMacroConfig();
StationKindConfig DefaultSmallConfig();

struct MinDistances {
  double mbs_sbs = 75.0;
  double mbs_ue = 35.0;
  double sbs_sbs = 40.0;
  double sbs_ue = 10.0;
};

enum class TrafficMode { kHomogeneous, kUniform, kExponential };

struct TrafficConfig {
  double mean_bps = 180e3;
  double mean_packet_size_bits = 12000.0;
  TrafficMode mode = TrafficMode::kHomogeneous;
  double spread = 0.5;  // kUniform: mean * [1 - spread, 1 + spread]
};

struct CostConfig {
  double alpha = 0.5;
  double beta = 0.5;
  double overload_penalty_weight = 10.0;
  // Load at which, together with the largest power draw, the normalized
  // utility reaches -1.
  double utility_load_ceiling = 1.0;
  std::optional<double> utility_ceiling_mbs;
  std::optional<double> utility_ceiling_sbs;
};

struct ConvergenceConfig {
  std::size_t window = 50;
  double tol = 1e-3;
};

struct OracleConfig {
  std::uint64_t budget = 1'000'000;
  std::size_t max_rounds = 100;
  double tol = 1e-6;
};

struct DynamicCase {
  std::size_t initial_ues = 20;
  int ue_delta = 10;
  std::size_t epochs = 5;
};

struct ExperimentConfig {
  std::vector<std::size_t> sbs_sweep{1, 2, 3, 4, 5, 6, 7, 8};
  std::size_t ues_for_sbs_sweep = 100;
  std::vector<std::size_t> ue_sweep{20, 40, 60, 80, 100, 120, 140, 160};
  std::size_t sbs_for_ue_sweep = 8;
  std::vector<std::size_t> tradeoff_sbs{4, 8};
  std::vector<std::size_t> tradeoff_ues{20, 40, 60, 80, 100, 120, 140, 160};
  std::size_t dynamic_sbs = 8;
  std::size_t iterations_per_epoch = 500;
  DynamicCase case1{20, 10, 5};
  DynamicCase case2{80, -10, 5};
  std::vector<std::size_t> convergence_sbs{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<std::size_t> convergence_ues{50, 100};
  // Trailing iterations averaged for steady-state metrics.
  std::size_t metrics_window = 500;
};

struct ScenarioConfig {
  // Geometry and population.
  double cell_radius_m = 500.0;
  std::size_t n_sbs = 8;
  std::size_t n_ue = 100;
  MinDistances min_distances;
  TrafficConfig traffic;
  std::size_t iterations = 2000;
  std::vector<std::uint64_t> seeds;

  ChannelParams channel;
  StationKindConfig mbs = DefaultMacroConfig();
  StationKindConfig sbs = DefaultSmallConfig();
  AssociationConfig association;
  LoadEstimateSchedule load_schedule;
  LearningRates learning;
  CostConfig cost;
  ConvergenceConfig convergence;
  std::size_t cce_window = 500;
  OracleConfig oracle;
  ExperimentConfig experiments;
  // Dump mixed strategies and regrets every `strategy_stride` iterations
  // (0 disables).
  std::size_t strategy_stride = 0;

  ScenarioConfig();
};

// Throws kConfig naming the offending field.
void Validate(const ScenarioConfig& config);

ScenarioConfig ParseConfig(const std::string& json_text);
ScenarioConfig LoadConfig(const std::string& path);
std::string ConfigToJson(const ScenarioConfig& config, int indent = 2);

}  // namespace sleepnet

#endif  // SLEEPNET_CORE_CONFIG_H_
