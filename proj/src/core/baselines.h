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

// Reference points for the learned dynamics:
//  - the classical network: every station always on at full power, zero
//    CREB, max-RSSI association, no adaptation;
//  - the exhaustive oracle: the joint action minimizing total network cost
//    over the discrete joint action space.

#ifndef SLEEPNET_CORE_BASELINES_H_
#define SLEEPNET_CORE_BASELINES_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "core/config.h"
#include "core/environment.h"
#include "core/game_engine.h"

namespace sleepnet {

enum class BaselineKind { kClassical, kExhaustive };

std::string_view BaselineName(BaselineKind kind);

Simulation MakeClassicalSimulation(const ScenarioConfig& config,
                                   std::vector<BaseStation> stations, UeSet ues,
                                   std::uint64_t seed);

Trace ClassicalRun(const ScenarioConfig& config,
                   std::vector<BaseStation> stations, UeSet ues,
                   std::uint64_t seed, std::size_t iterations);

// Product of action-space sizes, saturating at UINT64_MAX.
std::uint64_t JointSpaceSize(const Environment& env);

// Mixed-radix decoding; station 0 is the most significant digit, so index
// order is lexicographic order on the joint action.
std::vector<std::size_t> DecodeJointAction(const Environment& env,
                                           std::uint64_t index);

struct FixedPointResult {
  Outcome outcome;
  std::vector<double> advertised_loads;
  std::size_t rounds = 0;
  bool converged = false;
};

// Evaluates a static joint action with the advertised loads iterated to the
// loads they induce (starting from zero), up to max_rounds.
FixedPointResult EvaluateAtLoadFixedPoint(const Environment& env,
                                          const GainTable& table,
                                          const UeSet& ues,
                                          std::span<const Action> actions,
                                          const OracleConfig& config);

struct OracleResult {
  std::uint64_t joint_index = 0;
  std::vector<std::size_t> action_indices;
  std::vector<Action> actions;
  double total_cost = 0.0;
  std::vector<double> per_station_costs;
  std::vector<double> loads;
  bool feasible = false;  // every rho_b <= 1
  std::uint64_t joint_space_size = 0;
};

// Minimizes the sum of station costs, preferring configurations without
// overload. Ties go to the smallest joint index. Throws kBudget when the
// joint space exceeds config.budget.
OracleResult ExhaustiveSearch(const Environment& env, const UeSet& ues,
                              const OracleConfig& config);

}  // namespace sleepnet

#endif  // SLEEPNET_CORE_BASELINES_H_
