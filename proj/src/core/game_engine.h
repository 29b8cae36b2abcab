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

// The synchronous play loop. One iteration:
//   1. every station samples an action from its previous mixed strategy,
//   2. every station advertises its updated load estimate,
//   3. UEs associate,
//   4. SINR, rates, loads and power are computed,
//   5. costs and utilities are computed,
//   6. every learner updates its estimates, strategy and load estimate.
// Stations never read each other's learner state.

#ifndef SLEEPNET_CORE_GAME_ENGINE_H_
#define SLEEPNET_CORE_GAME_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "core/config.h"
#include "core/environment.h"
#include "core/regret_learner.h"
#include "core/rng.h"
#include "core/types.h"

namespace sleepnet {

enum class RunMode {
  kLearned,  // regret learning
  kFixed,    // a fixed joint action every iteration, no learning
};

struct StationRecord {
  int action_index = -1;  // -1 when the action is outside the action space
  Action action;
  double advertised_load = 0.0;
  double load = 0.0;
  double total_power_w = 0.0;
  double cost = 0.0;
  double utility = 0.0;
  double strategy_change_l1 = 0.0;
  bool overloaded = false;
};

struct TraceRecord {
  std::size_t iteration = 0;
  std::vector<StationRecord> stations;
  AssociationMap association;
  std::vector<double> rates_bps;
  std::size_t active_count = 0;
  bool outage = false;
  UeSetPtr ues;
  // Filled every `strategy_stride` iterations when enabled.
  std::vector<std::vector<double>> strategies;
  std::vector<std::vector<double>> regrets;

  double TotalCost() const;
};

using Trace = std::vector<TraceRecord>;

struct SimulationState {
  std::vector<LearnerState> learners;
  std::vector<double> load_estimates;  // rho_hat(t - 1)
  std::vector<double> last_loads;      // rho(t - 1)
  std::size_t iteration = 0;
  std::vector<Rng> station_streams;
  Rng environment_stream;
  UeSetPtr ues;
};

class Simulation {
 public:
  // Learned mode over the stations' own action spaces.
  Simulation(const ScenarioConfig& config, std::vector<BaseStation> stations,
             UeSet ues, std::uint64_t seed);

  // Fixed mode: `actions` is played every iteration; `association` replaces
  // the configured association rule.
  static Simulation Fixed(const ScenarioConfig& config,
                          std::vector<BaseStation> stations, UeSet ues,
                          std::uint64_t seed, std::vector<Action> actions,
                          const AssociationConfig& association);

  // One iteration. On error nothing is modified.
  const TraceRecord& Step();

  // Appends `iterations` records to the trace.
  const Trace& Run(std::size_t iterations);

  // Swaps the UE population; learner and load state carry over.
  void ReplaceUes(UeSet ues);

  RunMode mode() const { return mode_; }
  const Environment& environment() const { return env_; }
  const SimulationState& state() const { return state_; }
  SimulationState& mutable_state() { return state_; }
  const Trace& trace() const { return trace_; }
  const ScenarioConfig& config() const { return config_; }
  std::uint64_t seed() const { return seed_; }

 private:
  Simulation(const ScenarioConfig& config, Environment env, UeSet ues,
             std::uint64_t seed, RunMode mode);

  ScenarioConfig config_;
  Environment env_;
  RunMode mode_;
  std::uint64_t seed_;
  std::vector<Action> fixed_actions_;
  SimulationState state_;
  std::optional<GainTable> gains_;
  Trace trace_;
};

struct CceGap {
  std::vector<double> per_station;
  double network = 0.0;
};

// For each station and each fixed deviation, replays the last `window`
// records with the other stations' recorded actions and advertised loads,
// and compares the mean counterfactual utility with the mean realized one.
CceGap MeasureCceGap(const Environment& env, const Trace& trace,
                     std::size_t window);

// Counterfactual gain of replaying station `bs`'s own recorded actions. Zero
// by construction; exercised as a soundness check.
double SelfDeviationGap(const Environment& env, const Trace& trace,
                        std::size_t bs, std::size_t window);

// Earliest iteration t >= window such that every station's strategy moved by
// less than `tol` (L1) in each of the `window` iterations ending at t.
std::optional<std::size_t> DetectConvergence(const Trace& trace,
                                             std::size_t window, double tol);

struct WindowSummary {
  double cost_per_bs = 0.0;
  double energy_per_bs_w = 0.0;
  double load_per_bs = 0.0;
  double active_fraction = 0.0;
  double total_cost = 0.0;
  double utility_per_bs = 0.0;
};

// Means over records [begin, end) of the trace.
WindowSummary Summarize(const Trace& trace, std::size_t begin, std::size_t end);

// Means over the last `window` records.
WindowSummary SummarizeTail(const Trace& trace, std::size_t window);

}  // namespace sleepnet

#endif  // SLEEPNET_CORE_GAME_ENGINE_H_
