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

// Topology generation, UE arrival/departure schedules, and the experiment
// sweeps built on top of the engine and baselines.

#ifndef SLEEPNET_CORE_SCENARIO_H_
#define SLEEPNET_CORE_SCENARIO_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/config.h"
#include "core/environment.h"
#include "core/game_engine.h"
#include "core/rng.h"

namespace sleepnet {

struct Topology {
  std::vector<BaseStation> stations;  // macro station first, at the origin
  UeSet ues;
};

// Uniform placement in the cell disc with rejection until every minimum
// separation holds. Throws kBudget naming the pair when 1e5 attempts for one
// entity all fail.
Topology GenerateTopology(const ScenarioConfig& config, std::uint64_t seed);

// Draws one UE position and traffic respecting the separations to `stations`.
UserEquipment SampleUe(const ScenarioConfig& config,
                       const std::vector<BaseStation>& stations,
                       std::int64_t id, Rng& placement, Rng& traffic);

struct ScheduleEpoch {
  std::size_t duration_iterations = 0;
  int ue_delta = 0;  // applied at the start of the epoch
};

struct DynamicSchedule {
  std::vector<ScheduleEpoch> epochs;
};

// A warm-up epoch with no change followed by `c.epochs` epochs of
// `c.ue_delta` UEs each.
DynamicSchedule CaseSchedule(const DynamicCase& c, std::size_t epoch_length);

// Adds |delta| UEs placed uniformly (delta > 0) or removes |delta| UEs chosen
// uniformly at random (delta < 0), drawing from the simulation's environment
// stream. Learner state persists. Throws kInput when removing more UEs than
// exist.
void ApplyScheduleEvent(Simulation& sim, int ue_delta);

// Runs fn(0..n-1), in parallel when more than one hardware thread exists.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& fn);

// --- Experiments -----------------------------------------------------------

struct CostPoint {
  std::size_t n_sbs = 0;
  std::size_t n_ue = 0;
  double learned = 0.0;        // seed-mean cost per BS over the tail window
  double learned_std = 0.0;
  double classical = 0.0;
  std::optional<double> exhaustive;
  std::vector<double> learned_per_seed;
  std::vector<double> classical_per_seed;
  std::vector<double> exhaustive_per_seed;

  double ReductionVsClassical() const { return 1.0 - learned / classical; }
};

struct CostSweep {
  std::vector<CostPoint> points;
  std::vector<std::string> notices;
};

CostSweep ExperimentCostVsSbs(const ScenarioConfig& config);
CostSweep ExperimentCostVsUe(const ScenarioConfig& config);

struct TradeoffPoint {
  std::size_t n_sbs = 0;
  std::size_t n_ue = 0;
  double learned_load = 0.0;
  double learned_energy_w = 0.0;
  double classical_load = 0.0;
  double classical_energy_w = 0.0;
};

std::vector<TradeoffPoint> ExperimentTradeoff(const ScenarioConfig& config);

struct DynamicEpochResult {
  std::size_t ue_count = 0;
  double active_fraction = 0.0;  // seed mean over the epoch's iterations
};

struct DynamicCaseResult {
  std::string name;
  DynamicEpochResult warmup;
  std::vector<DynamicEpochResult> epochs;
};

std::vector<DynamicCaseResult> ExperimentDynamic(const ScenarioConfig& config);

// Per-epoch mean active fraction for one seed and schedule.
std::vector<DynamicEpochResult> RunSchedule(const ScenarioConfig& config,
                                            std::size_t n_sbs,
                                            const DynamicSchedule& schedule,
                                            std::size_t initial_ues,
                                            std::uint64_t seed);

struct ConvergencePoint {
  std::size_t n_sbs = 0;
  std::size_t n_ue = 0;
  double mean_iterations = 0.0;  // non-converged seeds count as the horizon
  double std_iterations = 0.0;
  std::size_t converged_seeds = 0;
  std::vector<std::optional<std::size_t>> per_seed;
};

std::vector<ConvergencePoint> ExperimentConvergence(const ScenarioConfig& config);

// Renders the named experiment and writes <out_dir>/<name>.csv (summary) and
// <out_dir>/<name>.jsonl (per-seed rows). With dump_traces, also writes the
// learned iteration traces. Names: cost_vs_sbs, cost_vs_ue, tradeoff,
// dynamic, convergence.
void RunExperiment(const ScenarioConfig& config, const std::string& name,
                   const std::string& out_dir, bool dump_traces);

bool IsExperimentName(const std::string& name);

}  // namespace sleepnet

#endif  // SLEEPNET_CORE_SCENARIO_H_
