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

#include "core/baselines.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include <fmt/core.h>

#include "core/errors.h"
#include "core/station.h"

namespace sleepnet {

std::string_view BaselineName(BaselineKind kind) {
  return kind == BaselineKind::kClassical ? "classical" : "exhaustive";
}

Simulation MakeClassicalSimulation(const ScenarioConfig& config,
                                   std::vector<BaseStation> stations, UeSet ues,
                                   std::uint64_t seed) {
  std::vector<Action> actions;
  for (const BaseStation& s : stations) actions.push_back(MaxPowerAction(s));
  AssociationConfig rssi = config.association;
  rssi.delta = 0.0;
  return Simulation::Fixed(config, std::move(stations), std::move(ues), seed,
                           std::move(actions), rssi);
}

Trace ClassicalRun(const ScenarioConfig& config,
                   std::vector<BaseStation> stations, UeSet ues,
                   std::uint64_t seed, std::size_t iterations) {
  Simulation sim =
      MakeClassicalSimulation(config, std::move(stations), std::move(ues), seed);
  return sim.Run(iterations);
}

std::uint64_t JointSpaceSize(const Environment& env) {
  std::uint64_t size = 1;
  for (const BaseStation& s : env.stations) {
    const std::uint64_t k = s.actions.size();
    if (k != 0 && size > UINT64_MAX / k) return UINT64_MAX;
    size *= k;
  }
  return size;
}

std::vector<std::size_t> DecodeJointAction(const Environment& env,
                                           std::uint64_t index) {
  std::vector<std::size_t> digits(env.size());
  for (std::size_t b = env.size(); b-- > 0;) {
    const std::uint64_t k = env.stations[b].actions.size();
    digits[b] = static_cast<std::size_t>(index % k);
    index /= k;
  }
  return digits;
}

FixedPointResult EvaluateAtLoadFixedPoint(const Environment& env,
                                          const GainTable& table,
                                          const UeSet& ues,
                                          std::span<const Action> actions,
                                          const OracleConfig& config) {
  // history[r] is the advertised load vector used in round r + 1.
  std::vector<std::vector<double>> history{std::vector<double>(env.size(), 0.0)};
  FixedPointResult r;
  for (r.rounds = 1; r.rounds <= config.max_rounds; ++r.rounds) {
    r.outcome = Evaluate(env, table, ues, actions, history.back());
    double diff = 0.0;
    for (std::size_t b = 0; b < env.size(); ++b) {
      diff = std::max(diff, std::abs(r.outcome.loads[b] - history.back()[b]));
    }
    if (diff < config.tol) {
      r.converged = true;
      r.advertised_loads = std::move(history.back());
      return r;
    }
    if (r.rounds == config.max_rounds) break;
    // The map from advertised to induced loads is deterministic, so a repeated
    // vector means a cycle that never converges. Jump to the vector the final
    // round would use.
    const auto seen = std::find(history.begin(), history.end(), r.outcome.loads);
    if (seen != history.end()) {
      const std::size_t j = static_cast<std::size_t>(seen - history.begin());
      const std::size_t period = history.size() - j;
      const std::size_t k = j + (config.max_rounds - 1 - j) % period;
      r.rounds = config.max_rounds;
      r.advertised_loads = history[k];
      r.outcome = Evaluate(env, table, ues, actions, r.advertised_loads);
      return r;
    }
    history.push_back(r.outcome.loads);
  }
  r.rounds = config.max_rounds;
  r.advertised_loads = std::move(history.back());
  return r;
}

namespace {

struct Candidate {
  bool valid = false;
  bool feasible = false;
  double cost = 0.0;
  std::uint64_t index = 0;
};

// Feasible first, then lower cost, then lower index.
bool Better(const Candidate& a, const Candidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  if (a.feasible != b.feasible) return a.feasible;
  if (a.cost != b.cost) return a.cost < b.cost;
  return a.index < b.index;
}

bool Feasible(const Outcome& out) {
  return std::none_of(out.overloaded.begin(), out.overloaded.end(),
                      [](bool o) { return o; });
}

Candidate SearchRange(const Environment& env, const GainTable& table,
                      const UeSet& ues, const OracleConfig& config,
                      std::uint64_t begin, std::uint64_t end) {
  Candidate best;
  if (begin >= end) return best;
  std::vector<std::size_t> digits = DecodeJointAction(env, begin);
  std::vector<Action> actions(env.size());
  for (std::size_t b = 0; b < env.size(); ++b) {
    actions[b] = env.stations[b].actions[digits[b]];
  }
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    const FixedPointResult r =
        EvaluateAtLoadFixedPoint(env, table, ues, actions, config);
    Candidate c{true, Feasible(r.outcome), r.outcome.TotalCost(), idx};
    if (Better(c, best)) best = c;
    // Odometer increment, last station fastest.
    for (std::size_t b = env.size(); b-- > 0;) {
      if (++digits[b] < env.stations[b].actions.size()) {
        actions[b] = env.stations[b].actions[digits[b]];
        break;
      }
      digits[b] = 0;
      actions[b] = env.stations[b].actions[0];
    }
  }
  return best;
}

}  // namespace

OracleResult ExhaustiveSearch(const Environment& env, const UeSet& ues,
                              const OracleConfig& config) {
  const std::uint64_t size = JointSpaceSize(env);
  if (size > config.budget) {
    Fail(ErrorKind::kBudget,
         fmt::format("exhaustive search refused: joint action space has {} "
                     "configurations, budget is {}",
                     size == UINT64_MAX ? std::string("more than 2^64")
                                        : std::to_string(size),
                     config.budget));
  }
  const GainTable table(env, ues);

  const std::uint64_t workers = std::clamp<std::uint64_t>(
      std::thread::hardware_concurrency(), 1, std::max<std::uint64_t>(1, size / 256));
  std::vector<Candidate> partial(workers);
  if (workers == 1) {
    partial[0] = SearchRange(env, table, ues, config, 0, size);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t lo = size * w / workers;
      const std::uint64_t hi = size * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        partial[w] = SearchRange(env, table, ues, config, lo, hi);
      });
    }
    for (std::thread& t : pool) t.join();
  }
  Candidate best;
  for (const Candidate& c : partial) {
    if (Better(c, best)) best = c;
  }

  OracleResult result;
  result.joint_space_size = size;
  result.joint_index = best.index;
  result.action_indices = DecodeJointAction(env, best.index);
  for (std::size_t b = 0; b < env.size(); ++b) {
    result.actions.push_back(env.stations[b].actions[result.action_indices[b]]);
  }
  const FixedPointResult r =
      EvaluateAtLoadFixedPoint(env, table, ues, result.actions, config);
  result.total_cost = r.outcome.TotalCost();
  result.per_station_costs = r.outcome.costs;
  result.loads = r.outcome.loads;
  result.feasible = Feasible(r.outcome);
  return result;
}

}  // namespace sleepnet
