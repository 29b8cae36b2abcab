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

#include "core/game_engine.h"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/core.h>

#include "core/association.h"
#include "core/errors.h"
#include "core/station.h"

namespace sleepnet {

double TraceRecord::TotalCost() const {
  double total = 0.0;
  for (const StationRecord& s : stations) total += s.cost;
  return total;
}

Simulation::Simulation(const ScenarioConfig& config, Environment env, UeSet ues,
                       std::uint64_t seed, RunMode mode)
    : config_(config), env_(std::move(env)), mode_(mode), seed_(seed) {
  const std::size_t n = env_.size();
  for (std::size_t b = 0; b < n; ++b) {
    state_.learners.push_back(
        InitialLearnerState(env_.stations[b].actions.size()));
    state_.station_streams.push_back(
        Rng::Derive(seed, StreamId::kBaseStation, b));
  }
  state_.load_estimates.assign(n, 0.0);
  state_.last_loads.assign(n, 0.0);
  state_.environment_stream = Rng::Derive(seed, StreamId::kEnvironment);
  ReplaceUes(std::move(ues));
}

Simulation::Simulation(const ScenarioConfig& config,
                       std::vector<BaseStation> stations, UeSet ues,
                       std::uint64_t seed)
    : Simulation(config, MakeEnvironment(std::move(stations), config),
                 std::move(ues), seed, RunMode::kLearned) {}

Simulation Simulation::Fixed(const ScenarioConfig& config,
                             std::vector<BaseStation> stations, UeSet ues,
                             std::uint64_t seed, std::vector<Action> actions,
                             const AssociationConfig& association) {
  if (actions.size() != stations.size()) {
    Fail(ErrorKind::kInput, "fixed run: one action per station required");
  }
  Environment env = MakeEnvironment(std::move(stations), config);
  env.association = association;
  Simulation sim(config, std::move(env), std::move(ues), seed, RunMode::kFixed);
  sim.fixed_actions_ = std::move(actions);
  return sim;
}

void Simulation::ReplaceUes(UeSet ues) {
  auto ptr = std::make_shared<const UeSet>(std::move(ues));
  gains_.emplace(env_, *ptr);
  state_.ues = std::move(ptr);
}

const TraceRecord& Simulation::Step() {
  const std::size_t n = env_.size();
  const std::size_t t = state_.iteration + 1;

  // (1) action selection on copies of the streams.
  std::vector<Rng> streams = state_.station_streams;
  std::vector<Action> actions(n);
  std::vector<int> indices(n, -1);
  for (std::size_t b = 0; b < n; ++b) {
    if (mode_ == RunMode::kLearned) {
      const std::size_t i = SampleAction(state_.learners[b].strategy, streams[b]);
      indices[b] = static_cast<int>(i);
      actions[b] = env_.stations[b].actions[i];
    } else {
      actions[b] = fixed_actions_[b];
      indices[b] = FindAction(env_.stations[b], actions[b]);
    }
  }

  // (2) load advertising.
  const double nu = LoadEstimateRate(t, config_.load_schedule);
  std::vector<double> advertised(n);
  for (std::size_t b = 0; b < n; ++b) {
    advertised[b] = UpdateLoadEstimate(state_.load_estimates[b],
                                       state_.last_loads[b], nu);
  }

  // (3)-(5) association, physics, costs.
  const Outcome out = Evaluate(env_, *gains_, *state_.ues, actions, advertised);

  // (6) learner updates.
  std::vector<LearnerState> learners = state_.learners;
  std::vector<double> change(n, 0.0);
  if (mode_ == RunMode::kLearned) {
    for (std::size_t b = 0; b < n; ++b) {
      LearnerState next =
          Update(state_.learners[b], static_cast<std::size_t>(indices[b]),
                 out.utilities[b], config_.learning);
      double total = 0.0;
      for (std::size_t i = 0; i < next.strategy.size(); ++i) {
        change[b] += std::abs(next.strategy[i] - learners[b].strategy[i]);
        const double p = next.strategy[i];
        if (!(p >= 0.0)) {
          Fail(ErrorKind::kStateCorruption,
               fmt::format("station {}: negative probability", b));
        }
        total += p;
      }
      if (std::abs(total - 1.0) > 1e-9) {
        Fail(ErrorKind::kStateCorruption,
             fmt::format("station {}: strategy sums to {}", b, total));
      }
      learners[b] = std::move(next);
    }
  }

  TraceRecord rec;
  rec.iteration = t;
  rec.stations.resize(n);
  for (std::size_t b = 0; b < n; ++b) {
    StationRecord& s = rec.stations[b];
    s.action_index = indices[b];
    s.action = actions[b];
    s.advertised_load = advertised[b];
    s.load = out.loads[b];
    s.total_power_w = out.total_power_w[b];
    s.cost = out.costs[b];
    s.utility = out.utilities[b];
    s.strategy_change_l1 = change[b];
    s.overloaded = out.overloaded[b];
  }
  rec.association = out.association;
  rec.rates_bps = out.rates_bps;
  rec.active_count = out.active_count;
  rec.outage = out.outage;
  rec.ues = state_.ues;
  if (config_.strategy_stride > 0 && t % config_.strategy_stride == 0) {
    for (const LearnerState& l : learners) {
      rec.strategies.push_back(l.strategy);
      rec.regrets.push_back(l.regret_estimates);
    }
  }
  trace_.push_back(std::move(rec));

  // Commit.
  state_.station_streams = std::move(streams);
  state_.learners = std::move(learners);
  state_.load_estimates = std::move(advertised);
  state_.last_loads = out.loads;
  state_.iteration = t;
  return trace_.back();
}

const Trace& Simulation::Run(std::size_t iterations) {
  if (iterations == 0) Fail(ErrorKind::kInput, "run: iterations must be >= 1");
  trace_.reserve(trace_.size() + iterations);
  for (std::size_t i = 0; i < iterations; ++i) Step();
  return trace_;
}

namespace {

std::size_t WindowStart(const Trace& trace, std::size_t window) {
  if (window == 0 || window > trace.size()) {
    Fail(ErrorKind::kInput,
         fmt::format("window {} exceeds trace length {}", window, trace.size()));
  }
  return trace.size() - window;
}

// Gain tables keyed by UE set, reused across consecutive records.
class GainCache {
 public:
  explicit GainCache(const Environment& env) : env_(env) {}

  const GainTable& For(const UeSetPtr& ues) {
    auto it = tables_.find(ues.get());
    if (it == tables_.end()) {
      it = tables_.emplace(ues.get(), GainTable(env_, *ues)).first;
    }
    return it->second;
  }

 private:
  const Environment& env_;
  std::map<const UeSet*, GainTable> tables_;
};

std::vector<Action> RecordedActions(const TraceRecord& rec) {
  std::vector<Action> actions;
  actions.reserve(rec.stations.size());
  for (const StationRecord& s : rec.stations) actions.push_back(s.action);
  return actions;
}

std::vector<double> RecordedLoads(const TraceRecord& rec) {
  std::vector<double> loads;
  loads.reserve(rec.stations.size());
  for (const StationRecord& s : rec.stations) loads.push_back(s.advertised_load);
  return loads;
}

double RealizedMean(const Trace& trace, std::size_t begin, std::size_t bs) {
  double sum = 0.0;
  for (std::size_t k = begin; k < trace.size(); ++k) {
    sum += trace[k].stations[bs].utility;
  }
  return sum / static_cast<double>(trace.size() - begin);
}

}  // namespace

CceGap MeasureCceGap(const Environment& env, const Trace& trace,
                     std::size_t window) {
  const std::size_t begin = WindowStart(trace, window);
  const std::size_t n = env.size();
  GainCache cache(env);
  CceGap gap;
  gap.per_station.assign(n, 0.0);
  std::vector<double> realized(n);
  for (std::size_t b = 0; b < n; ++b) realized[b] = RealizedMean(trace, begin, b);

  // sums[b][i]: counterfactual utility sum of station b always playing i.
  std::vector<std::vector<double>> sums(n);
  for (std::size_t b = 0; b < n; ++b) {
    sums[b].assign(env.stations[b].actions.size(), 0.0);
  }
  for (std::size_t k = begin; k < trace.size(); ++k) {
    const TraceRecord& rec = trace[k];
    if (rec.stations.size() != n) {
      Fail(ErrorKind::kInput, "cce gap: record does not match the environment");
    }
    const GainTable& table = cache.For(rec.ues);
    std::vector<Action> actions = RecordedActions(rec);
    const std::vector<double> loads = RecordedLoads(rec);
    for (std::size_t b = 0; b < n; ++b) {
      const Action played = actions[b];
      for (std::size_t i = 0; i < env.stations[b].actions.size(); ++i) {
        actions[b] = env.stations[b].actions[i];
        sums[b][i] +=
            Evaluate(env, table, *rec.ues, actions, loads).utilities[b];
      }
      actions[b] = played;
    }
  }
  gap.network = -INFINITY;
  for (std::size_t b = 0; b < n; ++b) {
    double best = -INFINITY;
    for (double s : sums[b]) {
      best = std::max(best, s / static_cast<double>(window) - realized[b]);
    }
    gap.per_station[b] = best;
    gap.network = std::max(gap.network, best);
  }
  if (n == 0) gap.network = 0.0;
  return gap;
}

double SelfDeviationGap(const Environment& env, const Trace& trace,
                        std::size_t bs, std::size_t window) {
  const std::size_t begin = WindowStart(trace, window);
  if (bs >= env.size()) Fail(ErrorKind::kInput, "self deviation: bad station");
  GainCache cache(env);
  double sum = 0.0;
  for (std::size_t k = begin; k < trace.size(); ++k) {
    const TraceRecord& rec = trace[k];
    const std::vector<Action> actions = RecordedActions(rec);
    sum += Evaluate(env, cache.For(rec.ues), *rec.ues, actions,
                    RecordedLoads(rec))
               .utilities[bs];
  }
  return sum / static_cast<double>(window) - RealizedMean(trace, begin, bs);
}

std::optional<std::size_t> DetectConvergence(const Trace& trace,
                                             std::size_t window, double tol) {
  if (window < 2) Fail(ErrorKind::kInput, "convergence window must be >= 2");
  std::size_t run = 0;
  for (const TraceRecord& rec : trace) {
    bool stable = true;
    for (const StationRecord& s : rec.stations) {
      if (!(s.strategy_change_l1 < tol)) {
        stable = false;
        break;
      }
    }
    run = stable ? run + 1 : 0;
    if (run >= window) return rec.iteration;
  }
  return std::nullopt;
}

WindowSummary Summarize(const Trace& trace, std::size_t begin,
                        std::size_t end) {
  if (begin >= end || end > trace.size()) {
    Fail(ErrorKind::kInput, "summary: empty or out-of-range window");
  }
  WindowSummary sum;
  for (std::size_t k = begin; k < end; ++k) {
    const TraceRecord& rec = trace[k];
    const double n = static_cast<double>(rec.stations.size());
    double cost = 0.0, energy = 0.0, load = 0.0, utility = 0.0;
    for (const StationRecord& s : rec.stations) {
      cost += s.cost;
      energy += s.total_power_w;
      load += s.load;
      utility += s.utility;
    }
    sum.total_cost += cost;
    sum.cost_per_bs += cost / n;
    sum.energy_per_bs_w += energy / n;
    sum.load_per_bs += load / n;
    sum.utility_per_bs += utility / n;
    sum.active_fraction += static_cast<double>(rec.active_count) / n;
  }
  const double w = static_cast<double>(end - begin);
  sum.total_cost /= w;
  sum.cost_per_bs /= w;
  sum.energy_per_bs_w /= w;
  sum.load_per_bs /= w;
  sum.utility_per_bs /= w;
  sum.active_fraction /= w;
  return sum;
}

WindowSummary SummarizeTail(const Trace& trace, std::size_t window) {
  const std::size_t begin = WindowStart(trace, window);
  return Summarize(trace, begin, trace.size());
}

}  // namespace sleepnet
