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

#include "core/scenario.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numbers>
#include <thread>

#include <fmt/core.h>
#include "json.hpp"

#include "core/baselines.h"
#include "core/errors.h"
#include "core/station.h"
#include "core/trace_io.h"

namespace sleepnet {

namespace {

constexpr int kMaxPlacementAttempts = 100'000;

Position UniformInDisc(double radius, Rng& rng) {
  const double r = radius * std::sqrt(rng.Uniform01());
  const double theta = 2.0 * std::numbers::pi * rng.Uniform01();
  return {r * std::cos(theta), r * std::sin(theta)};
}

double DrawTrafficBps(const TrafficConfig& t, Rng& rng) {
  switch (t.mode) {
    case TrafficMode::kHomogeneous:
      return t.mean_bps;
    case TrafficMode::kUniform:
      return t.mean_bps * (1.0 + t.spread * (2.0 * rng.Uniform01() - 1.0));
    case TrafficMode::kExponential:
      // Floor keeps the arrival rate strictly positive.
      return std::max(rng.Exponential(t.mean_bps), 1e-9 * t.mean_bps);
  }
  return t.mean_bps;
}

double Mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double StdDev(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = Mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

ScenarioConfig Sized(const ScenarioConfig& config, std::size_t n_sbs,
                     std::size_t n_ue) {
  ScenarioConfig c = config;
  c.n_sbs = n_sbs;
  c.n_ue = n_ue;
  return c;
}

std::string TracePath(const std::string& dir, const std::string& experiment,
                      std::size_t n_sbs, std::size_t n_ue, std::uint64_t seed) {
  return fmt::format("{}/traces/{}_sbs{}_ue{}_seed{}.jsonl", dir, experiment,
                     n_sbs, n_ue, seed);
}

struct SeedRun {
  WindowSummary learned;
  WindowSummary classical;
  std::optional<double> exhaustive_per_bs;
  std::optional<std::size_t> converged_at;
};

struct SeedOptions {
  bool classical = true;
  bool exhaustive = false;
  const std::string* trace_dir = nullptr;
  std::string experiment;
};

SeedRun RunSeed(const ScenarioConfig& config, std::uint64_t seed,
                const SeedOptions& opt) {
  Topology topo = GenerateTopology(config, seed);
  SeedRun out;
  Simulation learned(config, topo.stations, topo.ues, seed);
  learned.Run(config.iterations);
  const std::size_t window =
      std::min(config.experiments.metrics_window, config.iterations);
  out.learned = SummarizeTail(learned.trace(), window);
  out.converged_at = DetectConvergence(
      learned.trace(), config.convergence.window, config.convergence.tol);
  if (opt.trace_dir != nullptr) {
    WriteTraceFile(learned, "learned", TraceFormat::kJsonl,
                   TracePath(*opt.trace_dir, opt.experiment, config.n_sbs,
                             config.n_ue, seed));
  }
  if (opt.classical) {
    const Trace t =
        ClassicalRun(config, topo.stations, topo.ues, seed, config.iterations);
    out.classical = SummarizeTail(t, window);
  }
  if (opt.exhaustive) {
    const Environment env = MakeEnvironment(topo.stations, config);
    if (JointSpaceSize(env) <= config.oracle.budget) {
      const OracleResult r = ExhaustiveSearch(env, topo.ues, config.oracle);
      out.exhaustive_per_bs = r.total_cost / static_cast<double>(env.size());
    }
  }
  return out;
}

std::vector<SeedRun> RunSeeds(const ScenarioConfig& config,
                              const SeedOptions& opt) {
  std::vector<SeedRun> runs(config.seeds.size());
  ParallelFor(config.seeds.size(), [&](std::size_t i) {
    runs[i] = RunSeed(config, config.seeds[i], opt);
  });
  return runs;
}

CostPoint MakeCostPoint(const ScenarioConfig& c, const std::vector<SeedRun>& runs,
                        std::vector<std::string>& notices) {
  CostPoint p;
  p.n_sbs = c.n_sbs;
  p.n_ue = c.n_ue;
  bool have_oracle = !runs.empty();
  for (const SeedRun& r : runs) {
    p.learned_per_seed.push_back(r.learned.cost_per_bs);
    p.classical_per_seed.push_back(r.classical.cost_per_bs);
    if (r.exhaustive_per_bs) {
      p.exhaustive_per_seed.push_back(*r.exhaustive_per_bs);
    } else {
      have_oracle = false;
    }
  }
  p.learned = Mean(p.learned_per_seed);
  p.learned_std = StdDev(p.learned_per_seed);
  p.classical = Mean(p.classical_per_seed);
  if (have_oracle) {
    p.exhaustive = Mean(p.exhaustive_per_seed);
  } else {
    p.exhaustive_per_seed.clear();
    const std::size_t actions = c.sbs.power_offsets_db.size() *
                                    c.sbs.creb_db.size() +
                                (c.sbs.sleep_capable ? 1 : 0);
    notices.push_back(fmt::format(
        "exhaustive baseline omitted at {} SBS / {} UE: joint action space "
        "({} MBS actions x {}^{} SBS actions) exceeds the budget of {}",
        c.n_sbs, c.n_ue, c.mbs.power_offsets_db.size(), actions, c.n_sbs,
        c.oracle.budget));
  }
  return p;
}

CostSweep CostSweepImpl(const ScenarioConfig& config, bool over_sbs,
                        const std::string* trace_dir) {
  const ExperimentConfig& e = config.experiments;
  CostSweep sweep;
  const std::vector<std::size_t>& axis = over_sbs ? e.sbs_sweep : e.ue_sweep;
  for (std::size_t v : axis) {
    const ScenarioConfig c =
        over_sbs ? Sized(config, v, e.ues_for_sbs_sweep)
                 : Sized(config, e.sbs_for_ue_sweep, v);
    SeedOptions opt;
    opt.exhaustive = true;
    opt.trace_dir = trace_dir;
    opt.experiment = over_sbs ? "cost_vs_sbs" : "cost_vs_ue";
    sweep.points.push_back(MakeCostPoint(c, RunSeeds(c, opt), sweep.notices));
  }
  return sweep;
}

std::vector<TradeoffPoint> TradeoffImpl(const ScenarioConfig& config,
                                        const std::string* trace_dir) {
  const ExperimentConfig& e = config.experiments;
  std::vector<TradeoffPoint> points;
  for (std::size_t n_sbs : e.tradeoff_sbs) {
    for (std::size_t n_ue : e.tradeoff_ues) {
      const ScenarioConfig c = Sized(config, n_sbs, n_ue);
      SeedOptions opt;
      opt.trace_dir = trace_dir;
      opt.experiment = "tradeoff";
      const std::vector<SeedRun> runs = RunSeeds(c, opt);
      TradeoffPoint p;
      p.n_sbs = n_sbs;
      p.n_ue = n_ue;
      std::vector<double> ll, le, cl, ce;
      for (const SeedRun& r : runs) {
        ll.push_back(r.learned.load_per_bs);
        le.push_back(r.learned.energy_per_bs_w);
        cl.push_back(r.classical.load_per_bs);
        ce.push_back(r.classical.energy_per_bs_w);
      }
      p.learned_load = Mean(ll);
      p.learned_energy_w = Mean(le);
      p.classical_load = Mean(cl);
      p.classical_energy_w = Mean(ce);
      points.push_back(p);
    }
  }
  return points;
}

std::vector<ConvergencePoint> ConvergenceImpl(const ScenarioConfig& config,
                                              const std::string* trace_dir) {
  const ExperimentConfig& e = config.experiments;
  std::vector<ConvergencePoint> points;
  for (std::size_t n_ue : e.convergence_ues) {
    for (std::size_t n_sbs : e.convergence_sbs) {
      const ScenarioConfig c = Sized(config, n_sbs, n_ue);
      SeedOptions opt;
      opt.classical = false;
      opt.trace_dir = trace_dir;
      opt.experiment = "convergence";
      const std::vector<SeedRun> runs = RunSeeds(c, opt);
      ConvergencePoint p;
      p.n_sbs = n_sbs;
      p.n_ue = n_ue;
      std::vector<double> its;
      for (const SeedRun& r : runs) {
        p.per_seed.push_back(r.converged_at);
        if (r.converged_at) ++p.converged_seeds;
        its.push_back(static_cast<double>(
            r.converged_at.value_or(c.iterations)));
      }
      p.mean_iterations = Mean(its);
      p.std_iterations = StdDev(its);
      points.push_back(p);
    }
  }
  return points;
}

std::string Num(double x) { return fmt::format("{}", x); }

std::string OptNum(const std::optional<double>& x) {
  return x ? Num(*x) : std::string();
}

void WriteLines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream f(path, std::ios::binary);
  if (!f) Fail(ErrorKind::kIo, "cannot open " + path + " for writing");
  for (const std::string& l : lines) f << l << '\n';
  if (!f) Fail(ErrorKind::kIo, "write failed: " + path);
}

nlohmann::json OptJson(const std::optional<std::size_t>& x) {
  return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

void RenderCostSweep(const std::string& name, const ScenarioConfig& config,
                     const CostSweep& s, std::vector<std::string>& csv,
                     std::vector<std::string>& jsonl) {
  csv.push_back(
      "n_sbs,n_ue,learned_cost_per_bs,learned_std,classical_cost_per_bs,"
      "exhaustive_cost_per_bs,reduction_vs_classical_pct");
  for (const CostPoint& p : s.points) {
    csv.push_back(fmt::format("{},{},{},{},{},{},{}", p.n_sbs, p.n_ue,
                              Num(p.learned), Num(p.learned_std),
                              Num(p.classical), OptNum(p.exhaustive),
                              Num(100.0 * p.ReductionVsClassical())));
    for (std::size_t i = 0; i < p.learned_per_seed.size(); ++i) {
      nlohmann::json row = {{"experiment", name},
                            {"n_sbs", p.n_sbs},
                            {"n_ue", p.n_ue},
                            {"seed", config.seeds[i]},
                            {"learned_cost_per_bs", p.learned_per_seed[i]},
                            {"classical_cost_per_bs", p.classical_per_seed[i]}};
      row["exhaustive_cost_per_bs"] =
          i < p.exhaustive_per_seed.size()
              ? nlohmann::json(p.exhaustive_per_seed[i])
              : nlohmann::json(nullptr);
      jsonl.push_back(row.dump());
    }
  }
  for (const std::string& n : s.notices) {
    jsonl.push_back(nlohmann::json{{"notice", n}}.dump());
  }
}

}  // namespace

Topology GenerateTopology(const ScenarioConfig& config, std::uint64_t seed) {
  Topology topo;
  topo.stations.push_back(MakeStation(0, BsKind::kMacro, {0.0, 0.0}, config.mbs));
  Rng placement = Rng::Derive(seed, StreamId::kSbsPlacement);
  const MinDistances& md = config.min_distances;
  for (std::size_t i = 1; i <= config.n_sbs; ++i) {
    bool placed = false;
    std::string violated;
    for (int attempt = 0; attempt < kMaxPlacementAttempts; ++attempt) {
      const Position p = UniformInDisc(config.cell_radius_m, placement);
      violated.clear();
      for (const BaseStation& s : topo.stations) {
        const bool macro = s.kind == BsKind::kMacro;
        if (Distance(p, s.pos) < (macro ? md.mbs_sbs : md.sbs_sbs)) {
          violated = macro ? "mbs_sbs" : "sbs_sbs";
          break;
        }
      }
      if (violated.empty()) {
        topo.stations.push_back(
            MakeStation(static_cast<int>(i), BsKind::kSmall, p, config.sbs));
        placed = true;
        break;
      }
    }
    if (!placed) {
      Fail(ErrorKind::kBudget,
           fmt::format("cannot place SBS {}: minimum separation {} violated "
                       "in all {} attempts",
                       i, violated, kMaxPlacementAttempts));
    }
  }
  Rng ue_placement = Rng::Derive(seed, StreamId::kUePlacement);
  Rng traffic = Rng::Derive(seed, StreamId::kUeTraffic);
  topo.ues.reserve(config.n_ue);
  for (std::size_t u = 0; u < config.n_ue; ++u) {
    topo.ues.push_back(SampleUe(config, topo.stations,
                                static_cast<std::int64_t>(u), ue_placement,
                                traffic));
  }
  return topo;
}

UserEquipment SampleUe(const ScenarioConfig& config,
                       const std::vector<BaseStation>& stations,
                       std::int64_t id, Rng& placement, Rng& traffic) {
  const MinDistances& md = config.min_distances;
  std::string violated;
  for (int attempt = 0; attempt < kMaxPlacementAttempts; ++attempt) {
    const Position p = UniformInDisc(config.cell_radius_m, placement);
    violated.clear();
    for (const BaseStation& s : stations) {
      const bool macro = s.kind == BsKind::kMacro;
      if (Distance(p, s.pos) < (macro ? md.mbs_ue : md.sbs_ue)) {
        violated = macro ? "mbs_ue" : "sbs_ue";
        break;
      }
    }
    if (violated.empty()) {
      UserEquipment ue;
      ue.id = id;
      ue.pos = p;
      ue.mean_packet_size_bits = config.traffic.mean_packet_size_bits;
      ue.arrival_rate_pps =
          DrawTrafficBps(config.traffic, traffic) / ue.mean_packet_size_bits;
      return ue;
    }
  }
  Fail(ErrorKind::kBudget,
       fmt::format("cannot place UE {}: minimum separation {} violated in all "
                   "{} attempts",
                   id, violated, kMaxPlacementAttempts));
}

DynamicSchedule CaseSchedule(const DynamicCase& c, std::size_t epoch_length) {
  DynamicSchedule s;
  s.epochs.push_back({epoch_length, 0});
  for (std::size_t i = 0; i < c.epochs; ++i) {
    s.epochs.push_back({epoch_length, c.ue_delta});
  }
  return s;
}

void ApplyScheduleEvent(Simulation& sim, int ue_delta) {
  if (ue_delta == 0) return;
  SimulationState& state = sim.mutable_state();
  UeSet ues = *state.ues;
  Rng& rng = state.environment_stream;
  if (ue_delta > 0) {
    std::int64_t next_id = 0;
    for (const UserEquipment& u : ues) next_id = std::max(next_id, u.id + 1);
    for (int i = 0; i < ue_delta; ++i) {
      ues.push_back(SampleUe(sim.config(), sim.environment().stations,
                             next_id++, rng, rng));
    }
  } else {
    const std::size_t n = static_cast<std::size_t>(-static_cast<long>(ue_delta));
    if (n > ues.size()) {
      Fail(ErrorKind::kInput,
           fmt::format("schedule removes {} UEs but only {} are present", n,
                       ues.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
      ues.erase(ues.begin() +
                static_cast<std::ptrdiff_t>(rng.Below(ues.size())));
    }
  }
  sim.ReplaceUes(std::move(ues));
}

void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t hw = std::thread::hardware_concurrency();
  const std::size_t workers = std::min(n, std::max<std::size_t>(hw, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

CostSweep ExperimentCostVsSbs(const ScenarioConfig& config) {
  return CostSweepImpl(config, true, nullptr);
}

CostSweep ExperimentCostVsUe(const ScenarioConfig& config) {
  return CostSweepImpl(config, false, nullptr);
}

std::vector<TradeoffPoint> ExperimentTradeoff(const ScenarioConfig& config) {
  return TradeoffImpl(config, nullptr);
}

std::vector<DynamicEpochResult> RunSchedule(const ScenarioConfig& config,
                                            std::size_t n_sbs,
                                            const DynamicSchedule& schedule,
                                            std::size_t initial_ues,
                                            std::uint64_t seed) {
  const ScenarioConfig c = Sized(config, n_sbs, initial_ues);
  Topology topo = GenerateTopology(c, seed);
  Simulation sim(c, std::move(topo.stations), std::move(topo.ues), seed);
  std::vector<DynamicEpochResult> out;
  for (const ScheduleEpoch& epoch : schedule.epochs) {
    ApplyScheduleEvent(sim, epoch.ue_delta);
    const std::size_t begin = sim.trace().size();
    sim.Run(epoch.duration_iterations);
    DynamicEpochResult r;
    r.ue_count = sim.state().ues->size();
    r.active_fraction =
        Summarize(sim.trace(), begin, sim.trace().size()).active_fraction;
    out.push_back(r);
  }
  return out;
}

std::vector<DynamicCaseResult> ExperimentDynamic(const ScenarioConfig& config) {
  const ExperimentConfig& e = config.experiments;
  std::vector<DynamicCaseResult> results;
  const std::pair<const char*, const DynamicCase*> cases[] = {
      {"case1", &e.case1}, {"case2", &e.case2}};
  for (const auto& [name, dc] : cases) {
    const DynamicSchedule schedule = CaseSchedule(*dc, e.iterations_per_epoch);
    std::vector<std::vector<DynamicEpochResult>> per_seed(config.seeds.size());
    ParallelFor(config.seeds.size(), [&](std::size_t i) {
      per_seed[i] = RunSchedule(config, e.dynamic_sbs, schedule,
                                dc->initial_ues, config.seeds[i]);
    });
    DynamicCaseResult r;
    r.name = name;
    for (std::size_t k = 0; k < schedule.epochs.size(); ++k) {
      DynamicEpochResult m;
      std::vector<double> fr;
      for (const auto& s : per_seed) fr.push_back(s[k].active_fraction);
      m.active_fraction = Mean(fr);
      m.ue_count = per_seed.empty() ? 0 : per_seed[0][k].ue_count;
      if (k == 0) {
        r.warmup = m;
      } else {
        r.epochs.push_back(m);
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<ConvergencePoint> ExperimentConvergence(const ScenarioConfig& config) {
  return ConvergenceImpl(config, nullptr);
}

bool IsExperimentName(const std::string& name) {
  return name == "cost_vs_sbs" || name == "cost_vs_ue" || name == "tradeoff" ||
         name == "dynamic" || name == "convergence";
}

void RunExperiment(const ScenarioConfig& config, const std::string& name,
                   const std::string& out_dir, bool dump_traces) {
  if (!IsExperimentName(name)) {
    Fail(ErrorKind::kConfig, "unknown experiment '" + name + "'");
  }
  Validate(config);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (dump_traces) std::filesystem::create_directories(out_dir + "/traces", ec);
  if (ec) Fail(ErrorKind::kIo, "cannot create " + out_dir + ": " + ec.message());
  const std::string* trace_dir = dump_traces ? &out_dir : nullptr;

  std::vector<std::string> csv;
  std::vector<std::string> jsonl;
  if (name == "cost_vs_sbs" || name == "cost_vs_ue") {
    const CostSweep s = CostSweepImpl(config, name == "cost_vs_sbs", trace_dir);
    RenderCostSweep(name, config, s, csv, jsonl);
  } else if (name == "tradeoff") {
    csv.push_back(
        "n_sbs,n_ue,learned_load_per_bs,learned_energy_per_bs_w,"
        "classical_load_per_bs,classical_energy_per_bs_w,energy_reduction_pct");
    for (const TradeoffPoint& p : TradeoffImpl(config, trace_dir)) {
      csv.push_back(fmt::format(
          "{},{},{},{},{},{},{}", p.n_sbs, p.n_ue, Num(p.learned_load),
          Num(p.learned_energy_w), Num(p.classical_load),
          Num(p.classical_energy_w),
          Num(100.0 * (1.0 - p.learned_energy_w / p.classical_energy_w))));
      jsonl.push_back(nlohmann::json{{"experiment", name},
                                     {"n_sbs", p.n_sbs},
                                     {"n_ue", p.n_ue},
                                     {"learned_load_per_bs", p.learned_load},
                                     {"learned_energy_per_bs_w", p.learned_energy_w},
                                     {"classical_load_per_bs", p.classical_load},
                                     {"classical_energy_per_bs_w",
                                      p.classical_energy_w}}
                          .dump());
    }
  } else if (name == "dynamic") {
    csv.push_back("case,epoch,ue_count,active_pct");
    for (const DynamicCaseResult& r : ExperimentDynamic(config)) {
      csv.push_back(fmt::format("{},0,{},{}", r.name, r.warmup.ue_count,
                                Num(100.0 * r.warmup.active_fraction)));
      for (std::size_t k = 0; k < r.epochs.size(); ++k) {
        csv.push_back(fmt::format("{},{},{},{}", r.name, k + 1,
                                  r.epochs[k].ue_count,
                                  Num(100.0 * r.epochs[k].active_fraction)));
      }
      nlohmann::json row = {{"experiment", name}, {"case", r.name}};
      row["warmup"] = {{"ue_count", r.warmup.ue_count},
                       {"active_fraction", r.warmup.active_fraction}};
      for (const DynamicEpochResult& m : r.epochs) {
        row["epochs"].push_back(
            {{"ue_count", m.ue_count}, {"active_fraction", m.active_fraction}});
      }
      jsonl.push_back(row.dump());
    }
  } else {
    csv.push_back(
        "n_sbs,n_ue,mean_iterations,std_iterations,converged_seeds,total_seeds");
    for (const ConvergencePoint& p : ConvergenceImpl(config, trace_dir)) {
      csv.push_back(fmt::format("{},{},{},{},{},{}", p.n_sbs, p.n_ue,
                                Num(p.mean_iterations), Num(p.std_iterations),
                                p.converged_seeds, p.per_seed.size()));
      for (std::size_t i = 0; i < p.per_seed.size(); ++i) {
        jsonl.push_back(nlohmann::json{{"experiment", name},
                                       {"n_sbs", p.n_sbs},
                                       {"n_ue", p.n_ue},
                                       {"seed", config.seeds[i]},
                                       {"converged_at", OptJson(p.per_seed[i])}}
                            .dump());
      }
    }
  }
  WriteLines(out_dir + "/" + name + ".csv", csv);
  WriteLines(out_dir + "/" + name + ".jsonl", jsonl);
}

}  // namespace sleepnet
