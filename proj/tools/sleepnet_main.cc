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

// Command-line front end. Talks to the simulator only through the C API.
//
// Exit codes: 0 success, 1 configuration or usage error, 2 budget or
// feasibility refusal, 3 any other failure (including a replay mismatch).

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <fmt/core.h>
#include "CLI11.hpp"

#include "sleepnet.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitBudget = 2;
constexpr int kExitFailure = 3;

int ExitFor(sn_status s) {
  switch (s) {
    case SN_OK:
      return kExitOk;
    case SN_ERR_CONFIG:
    case SN_ERR_NULL:
      return kExitConfig;
    case SN_ERR_BUDGET:
      return kExitBudget;
    default:
      return kExitFailure;
  }
}

// Thrown when a C API call fails; carries the status.
struct ApiFailure {
  sn_status status;
};

void Check(sn_status s) {
  if (s != SN_OK) {
    fmt::print(stderr, "sleepnet: {}\n", sn_last_error());
    throw ApiFailure{s};
  }
}

struct ConfigHandle {
  sn_config* ptr = nullptr;
  ~ConfigHandle() { sn_config_free(ptr); }
};

struct SimulationHandle {
  sn_simulation* ptr = nullptr;
  ~SimulationHandle() { sn_simulation_free(ptr); }
};

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> seeds;
  std::optional<std::size_t> iterations;
  std::string out_dir;
  std::string format = "jsonl";
  std::string baseline = "learned";
  std::string experiment;
  std::string trace_path;
  bool dump_traces = false;
};

void LoadConfig(const Options& o, ConfigHandle& cfg) {
  if (o.config_path.empty()) {
    Check(sn_config_default(&cfg.ptr));
  } else {
    Check(sn_config_load(o.config_path.c_str(), &cfg.ptr));
  }
  if (o.iterations) Check(sn_config_set_iterations(cfg.ptr, *o.iterations));
  if (o.seeds) {
    Check(sn_config_set_seeds(cfg.ptr, o.seed.value_or(1), *o.seeds));
  } else if (o.seed) {
    Check(sn_config_set_seeds(cfg.ptr, *o.seed, 1));
  }
}

std::vector<std::uint64_t> Seeds(const ConfigHandle& cfg) {
  std::size_t n = 0;
  Check(sn_config_seed_count(cfg.ptr, &n));
  std::vector<std::uint64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) Check(sn_config_seed_at(cfg.ptr, i, &out[i]));
  return out;
}

sn_baseline ParseBaseline(const std::string& s) {
  if (s == "classical") return SN_BASELINE_CLASSICAL;
  if (s == "exhaustive") return SN_BASELINE_EXHAUSTIVE;
  return SN_BASELINE_LEARNED;
}

sn_format ParseFormat(const std::string& s) {
  return s == "csv" ? SN_FORMAT_CSV : SN_FORMAT_JSONL;
}

void EnsureDir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    fmt::print(stderr, "sleepnet: cannot create {}: {}\n", dir, ec.message());
    throw ApiFailure{SN_ERR_IO};
  }
}

int CmdRun(const Options& o) {
  ConfigHandle cfg;
  LoadConfig(o, cfg);
  const std::string out_dir = o.out_dir.empty() ? "out" : o.out_dir;
  EnsureDir(out_dir);
  const std::string ext = o.format == "csv" ? "csv" : "jsonl";

  std::vector<std::string> rows{
      "seed,baseline,iterations,cost_per_bs,energy_per_bs_w,load_per_bs,"
      "active_fraction,cce_gap,converged_at"};
  std::size_t iterations = 0;
  Check(sn_config_iterations(cfg.ptr, &iterations));
  for (std::uint64_t seed : Seeds(cfg)) {
    SimulationHandle sim;
    Check(sn_simulation_create(cfg.ptr, seed, ParseBaseline(o.baseline),
                               &sim.ptr));
    Check(sn_simulation_run(sim.ptr, iterations));
    std::size_t window = 0;
    Check(sn_config_cce_window(cfg.ptr, &window));
    window = std::min(window, iterations);
    sn_summary sum{};
    Check(sn_simulation_summary(sim.ptr, window, &sum));
    double gap = 0.0;
    std::string gap_text;
    if (o.baseline == "learned") {
      Check(sn_simulation_cce_gap(sim.ptr, window, &gap, nullptr));
      gap_text = fmt::format("{}", gap);
    }
    int converged = 0;
    std::size_t at = 0;
    Check(sn_simulation_convergence(sim.ptr, &converged, &at));
    const std::string trace =
        fmt::format("{}/run_{}_seed{}.{}", out_dir, o.baseline, seed, ext);
    Check(sn_simulation_write_trace(sim.ptr, trace.c_str(), ParseFormat(o.format)));
    rows.push_back(fmt::format("{},{},{},{},{},{},{},{},{}", seed, o.baseline,
                               iterations, sum.cost_per_bs, sum.energy_per_bs_w,
                               sum.load_per_bs, sum.active_fraction, gap_text,
                               converged ? std::to_string(at) : std::string()));
  }
  const std::string summary = out_dir + "/run_summary.csv";
  std::ofstream f(summary, std::ios::binary);
  for (const std::string& r : rows) {
    f << r << '\n';
    fmt::print("{}\n", r);
  }
  if (!f) {
    fmt::print(stderr, "sleepnet: cannot write {}\n", summary);
    return kExitFailure;
  }
  return kExitOk;
}

int CmdExperiment(const Options& o) {
  ConfigHandle cfg;
  LoadConfig(o, cfg);
  const std::string out_dir = o.out_dir.empty() ? "out" : o.out_dir;
  Check(sn_experiment_run(cfg.ptr, o.experiment.c_str(), out_dir.c_str(),
                          o.dump_traces ? 1 : 0));
  fmt::print("wrote {}/{}.csv and {}/{}.jsonl\n", out_dir, o.experiment,
             out_dir, o.experiment);
  return kExitOk;
}

int CmdOracle(const Options& o) {
  ConfigHandle cfg;
  LoadConfig(o, cfg);
  std::vector<std::string> docs;
  for (std::uint64_t seed : Seeds(cfg)) {
    char* out = nullptr;
    Check(sn_oracle_run(cfg.ptr, seed, &out));
    docs.emplace_back(out);
    sn_string_free(out);
  }
  for (const std::string& d : docs) fmt::print("{}\n", d);
  if (!o.out_dir.empty()) {
    EnsureDir(o.out_dir);
    std::ofstream f(o.out_dir + "/oracle.jsonl", std::ios::binary);
    for (const std::string& d : docs) f << d << '\n';
  }
  return kExitOk;
}

int CmdReplay(const Options& o) {
  std::string format = o.format;
  if (format.empty()) {
    const bool csv = o.trace_path.size() > 4 &&
                     o.trace_path.substr(o.trace_path.size() - 4) == ".csv";
    format = csv ? "csv" : "jsonl";
  }
  ConfigHandle cfg;
  if (format == "csv") LoadConfig(o, cfg);
  std::size_t records = 0;
  std::size_t mismatches = 0;
  double max_diff = 0.0;
  Check(sn_replay(o.trace_path.c_str(), ParseFormat(format), cfg.ptr,
                  o.seed.value_or(1), o.baseline.c_str(), &records,
                  &mismatches, &max_diff));
  fmt::print("records={} mismatches={} max_abs_cost_diff={}\n", records,
             mismatches, max_diff);
  return mismatches == 0 ? kExitOk : kExitFailure;
}

int CmdValidate(const Options& o) {
  ConfigHandle cfg;
  LoadConfig(o, cfg);
  char* json = nullptr;
  Check(sn_config_to_json(cfg.ptr, &json));
  fmt::print("{}\n", json);
  sn_string_free(json);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small-cell sleep-mode simulator with regret learning"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t seed = 0;
  std::size_t seeds = 0;
  std::size_t iterations = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "JSON configuration file")
        ->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "seed (first seed with --seeds)");
    sub->add_option("--seeds", seeds, "number of consecutive seeds")
        ->check(CLI::PositiveNumber);
    sub->add_option("--iterations", iterations, "iterations per run")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out_dir, "output directory");
    sub->add_option("--format", o.format, "trace format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    sub->add_option("--baseline", o.baseline, "run mode")
        ->check(CLI::IsMember({"classical", "learned", "exhaustive"}));
  };

  CLI::App* run = app.add_subcommand("run", "run one scenario per seed");
  add_common(run);
  CLI::App* exp = app.add_subcommand("experiment", "run a named experiment");
  add_common(exp);
  exp->add_option("name", o.experiment,
                  "cost_vs_sbs, cost_vs_ue, tradeoff, dynamic or convergence")
      ->required()
      ->check(CLI::IsMember(
          {"cost_vs_sbs", "cost_vs_ue", "tradeoff", "dynamic", "convergence"}));
  exp->add_flag("--traces", o.dump_traces, "also write learned traces");
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive minimum-cost search");
  add_common(oracle);
  CLI::App* replay = app.add_subcommand("replay", "recompute a trace's costs");
  add_common(replay);
  replay->add_option("trace", o.trace_path, "trace file")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::App* validate =
      app.add_subcommand("validate-config", "check and print a configuration");
  add_common(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  auto given = [](CLI::App* sub, const char* name) {
    return sub->count(name) > 0;
  };
  CLI::App* active = app.get_subcommands().front();
  if (given(active, "--seed")) o.seed = seed;
  if (given(active, "--seeds")) o.seeds = seeds;
  if (given(active, "--iterations")) o.iterations = iterations;
  if (active == replay && !given(active, "--format")) o.format.clear();

  try {
    if (active == run) return CmdRun(o);
    if (active == exp) return CmdExperiment(o);
    if (active == oracle) return CmdOracle(o);
    if (active == replay) return CmdReplay(o);
    return CmdValidate(o);
  } catch (const ApiFailure& f) {
    return ExitFor(f.status);
  }
}
