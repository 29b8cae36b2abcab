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

#include "sleepnet.h"

#include <cstring>
#include <exception>
#include <fstream>
#include <memory>
#include <new>
#include <string>

#include "core/baselines.h"
#include "core/config.h"
#include "core/errors.h"
#include "core/game_engine.h"
#include "core/scenario.h"
#include "core/trace_io.h"

struct sn_config {
  sleepnet::ScenarioConfig config;
};

struct sn_simulation {
  std::unique_ptr<sleepnet::Simulation> sim;
  std::string label;
};

namespace {

thread_local std::string g_last_error;

sn_status StatusFor(sleepnet::ErrorKind kind) {
  using sleepnet::ErrorKind;
  switch (kind) {
    case ErrorKind::kConfig:
      return SN_ERR_CONFIG;
    case ErrorKind::kBudget:
      return SN_ERR_BUDGET;
    case ErrorKind::kInput:
      return SN_ERR_INPUT;
    case ErrorKind::kDomain:
      return SN_ERR_DOMAIN;
    case ErrorKind::kParameter:
      return SN_ERR_PARAMETER;
    case ErrorKind::kStateCorruption:
      return SN_ERR_STATE;
    case ErrorKind::kIo:
      return SN_ERR_IO;
  }
  return SN_ERR_INTERNAL;
}

template <typename F>
sn_status Guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return SN_OK;
  } catch (const sleepnet::Error& e) {
    g_last_error = e.what();
    return StatusFor(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SN_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SN_ERR_INTERNAL;
  }
}

sn_status NullArg(const char* name) {
  g_last_error = std::string("null argument: ") + name;
  return SN_ERR_NULL;
}

char* CopyString(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sn_summary ToSummary(const sleepnet::WindowSummary& w) {
  return {w.cost_per_bs, w.energy_per_bs_w, w.load_per_bs, w.active_fraction,
          w.total_cost};
}

}  // namespace

extern "C" {

const char* sn_version(void) { return "0.1.0"; }

const char* sn_last_error(void) { return g_last_error.c_str(); }

void sn_string_free(char* s) { delete[] s; }

sn_status sn_config_default(sn_config** out) {
  if (out == nullptr) return NullArg("out");
  return Guard([&] {
    auto cfg = std::make_unique<sn_config>();
    sleepnet::Validate(cfg->config);
    *out = cfg.release();
  });
}

sn_status sn_config_parse(const char* json_text, sn_config** out) {
  if (json_text == nullptr) return NullArg("json_text");
  if (out == nullptr) return NullArg("out");
  return Guard([&] {
    auto cfg = std::make_unique<sn_config>();
    cfg->config = sleepnet::ParseConfig(json_text);
    *out = cfg.release();
  });
}

sn_status sn_config_load(const char* path, sn_config** out) {
  if (path == nullptr) return NullArg("path");
  if (out == nullptr) return NullArg("out");
  return Guard([&] {
    auto cfg = std::make_unique<sn_config>();
    cfg->config = sleepnet::LoadConfig(path);
    *out = cfg.release();
  });
}

sn_status sn_config_set_iterations(sn_config* cfg, size_t iterations) {
  if (cfg == nullptr) return NullArg("cfg");
  return Guard([&] {
    sleepnet::ScenarioConfig c = cfg->config;
    c.iterations = iterations;
    sleepnet::Validate(c);
    cfg->config = std::move(c);
  });
}

sn_status sn_config_iterations(const sn_config* cfg, size_t* out) {
  if (cfg == nullptr) return NullArg("cfg");
  if (out == nullptr) return NullArg("out");
  *out = cfg->config.iterations;
  return SN_OK;
}

sn_status sn_config_cce_window(const sn_config* cfg, size_t* out) {
  if (cfg == nullptr) return NullArg("cfg");
  if (out == nullptr) return NullArg("out");
  *out = cfg->config.cce_window;
  return SN_OK;
}

sn_status sn_config_set_seeds(sn_config* cfg, uint64_t first, size_t count) {
  if (cfg == nullptr) return NullArg("cfg");
  return Guard([&] {
    sleepnet::ScenarioConfig c = cfg->config;
    c.seeds.clear();
    for (size_t i = 0; i < count; ++i) c.seeds.push_back(first + i);
    sleepnet::Validate(c);
    cfg->config = std::move(c);
  });
}

sn_status sn_config_seed_count(const sn_config* cfg, size_t* out) {
  if (cfg == nullptr) return NullArg("cfg");
  if (out == nullptr) return NullArg("out");
  *out = cfg->config.seeds.size();
  return SN_OK;
}

sn_status sn_config_seed_at(const sn_config* cfg, size_t index, uint64_t* out) {
  if (cfg == nullptr) return NullArg("cfg");
  if (out == nullptr) return NullArg("out");
  if (index >= cfg->config.seeds.size()) {
    g_last_error = "seed index out of range";
    return SN_ERR_INPUT;
  }
  *out = cfg->config.seeds[index];
  return SN_OK;
}

sn_status sn_config_to_json(const sn_config* cfg, char** out) {
  if (cfg == nullptr) return NullArg("cfg");
  if (out == nullptr) return NullArg("out");
  return Guard([&] { *out = CopyString(sleepnet::ConfigToJson(cfg->config)); });
}

void sn_config_free(sn_config* cfg) { delete cfg; }

sn_status sn_simulation_create(const sn_config* cfg, uint64_t seed,
                               sn_baseline baseline, sn_simulation** out) {
  if (cfg == nullptr) return NullArg("cfg");
  if (out == nullptr) return NullArg("out");
  return Guard([&] {
    const sleepnet::ScenarioConfig& c = cfg->config;
    sleepnet::Topology topo = sleepnet::GenerateTopology(c, seed);
    auto handle = std::make_unique<sn_simulation>();
    switch (baseline) {
      case SN_BASELINE_LEARNED:
        handle->label = "learned";
        handle->sim = std::make_unique<sleepnet::Simulation>(
            c, std::move(topo.stations), std::move(topo.ues), seed);
        break;
      case SN_BASELINE_CLASSICAL:
        handle->label = "classical";
        handle->sim = std::make_unique<sleepnet::Simulation>(
            sleepnet::MakeClassicalSimulation(c, std::move(topo.stations),
                                              std::move(topo.ues), seed));
        break;
      case SN_BASELINE_EXHAUSTIVE: {
        handle->label = "exhaustive";
        const sleepnet::Environment env =
            sleepnet::MakeEnvironment(topo.stations, c);
        const sleepnet::OracleResult r =
            sleepnet::ExhaustiveSearch(env, topo.ues, c.oracle);
        handle->sim = std::make_unique<sleepnet::Simulation>(
            sleepnet::Simulation::Fixed(c, std::move(topo.stations),
                                        std::move(topo.ues), seed, r.actions,
                                        c.association));
        break;
      }
      default:
        sleepnet::Fail(sleepnet::ErrorKind::kConfig, "unknown baseline");
    }
    *out = handle.release();
  });
}

sn_status sn_simulation_run(sn_simulation* sim, size_t iterations) {
  if (sim == nullptr) return NullArg("sim");
  return Guard([&] { sim->sim->Run(iterations); });
}

sn_status sn_simulation_iteration(const sn_simulation* sim, size_t* out) {
  if (sim == nullptr) return NullArg("sim");
  if (out == nullptr) return NullArg("out");
  *out = sim->sim->state().iteration;
  return SN_OK;
}

sn_status sn_simulation_summary(const sn_simulation* sim, size_t window,
                                sn_summary* out) {
  if (sim == nullptr) return NullArg("sim");
  if (out == nullptr) return NullArg("out");
  return Guard([&] {
    const sleepnet::Trace& t = sim->sim->trace();
    *out = ToSummary(sleepnet::SummarizeTail(t, window == 0 ? t.size() : window));
  });
}

sn_status sn_simulation_cce_gap(const sn_simulation* sim, size_t window,
                                double* network, double* per_station) {
  if (sim == nullptr) return NullArg("sim");
  if (network == nullptr) return NullArg("network");
  return Guard([&] {
    const sleepnet::CceGap g = sleepnet::MeasureCceGap(
        sim->sim->environment(), sim->sim->trace(), window);
    *network = g.network;
    if (per_station != nullptr) {
      for (size_t b = 0; b < g.per_station.size(); ++b) {
        per_station[b] = g.per_station[b];
      }
    }
  });
}

sn_status sn_simulation_self_gap(const sn_simulation* sim, size_t bs,
                                 size_t window, double* out) {
  if (sim == nullptr) return NullArg("sim");
  if (out == nullptr) return NullArg("out");
  return Guard([&] {
    *out = sleepnet::SelfDeviationGap(sim->sim->environment(),
                                      sim->sim->trace(), bs, window);
  });
}

sn_status sn_simulation_convergence(const sn_simulation* sim, int* converged,
                                    size_t* iteration) {
  if (sim == nullptr) return NullArg("sim");
  if (converged == nullptr) return NullArg("converged");
  return Guard([&] {
    const sleepnet::ConvergenceConfig& c = sim->sim->config().convergence;
    const std::optional<size_t> at =
        sleepnet::DetectConvergence(sim->sim->trace(), c.window, c.tol);
    *converged = at.has_value() ? 1 : 0;
    if (iteration != nullptr) *iteration = at.value_or(0);
  });
}

sn_status sn_simulation_station_count(const sn_simulation* sim, size_t* out) {
  if (sim == nullptr) return NullArg("sim");
  if (out == nullptr) return NullArg("out");
  *out = sim->sim->environment().size();
  return SN_OK;
}

sn_status sn_simulation_strategy(const sn_simulation* sim, size_t bs,
                                 double* probs, size_t capacity, size_t* size) {
  if (sim == nullptr) return NullArg("sim");
  if (size == nullptr) return NullArg("size");
  const auto& learners = sim->sim->state().learners;
  if (bs >= learners.size()) {
    g_last_error = "station index out of range";
    return SN_ERR_INPUT;
  }
  const std::vector<double>& p = learners[bs].strategy;
  *size = p.size();
  if (probs != nullptr) {
    for (size_t i = 0; i < p.size() && i < capacity; ++i) probs[i] = p[i];
  }
  return SN_OK;
}

sn_status sn_simulation_write_trace(const sn_simulation* sim, const char* path,
                                    sn_format format) {
  if (sim == nullptr) return NullArg("sim");
  if (path == nullptr) return NullArg("path");
  return Guard([&] {
    sleepnet::WriteTraceFile(*sim->sim, sim->label,
                             format == SN_FORMAT_CSV ? sleepnet::TraceFormat::kCsv
                                                     : sleepnet::TraceFormat::kJsonl,
                             path);
  });
}

void sn_simulation_free(sn_simulation* sim) { delete sim; }

sn_status sn_oracle_run(const sn_config* cfg, uint64_t seed, char** out) {
  if (cfg == nullptr) return NullArg("cfg");
  if (out == nullptr) return NullArg("out");
  return Guard([&] {
    const sleepnet::ScenarioConfig& c = cfg->config;
    sleepnet::Topology topo = sleepnet::GenerateTopology(c, seed);
    const sleepnet::Environment env =
        sleepnet::MakeEnvironment(std::move(topo.stations), c);
    const sleepnet::OracleResult r =
        sleepnet::ExhaustiveSearch(env, topo.ues, c.oracle);
    *out = CopyString(sleepnet::OracleResultJson(r, env, seed));
  });
}

sn_status sn_experiment_run(const sn_config* cfg, const char* name,
                            const char* out_dir, int dump_traces) {
  if (cfg == nullptr) return NullArg("cfg");
  if (name == nullptr) return NullArg("name");
  if (out_dir == nullptr) return NullArg("out_dir");
  return Guard([&] {
    sleepnet::RunExperiment(cfg->config, name, out_dir, dump_traces != 0);
  });
}

sn_status sn_replay(const char* path, sn_format format, const sn_config* cfg,
                    uint64_t seed, const char* label, size_t* records,
                    size_t* mismatches, double* max_abs_diff) {
  if (path == nullptr) return NullArg("path");
  if (format == SN_FORMAT_CSV && cfg == nullptr) return NullArg("cfg");
  return Guard([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) sleepnet::Fail(sleepnet::ErrorKind::kIo, std::string("cannot open ") + path);
    const sleepnet::ReplayReport r =
        format == SN_FORMAT_CSV
            ? sleepnet::ReplayCsv(in, cfg->config, seed,
                                  label != nullptr ? label : "learned")
            : sleepnet::ReplayJsonl(in);
    if (records != nullptr) *records = r.records;
    if (mismatches != nullptr) *mismatches = r.mismatches;
    if (max_abs_diff != nullptr) *max_abs_diff = r.max_abs_cost_diff;
  });
}

}  // extern "C"
