/* Copyright 2026 The Sleepnet Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the sleepnet simulator.
 *
 * Every function returns an sn_status. On failure, sn_last_error() describes
 * the most recent error on the calling thread. Strings returned through
 * `char**` out-parameters are owned by the caller and released with
 * sn_string_free. Handles are not thread-safe; distinct handles may be used
 * from different threads.
 */

#ifndef SLEEPNET_H_
#define SLEEPNET_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SN_API __declspec(dllexport)
#else
#define SN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sn_status {
  SN_OK = 0,
  SN_ERR_CONFIG = 1,     /* invalid configuration or argument */
  SN_ERR_BUDGET = 2,     /* budget or feasibility refusal */
  SN_ERR_INPUT = 3,      /* malformed input data */
  SN_ERR_DOMAIN = 4,     /* value outside a function's domain */
  SN_ERR_PARAMETER = 5,  /* invalid model parameter */
  SN_ERR_STATE = 6,      /* internal state corruption detected */
  SN_ERR_IO = 7,
  SN_ERR_INTERNAL = 8,
  SN_ERR_NULL = 9        /* required pointer argument was NULL */
} sn_status;

typedef enum sn_baseline {
  SN_BASELINE_LEARNED = 0,
  SN_BASELINE_CLASSICAL = 1,
  SN_BASELINE_EXHAUSTIVE = 2 /* the oracle's joint action, played fixed */
} sn_baseline;

typedef enum sn_format { SN_FORMAT_JSONL = 0, SN_FORMAT_CSV = 1 } sn_format;

typedef struct sn_config sn_config;
typedef struct sn_simulation sn_simulation;

typedef struct sn_summary {
  double cost_per_bs;
  double energy_per_bs_w;
  double load_per_bs;
  double active_fraction;
  double total_cost;
} sn_summary;

SN_API const char* sn_version(void);
SN_API const char* sn_last_error(void);
SN_API void sn_string_free(char* s);

/* Configuration. */
SN_API sn_status sn_config_default(sn_config** out);
SN_API sn_status sn_config_parse(const char* json_text, sn_config** out);
SN_API sn_status sn_config_load(const char* path, sn_config** out);
SN_API sn_status sn_config_set_iterations(sn_config* cfg, size_t iterations);
SN_API sn_status sn_config_iterations(const sn_config* cfg, size_t* out);
SN_API sn_status sn_config_cce_window(const sn_config* cfg, size_t* out);
/* Replaces the seed list with seeds first, first+1, ..., first+count-1. */
SN_API sn_status sn_config_set_seeds(sn_config* cfg, uint64_t first,
                                     size_t count);
SN_API sn_status sn_config_seed_count(const sn_config* cfg, size_t* out);
SN_API sn_status sn_config_seed_at(const sn_config* cfg, size_t index,
                                   uint64_t* out);
SN_API sn_status sn_config_to_json(const sn_config* cfg, char** out);
SN_API void sn_config_free(sn_config* cfg);

/* Single scenario runs. The topology is generated from (cfg, seed). */
SN_API sn_status sn_simulation_create(const sn_config* cfg, uint64_t seed,
                                      sn_baseline baseline,
                                      sn_simulation** out);
SN_API sn_status sn_simulation_run(sn_simulation* sim, size_t iterations);
SN_API sn_status sn_simulation_iteration(const sn_simulation* sim,
                                         size_t* out);
/* Means over the last `window` iterations (0: the whole trace). */
SN_API sn_status sn_simulation_summary(const sn_simulation* sim, size_t window,
                                       sn_summary* out);
/* Network and per-station gaps; per_station may be NULL, otherwise it must
 * hold sn_simulation_station_count() entries. */
SN_API sn_status sn_simulation_cce_gap(const sn_simulation* sim, size_t window,
                                       double* network, double* per_station);
SN_API sn_status sn_simulation_self_gap(const sn_simulation* sim, size_t bs,
                                        size_t window, double* out);
/* *converged is 0 when no convergence was detected. */
SN_API sn_status sn_simulation_convergence(const sn_simulation* sim,
                                           int* converged, size_t* iteration);
SN_API sn_status sn_simulation_station_count(const sn_simulation* sim,
                                             size_t* out);
/* Copies min(capacity, |actions|) probabilities; *size receives |actions|. */
SN_API sn_status sn_simulation_strategy(const sn_simulation* sim, size_t bs,
                                        double* probs, size_t capacity,
                                        size_t* size);
SN_API sn_status sn_simulation_write_trace(const sn_simulation* sim,
                                           const char* path, sn_format format);
SN_API void sn_simulation_free(sn_simulation* sim);

/* Exhaustive oracle for (cfg, seed); *out receives a JSON document. */
SN_API sn_status sn_oracle_run(const sn_config* cfg, uint64_t seed, char** out);

/* Writes <out_dir>/<name>.csv and <out_dir>/<name>.jsonl. */
SN_API sn_status sn_experiment_run(const sn_config* cfg, const char* name,
                                   const char* out_dir, int dump_traces);

/* Replays a trace and recomputes every cost. For CSV traces cfg, seed and
 * label ("learned", "classical", "exhaustive") are required; JSONL traces
 * are self-describing and cfg may be NULL. */
SN_API sn_status sn_replay(const char* path, sn_format format,
                           const sn_config* cfg, uint64_t seed,
                           const char* label, size_t* records,
                           size_t* mismatches, double* max_abs_diff);

#ifdef __cplusplus
}
#endif

#endif /* SLEEPNET_H_ */
