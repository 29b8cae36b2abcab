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

// Trace serialization and replay.
//
// JSONL traces are self-contained: a header line (configuration, run mode,
// association rule, station positions), a "ues" line whenever the UE
// population changes, then one "iteration" line per record. CSV traces hold
// one row per station per iteration and need the configuration and seed to
// rebuild the topology on replay. Numbers are written in shortest
// round-trip form so replays are exact.

#ifndef SLEEPNET_CORE_TRACE_IO_H_
#define SLEEPNET_CORE_TRACE_IO_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "core/baselines.h"
#include "core/config.h"
#include "core/game_engine.h"

namespace sleepnet {

enum class TraceFormat { kJsonl, kCsv };

TraceFormat ParseTraceFormat(const std::string& name);

// `label` names the run ("learned", "classical", "exhaustive").
void WriteTrace(const Simulation& sim, const std::string& label,
                TraceFormat format, std::ostream& out);
void WriteTraceFile(const Simulation& sim, const std::string& label,
                    TraceFormat format, const std::string& path);

struct ReplayReport {
  std::size_t records = 0;
  std::size_t mismatches = 0;  // station-iterations whose cost differs
  double max_abs_cost_diff = 0.0;

  bool exact() const { return mismatches == 0; }
};

// Recomputes every cost from the recorded actions, advertised loads and UE
// set, and compares with the stored costs.
ReplayReport ReplayJsonl(std::istream& in);

// CSV replay regenerates the topology from (config, seed). `label` selects
// the association rule: "classical" uses max-RSSI.
ReplayReport ReplayCsv(std::istream& in, const ScenarioConfig& config,
                       std::uint64_t seed, const std::string& label);

std::string OracleResultJson(const OracleResult& result, const Environment& env,
                             std::uint64_t seed);

}  // namespace sleepnet

#endif  // SLEEPNET_CORE_TRACE_IO_H_
