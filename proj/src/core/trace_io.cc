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

#include "core/trace_io.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/core.h>
#include "json.hpp"

#include "core/errors.h"
#include "core/scenario.h"
#include "core/station.h"

namespace sleepnet {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

json UesJson(const UeSet& ues, std::size_t first_iteration) {
  json arr = json::array();
  for (const UserEquipment& u : ues) {
    arr.push_back({{"id", u.id},
                   {"x", u.pos.x},
                   {"y", u.pos.y},
                   {"arrival_rate_pps", u.arrival_rate_pps},
                   {"packet_bits", u.mean_packet_size_bits}});
  }
  return {{"type", "ues"}, {"from_iteration", first_iteration}, {"ues", arr}};
}

json IterationJson(const TraceRecord& rec) {
  json bs = json::array();
  for (const StationRecord& s : rec.stations) {
    bs.push_back({{"a", s.action_index},
                  {"p", s.action.transmit_power_w},
                  {"z", s.action.creb_bias_db},
                  {"s", s.action.active ? 1 : 0},
                  {"rho_hat", s.advertised_load},
                  {"rho", s.load},
                  {"power_w", s.total_power_w},
                  {"cost", s.cost},
                  {"utility", s.utility},
                  {"dpi", s.strategy_change_l1},
                  {"over", s.overloaded}});
  }
  json j = {{"type", "iteration"},
            {"t", rec.iteration},
            {"active", rec.active_count},
            {"outage", rec.outage},
            {"bs", bs},
            {"serving", rec.association.serving},
            {"rate_bps", rec.rates_bps}};
  if (!rec.strategies.empty()) {
    j["strategy"] = rec.strategies;
    j["regret"] = rec.regrets;
  }
  return j;
}

std::string Num(double x) { return fmt::format("{}", x); }

void WriteJsonl(const Simulation& sim, const std::string& label,
                std::ostream& out) {
  const Environment& env = sim.environment();
  ScenarioConfig cfg = sim.config();
  cfg.association = env.association;
  json stations = json::array();
  for (const BaseStation& s : env.stations) {
    stations.push_back({{"id", s.id},
                        {"kind", BsKindName(s.kind)},
                        {"x", s.pos.x},
                        {"y", s.pos.y}});
  }
  json header = {{"type", "header"},
                 {"format_version", kFormatVersion},
                 {"label", label},
                 {"seed", sim.seed()},
                 {"config", json::parse(ConfigToJson(cfg, -1))},
                 {"stations", stations}};
  out << header.dump() << '\n';
  const UeSet* last = nullptr;
  for (const TraceRecord& rec : sim.trace()) {
    if (rec.ues.get() != last) {
      out << UesJson(*rec.ues, rec.iteration).dump() << '\n';
      last = rec.ues.get();
    }
    out << IterationJson(rec).dump() << '\n';
  }
}

void WriteCsv(const Simulation& sim, std::ostream& out) {
  out << "iteration,bs,kind,action_index,tx_power_w,creb_db,active,"
         "advertised_load,load,total_power_w,cost,utility,strategy_change_l1,"
         "served_ues,overloaded\n";
  const Environment& env = sim.environment();
  for (const TraceRecord& rec : sim.trace()) {
    std::vector<std::size_t> served(env.size(), 0);
    for (int s : rec.association.serving) {
      if (s >= 0) ++served[static_cast<std::size_t>(s)];
    }
    for (std::size_t b = 0; b < rec.stations.size(); ++b) {
      const StationRecord& s = rec.stations[b];
      out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                         rec.iteration, b, BsKindName(env.stations[b].kind),
                         s.action_index, Num(s.action.transmit_power_w),
                         Num(s.action.creb_bias_db), s.action.active ? 1 : 0,
                         Num(s.advertised_load), Num(s.load),
                         Num(s.total_power_w), Num(s.cost), Num(s.utility),
                         Num(s.strategy_change_l1), served[b],
                         s.overloaded ? 1 : 0);
    }
  }
}

void Compare(const Outcome& out, const std::vector<double>& stored,
             ReplayReport& report) {
  for (std::size_t b = 0; b < stored.size(); ++b) {
    const double diff = std::abs(out.costs[b] - stored[b]);
    if (out.costs[b] != stored[b]) ++report.mismatches;
    if (diff > report.max_abs_cost_diff || std::isnan(diff)) {
      report.max_abs_cost_diff = diff;
    }
  }
}

BsKind ParseKind(const std::string& s) {
  if (s == "mbs") return BsKind::kMacro;
  if (s == "sbs") return BsKind::kSmall;
  Fail(ErrorKind::kInput, "trace: unknown station kind '" + s + "'");
}

json ParseLine(const std::string& line, std::size_t lineno) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    Fail(ErrorKind::kInput,
         fmt::format("trace line {}: invalid JSON: {}", lineno, e.what()));
  }
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

double ParseDouble(const std::string& s, std::size_t lineno) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    Fail(ErrorKind::kInput,
         fmt::format("trace line {}: bad number '{}'", lineno, s));
  }
}

}  // namespace

TraceFormat ParseTraceFormat(const std::string& name) {
  if (name == "jsonl") return TraceFormat::kJsonl;
  if (name == "csv") return TraceFormat::kCsv;
  Fail(ErrorKind::kConfig, "unknown trace format '" + name + "'");
}

void WriteTrace(const Simulation& sim, const std::string& label,
                TraceFormat format, std::ostream& out) {
  if (format == TraceFormat::kJsonl) {
    WriteJsonl(sim, label, out);
  } else {
    WriteCsv(sim, out);
  }
}

void WriteTraceFile(const Simulation& sim, const std::string& label,
                    TraceFormat format, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) Fail(ErrorKind::kIo, "cannot open " + path + " for writing");
  WriteTrace(sim, label, format, f);
  if (!f) Fail(ErrorKind::kIo, "write failed: " + path);
}

ReplayReport ReplayJsonl(std::istream& in) {
  ReplayReport report;
  std::string line;
  std::size_t lineno = 0;
  std::optional<Environment> env;
  std::optional<GainTable> table;
  UeSet ues;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const json j = ParseLine(line, lineno);
    try {
      const std::string type = j.at("type").get<std::string>();
      if (type == "header") {
        const ScenarioConfig cfg = ParseConfig(j.at("config").dump());
        std::vector<BaseStation> stations;
        for (const json& s : j.at("stations")) {
          const BsKind kind = ParseKind(s.at("kind").get<std::string>());
          stations.push_back(MakeStation(
              s.at("id").get<int>(), kind,
              {s.at("x").get<double>(), s.at("y").get<double>()},
              kind == BsKind::kMacro ? cfg.mbs : cfg.sbs));
        }
        env = MakeEnvironment(std::move(stations), cfg);
        env->association = cfg.association;
      } else if (type == "ues") {
        if (!env) Fail(ErrorKind::kInput, "trace: ues record before header");
        ues.clear();
        for (const json& u : j.at("ues")) {
          UserEquipment ue;
          ue.id = u.at("id").get<std::int64_t>();
          ue.pos = {u.at("x").get<double>(), u.at("y").get<double>()};
          ue.arrival_rate_pps = u.at("arrival_rate_pps").get<double>();
          ue.mean_packet_size_bits = u.at("packet_bits").get<double>();
          ues.push_back(ue);
        }
        table.emplace(*env, ues);
      } else if (type == "iteration") {
        if (!table) Fail(ErrorKind::kInput, "trace: iteration before ues");
        const json& bs = j.at("bs");
        if (bs.size() != env->size()) {
          Fail(ErrorKind::kInput,
               fmt::format("trace line {}: {} stations, header has {}", lineno,
                           bs.size(), env->size()));
        }
        std::vector<Action> actions;
        std::vector<double> advertised, stored;
        for (const json& s : bs) {
          actions.push_back({s.at("p").get<double>(), s.at("z").get<double>(),
                             s.at("s").get<int>() != 0});
          advertised.push_back(s.at("rho_hat").get<double>());
          stored.push_back(s.at("cost").get<double>());
        }
        Compare(Evaluate(*env, *table, ues, actions, advertised), stored,
                report);
        ++report.records;
      } else {
        Fail(ErrorKind::kInput,
             fmt::format("trace line {}: unknown record type '{}'", lineno,
                         type));
      }
    } catch (const json::exception& e) {
      Fail(ErrorKind::kInput,
           fmt::format("trace line {}: {}", lineno, e.what()));
    }
  }
  if (!env) Fail(ErrorKind::kInput, "trace: missing header");
  return report;
}

ReplayReport ReplayCsv(std::istream& in, const ScenarioConfig& config,
                       std::uint64_t seed, const std::string& label) {
  Topology topo = GenerateTopology(config, seed);
  Environment env = MakeEnvironment(topo.stations, config);
  if (label == "classical") env.association.delta = 0.0;
  const GainTable table(env, topo.ues);

  ReplayReport report;
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) Fail(ErrorKind::kInput, "trace: empty CSV");
  ++lineno;
  if (SplitCsv(line).size() != 15 || line.rfind("iteration,bs,", 0) != 0) {
    Fail(ErrorKind::kInput, "trace: unexpected CSV header");
  }
  std::vector<Action> actions(env.size());
  std::vector<double> advertised(env.size()), stored(env.size());
  std::size_t filled = 0;
  std::string current;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::vector<std::string> cells = SplitCsv(line);
    if (cells.size() != 15) {
      Fail(ErrorKind::kInput,
           fmt::format("trace line {}: expected 15 columns", lineno));
    }
    if (filled == 0) current = cells[0];
    if (cells[0] != current ||
        cells[1] != std::to_string(filled)) {
      Fail(ErrorKind::kInput,
           fmt::format("trace line {}: rows out of order or station count "
                       "differs from the configuration",
                       lineno));
    }
    actions[filled] = {ParseDouble(cells[4], lineno),
                       ParseDouble(cells[5], lineno), cells[6] == "1"};
    advertised[filled] = ParseDouble(cells[7], lineno);
    stored[filled] = ParseDouble(cells[10], lineno);
    if (++filled == env.size()) {
      Compare(Evaluate(env, table, topo.ues, actions, advertised), stored,
              report);
      ++report.records;
      filled = 0;
    }
  }
  if (filled != 0) Fail(ErrorKind::kInput, "trace: truncated final iteration");
  return report;
}

std::string OracleResultJson(const OracleResult& result, const Environment& env,
                             std::uint64_t seed) {
  json stations = json::array();
  for (std::size_t b = 0; b < env.size(); ++b) {
    const Action& a = result.actions[b];
    stations.push_back({{"bs", b},
                        {"kind", BsKindName(env.stations[b].kind)},
                        {"action_index", result.action_indices[b]},
                        {"tx_power_w", a.transmit_power_w},
                        {"creb_db", a.creb_bias_db},
                        {"active", a.active},
                        {"cost", result.per_station_costs[b]},
                        {"load", result.loads[b]}});
  }
  return json{{"seed", seed},
              {"joint_space_size", result.joint_space_size},
              {"joint_index", result.joint_index},
              {"total_cost", result.total_cost},
              {"cost_per_bs", result.total_cost / static_cast<double>(env.size())},
              {"feasible", result.feasible},
              {"stations", stations}}
      .dump();
}

}  // namespace sleepnet
