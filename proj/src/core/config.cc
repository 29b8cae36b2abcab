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

#include "core/config.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <fmt/core.h>

#include "core/errors.h"
#include "core/power_model.h"
#include "core/station.h"
#include "json.hpp"

namespace sleepnet {

using nlohmann::json;

// Power-model defaults are illustrative values in the style of published
// macro/small-cell consumption models, not measured constants.
StationKindConfig DefaultMacroConfig() {
  StationKindConfig c;
  c.max_transmit_dbm = 46.0;
  c.power.p_rf_w = 12.9;
  c.power.p_bb_w = 29.6;
  c.power.sigma_dc = 0.075;
  c.power.sigma_ms = 0.09;
  c.power.sigma_cool = 0.10;
  c.power.sigma_feed = 0.5;
  c.power.eta = 0.31;
  c.power.p_bck_w = 1.0;
  c.rho_best = 0.7;
  c.power_offsets_db = {-3.0, 0.0};
  c.creb_db = {0.0};
  c.sleep_capable = false;
  return c;
}

StationKindConfig DefaultSmallConfig() {
  StationKindConfig c;
  c.max_transmit_dbm = 30.0;
  c.power.p_rf_w = 1.0;
  c.power.p_bb_w = 3.0;
  c.power.sigma_dc = 0.075;
  c.power.sigma_ms = 0.09;
  c.power.sigma_cool = 0.0;
  c.power.sigma_feed = 0.0;
  c.power.eta = 0.25;
  c.power.p_bck_w = 1.0;
  c.rho_best = 0.7;
  c.power_offsets_db = {-6.0, -3.0, 0.0};
  c.creb_db = {0.0, 3.0, 6.0};
  c.sleep_capable = true;
  return c;
}

ScenarioConfig::ScenarioConfig() {
  for (std::uint64_t s = 1; s <= 20; ++s) seeds.push_back(s);
}

namespace {

[[noreturn]] void ConfigFail(const std::string& path, const std::string& msg) {
  Fail(ErrorKind::kConfig, fmt::format("config: {}: {}", path, msg));
}

// Strict reader over one JSON object: every key must be consumed.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) ConfigFail(path_, "expected an object");
  }

  ~ObjectReader() noexcept(false) {
    if (std::uncaught_exceptions() > 0) return;
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.count(key)) ConfigFail(Sub(key), "unknown key");
    }
  }

  std::string Sub(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  const json* Find(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  void Number(const std::string& key, double& out) {
    if (const json* v = Find(key)) {
      if (!v->is_number()) ConfigFail(Sub(key), "expected a number");
      out = v->get<double>();
    }
  }

  void OptionalNumber(const std::string& key, std::optional<double>& out) {
    if (const json* v = Find(key)) {
      if (v->is_null()) {
        out.reset();
      } else if (v->is_number()) {
        out = v->get<double>();
      } else {
        ConfigFail(Sub(key), "expected a number or null");
      }
    }
  }

  // null means +infinity.
  void NumberOrInfinity(const std::string& key, double& out) {
    if (const json* v = Find(key)) {
      if (v->is_null()) {
        out = std::numeric_limits<double>::infinity();
      } else if (v->is_number()) {
        out = v->get<double>();
      } else {
        ConfigFail(Sub(key), "expected a number or null");
      }
    }
  }

  template <typename Int>
  void Count(const std::string& key, Int& out) {
    if (const json* v = Find(key)) {
      if (!v->is_number_integer() || v->get<long long>() < 0) {
        ConfigFail(Sub(key), "expected a non-negative integer");
      }
      out = static_cast<Int>(v->get<unsigned long long>());
    }
  }

  void Integer(const std::string& key, int& out) {
    if (const json* v = Find(key)) {
      if (!v->is_number_integer()) ConfigFail(Sub(key), "expected an integer");
      out = v->get<int>();
    }
  }

  void Bool(const std::string& key, bool& out) {
    if (const json* v = Find(key)) {
      if (!v->is_boolean()) ConfigFail(Sub(key), "expected true or false");
      out = v->get<bool>();
    }
  }

  void String(const std::string& key, std::string& out) {
    if (const json* v = Find(key)) {
      if (!v->is_string()) ConfigFail(Sub(key), "expected a string");
      out = v->get<std::string>();
    }
  }

  void NumberList(const std::string& key, std::vector<double>& out) {
    if (const json* v = Find(key)) {
      if (!v->is_array()) ConfigFail(Sub(key), "expected an array of numbers");
      out.clear();
      for (const json& e : *v) {
        if (!e.is_number()) ConfigFail(Sub(key), "expected numbers");
        out.push_back(e.get<double>());
      }
    }
  }

  template <typename Int>
  void CountList(const std::string& key, std::vector<Int>& out) {
    if (const json* v = Find(key)) {
      if (!v->is_array()) ConfigFail(Sub(key), "expected an array of integers");
      out.clear();
      for (const json& e : *v) {
        if (!e.is_number_integer() || e.get<long long>() < 0) {
          ConfigFail(Sub(key), "expected non-negative integers");
        }
        out.push_back(static_cast<Int>(e.get<unsigned long long>()));
      }
    }
  }

  template <typename Fn>
  void Object(const std::string& key, Fn&& fn) {
    if (const json* v = Find(key)) {
      ObjectReader sub(*v, Sub(key));
      fn(sub);
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

void ReadPathLoss(ObjectReader& r, PathLossModel& m) {
  r.Number("intercept_db", m.intercept_db);
  r.Number("slope_db_per_decade", m.slope_db_per_decade);
  r.Number("min_distance_m", m.min_distance_m);
}

void ReadStationKind(ObjectReader& r, StationKindConfig& c) {
  r.Number("max_transmit_dbm", c.max_transmit_dbm);
  r.Number("p_rf_w", c.power.p_rf_w);
  r.Number("p_bb_w", c.power.p_bb_w);
  r.Number("sigma_dc", c.power.sigma_dc);
  r.Number("sigma_ms", c.power.sigma_ms);
  r.Number("sigma_cool", c.power.sigma_cool);
  r.Number("sigma_feed", c.power.sigma_feed);
  r.Number("eta", c.power.eta);
  r.Number("p_bck_w", c.power.p_bck_w);
  r.NumberOrInfinity("p_max_total_w", c.power.p_max_w);
  r.Number("rho_best", c.rho_best);
  r.NumberList("power_offsets_db", c.power_offsets_db);
  r.NumberList("creb_db", c.creb_db);
  r.Bool("sleep_capable", c.sleep_capable);
}

void ReadCase(ObjectReader& r, DynamicCase& c) {
  r.Count("initial_ues", c.initial_ues);
  r.Integer("ue_delta", c.ue_delta);
  r.Count("epochs", c.epochs);
}

TrafficMode ParseTrafficMode(const std::string& s, const std::string& path) {
  if (s == "homogeneous") return TrafficMode::kHomogeneous;
  if (s == "uniform") return TrafficMode::kUniform;
  if (s == "exponential") return TrafficMode::kExponential;
  ConfigFail(path, "expected homogeneous, uniform or exponential");
}

const char* TrafficModeName(TrafficMode m) {
  switch (m) {
    case TrafficMode::kHomogeneous:
      return "homogeneous";
    case TrafficMode::kUniform:
      return "uniform";
    case TrafficMode::kExponential:
      return "exponential";
  }
  return "homogeneous";
}

void ReadConfig(const json& root, ScenarioConfig& c) {
  ObjectReader r(root, "");
  r.Object("scenario", [&](ObjectReader& s) {
    s.Number("cell_radius_m", c.cell_radius_m);
    s.Count("n_sbs", c.n_sbs);
    s.Count("n_ue", c.n_ue);
    s.Count("iterations", c.iterations);
    s.CountList("seeds", c.seeds);
    s.Object("min_distances_m", [&](ObjectReader& d) {
      d.Number("mbs_sbs", c.min_distances.mbs_sbs);
      d.Number("mbs_ue", c.min_distances.mbs_ue);
      d.Number("sbs_sbs", c.min_distances.sbs_sbs);
      d.Number("sbs_ue", c.min_distances.sbs_ue);
    });
    s.Object("traffic", [&](ObjectReader& t) {
      t.Number("mean_bps", c.traffic.mean_bps);
      t.Number("mean_packet_size_bits", c.traffic.mean_packet_size_bits);
      std::string mode = TrafficModeName(c.traffic.mode);
      t.String("mode", mode);
      c.traffic.mode = ParseTrafficMode(mode, t.Sub("mode"));
      t.Number("spread", c.traffic.spread);
    });
  });
  r.Object("channel", [&](ObjectReader& ch) {
    ch.Number("bandwidth_hz", c.channel.bandwidth_hz);
    ch.Number("noise_density_dbm_per_hz", c.channel.noise_density_dbm_per_hz);
    ch.Object("pathloss_mbs",
              [&](ObjectReader& p) { ReadPathLoss(p, c.channel.pathloss_mbs); });
    ch.Object("pathloss_sbs",
              [&](ObjectReader& p) { ReadPathLoss(p, c.channel.pathloss_sbs); });
  });
  r.Object("mbs", [&](ObjectReader& m) { ReadStationKind(m, c.mbs); });
  r.Object("sbs", [&](ObjectReader& m) { ReadStationKind(m, c.sbs); });
  r.Object("association", [&](ObjectReader& a) {
    a.Number("delta", c.association.delta);
    std::string mode = c.association.creb_mode == CrebMode::kLinearAdditive
                           ? "linear_additive"
                           : "db";
    a.String("creb_mode", mode);
    if (mode == "db") {
      c.association.creb_mode = CrebMode::kDbMultiplicative;
    } else if (mode == "linear_additive") {
      c.association.creb_mode = CrebMode::kLinearAdditive;
    } else {
      ConfigFail(a.Sub("creb_mode"), "expected db or linear_additive");
    }
    a.Object("load_estimate", [&](ObjectReader& l) {
      std::string sched = c.load_schedule.constant ? "constant" : "decreasing";
      l.String("schedule", sched);
      if (sched != "constant" && sched != "decreasing") {
        ConfigFail(l.Sub("schedule"), "expected constant or decreasing");
      }
      c.load_schedule.constant = sched == "constant";
      l.Number("exponent", c.load_schedule.exponent);
      l.Number("rate", c.load_schedule.constant_rate);
    });
  });
  r.Object("learning", [&](ObjectReader& l) {
    l.Number("tau_exponent", c.learning.tau_exponent);
    l.Number("iota_exponent", c.learning.iota_exponent);
    l.Number("epsilon_exponent", c.learning.epsilon_exponent);
    l.Number("kappa", c.learning.kappa);
    l.Count("strategy_stride", c.strategy_stride);
  });
  r.Object("cost", [&](ObjectReader& k) {
    k.Number("alpha", c.cost.alpha);
    k.Number("beta", c.cost.beta);
    k.Number("overload_penalty_weight", c.cost.overload_penalty_weight);
    k.Number("utility_load_ceiling", c.cost.utility_load_ceiling);
    k.OptionalNumber("utility_ceiling_mbs", c.cost.utility_ceiling_mbs);
    k.OptionalNumber("utility_ceiling_sbs", c.cost.utility_ceiling_sbs);
  });
  r.Object("convergence", [&](ObjectReader& k) {
    k.Count("window", c.convergence.window);
    k.Number("tol", c.convergence.tol);
  });
  r.Object("cce", [&](ObjectReader& k) { k.Count("window", c.cce_window); });
  r.Object("oracle", [&](ObjectReader& o) {
    o.Count("budget", c.oracle.budget);
    o.Count("max_rounds", c.oracle.max_rounds);
    o.Number("tol", c.oracle.tol);
  });
  r.Object("experiments", [&](ObjectReader& e) {
    ExperimentConfig& x = c.experiments;
    e.CountList("sbs_sweep", x.sbs_sweep);
    e.Count("ues_for_sbs_sweep", x.ues_for_sbs_sweep);
    e.CountList("ue_sweep", x.ue_sweep);
    e.Count("sbs_for_ue_sweep", x.sbs_for_ue_sweep);
    e.CountList("tradeoff_sbs", x.tradeoff_sbs);
    e.CountList("tradeoff_ues", x.tradeoff_ues);
    e.Count("dynamic_sbs", x.dynamic_sbs);
    e.Count("iterations_per_epoch", x.iterations_per_epoch);
    e.Object("case1", [&](ObjectReader& k) { ReadCase(k, x.case1); });
    e.Object("case2", [&](ObjectReader& k) { ReadCase(k, x.case2); });
    e.CountList("convergence_sbs", x.convergence_sbs);
    e.CountList("convergence_ues", x.convergence_ues);
    e.Count("metrics_window", x.metrics_window);
  });
}

json PathLossJson(const PathLossModel& m) {
  return {{"intercept_db", m.intercept_db},
          {"slope_db_per_decade", m.slope_db_per_decade},
          {"min_distance_m", m.min_distance_m}};
}

json NumberOrNull(double v) { return std::isinf(v) ? json(nullptr) : json(v); }

json StationKindJson(const StationKindConfig& c) {
  return {{"max_transmit_dbm", c.max_transmit_dbm},
          {"p_rf_w", c.power.p_rf_w},
          {"p_bb_w", c.power.p_bb_w},
          {"sigma_dc", c.power.sigma_dc},
          {"sigma_ms", c.power.sigma_ms},
          {"sigma_cool", c.power.sigma_cool},
          {"sigma_feed", c.power.sigma_feed},
          {"eta", c.power.eta},
          {"p_bck_w", c.power.p_bck_w},
          {"p_max_total_w", NumberOrNull(c.power.p_max_w)},
          {"rho_best", c.rho_best},
          {"power_offsets_db", c.power_offsets_db},
          {"creb_db", c.creb_db},
          {"sleep_capable", c.sleep_capable}};
}

json CaseJson(const DynamicCase& c) {
  return {{"initial_ues", c.initial_ues},
          {"ue_delta", c.ue_delta},
          {"epochs", c.epochs}};
}

json OptionalJson(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

void RequirePositive(double v, const std::string& path) {
  if (!(v > 0.0) || !std::isfinite(v)) ConfigFail(path, "must be positive");
}

}  // namespace

void Validate(const ScenarioConfig& c) {
  RequirePositive(c.cell_radius_m, "scenario.cell_radius_m");
  RequirePositive(c.min_distances.mbs_sbs, "scenario.min_distances_m.mbs_sbs");
  RequirePositive(c.min_distances.mbs_ue, "scenario.min_distances_m.mbs_ue");
  RequirePositive(c.min_distances.sbs_sbs, "scenario.min_distances_m.sbs_sbs");
  RequirePositive(c.min_distances.sbs_ue, "scenario.min_distances_m.sbs_ue");
  RequirePositive(c.traffic.mean_bps, "scenario.traffic.mean_bps");
  RequirePositive(c.traffic.mean_packet_size_bits,
                  "scenario.traffic.mean_packet_size_bits");
  if (c.traffic.mode == TrafficMode::kUniform &&
      !(c.traffic.spread >= 0.0 && c.traffic.spread < 1.0)) {
    ConfigFail("scenario.traffic.spread", "must lie in [0, 1)");
  }
  if (c.iterations == 0) ConfigFail("scenario.iterations", "must be >= 1");
  if (c.seeds.empty()) ConfigFail("scenario.seeds", "must not be empty");
  try {
    Validate(c.channel);
    Validate(c.association);
    Validate(c.load_schedule);
    Validate(c.mbs.power);
    Validate(c.sbs.power);
    BuildActionSpace(BsKind::kMacro, c.mbs);
    BuildActionSpace(BsKind::kSmall, c.sbs);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kConfig) throw;
    Fail(ErrorKind::kConfig, fmt::format("config: {}", e.what()));
  }
  for (const auto* k : {&c.mbs, &c.sbs}) {
    if (!(k->rho_best >= 0.0 && k->rho_best <= 1.0)) {
      ConfigFail("rho_best", "must lie in [0, 1]");
    }
  }
  const RateReport report = ValidateRateExponents(c.learning);
  if (!report.ok) ConfigFail("learning", report.violations.front());
  if (!(c.cost.alpha >= 0.0 && c.cost.beta >= 0.0) ||
      (c.cost.alpha == 0.0 && c.cost.beta == 0.0)) {
    ConfigFail("cost", "alpha and beta must be >= 0 and not both zero");
  }
  if (!(c.cost.overload_penalty_weight >= 0.0)) {
    ConfigFail("cost.overload_penalty_weight", "must be >= 0");
  }
  if (!(c.cost.utility_load_ceiling >= 0.0)) {
    ConfigFail("cost.utility_load_ceiling", "must be >= 0");
  }
  if (c.convergence.window < 2) ConfigFail("convergence.window", "must be >= 2");
  if (!(c.convergence.tol > 0.0)) ConfigFail("convergence.tol", "must be > 0");
  if (c.cce_window == 0) ConfigFail("cce.window", "must be >= 1");
  if (c.oracle.budget == 0) ConfigFail("oracle.budget", "must be >= 1");
  if (c.oracle.max_rounds == 0) ConfigFail("oracle.max_rounds", "must be >= 1");
  if (c.experiments.iterations_per_epoch == 0) {
    ConfigFail("experiments.iterations_per_epoch", "must be >= 1");
  }
  for (const auto* dc : {&c.experiments.case1, &c.experiments.case2}) {
    const long long final_count =
        static_cast<long long>(dc->initial_ues) +
        static_cast<long long>(dc->ue_delta) * static_cast<long long>(dc->epochs);
    if (final_count < 0) {
      ConfigFail("experiments.case", "schedule drives the UE count below zero");
    }
  }
  if (c.experiments.metrics_window == 0) {
    ConfigFail("experiments.metrics_window", "must be >= 1");
  }
}

ScenarioConfig ParseConfig(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    Fail(ErrorKind::kConfig, fmt::format("config: parse error: {}", e.what()));
  }
  ScenarioConfig c;
  ReadConfig(root, c);
  Validate(c);
  return c;
}

ScenarioConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kConfig, fmt::format("config: cannot open {}", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseConfig(ss.str());
}

std::string ConfigToJson(const ScenarioConfig& c, int indent) {
  const ExperimentConfig& x = c.experiments;
  json root = {
      {"scenario",
       {{"cell_radius_m", c.cell_radius_m},
        {"n_sbs", c.n_sbs},
        {"n_ue", c.n_ue},
        {"iterations", c.iterations},
        {"seeds", c.seeds},
        {"min_distances_m",
         {{"mbs_sbs", c.min_distances.mbs_sbs},
          {"mbs_ue", c.min_distances.mbs_ue},
          {"sbs_sbs", c.min_distances.sbs_sbs},
          {"sbs_ue", c.min_distances.sbs_ue}}},
        {"traffic",
         {{"mean_bps", c.traffic.mean_bps},
          {"mean_packet_size_bits", c.traffic.mean_packet_size_bits},
          {"mode", TrafficModeName(c.traffic.mode)},
          {"spread", c.traffic.spread}}}}},
      {"channel",
       {{"bandwidth_hz", c.channel.bandwidth_hz},
        {"noise_density_dbm_per_hz", c.channel.noise_density_dbm_per_hz},
        {"pathloss_mbs", PathLossJson(c.channel.pathloss_mbs)},
        {"pathloss_sbs", PathLossJson(c.channel.pathloss_sbs)}}},
      {"mbs", StationKindJson(c.mbs)},
      {"sbs", StationKindJson(c.sbs)},
      {"association",
       {{"delta", c.association.delta},
        {"creb_mode", c.association.creb_mode == CrebMode::kLinearAdditive
                          ? "linear_additive"
                          : "db"},
        {"load_estimate",
         {{"schedule", c.load_schedule.constant ? "constant" : "decreasing"},
          {"exponent", c.load_schedule.exponent},
          {"rate", c.load_schedule.constant_rate}}}}},
      {"learning",
       {{"tau_exponent", c.learning.tau_exponent},
        {"iota_exponent", c.learning.iota_exponent},
        {"epsilon_exponent", c.learning.epsilon_exponent},
        {"kappa", c.learning.kappa},
        {"strategy_stride", c.strategy_stride}}},
      {"cost",
       {{"alpha", c.cost.alpha},
        {"beta", c.cost.beta},
        {"overload_penalty_weight", c.cost.overload_penalty_weight},
        {"utility_load_ceiling", c.cost.utility_load_ceiling},
        {"utility_ceiling_mbs", OptionalJson(c.cost.utility_ceiling_mbs)},
        {"utility_ceiling_sbs", OptionalJson(c.cost.utility_ceiling_sbs)}}},
      {"convergence",
       {{"window", c.convergence.window}, {"tol", c.convergence.tol}}},
      {"cce", {{"window", c.cce_window}}},
      {"oracle",
       {{"budget", c.oracle.budget},
        {"max_rounds", c.oracle.max_rounds},
        {"tol", c.oracle.tol}}},
      {"experiments",
       {{"sbs_sweep", x.sbs_sweep},
        {"ues_for_sbs_sweep", x.ues_for_sbs_sweep},
        {"ue_sweep", x.ue_sweep},
        {"sbs_for_ue_sweep", x.sbs_for_ue_sweep},
        {"tradeoff_sbs", x.tradeoff_sbs},
        {"tradeoff_ues", x.tradeoff_ues},
        {"dynamic_sbs", x.dynamic_sbs},
        {"iterations_per_epoch", x.iterations_per_epoch},
        {"case1", CaseJson(x.case1)},
        {"case2", CaseJson(x.case2)},
        {"convergence_sbs", x.convergence_sbs},
        {"convergence_ues", x.convergence_ues},
        {"metrics_window", x.metrics_window}}}};
  return root.dump(indent);
}

}  // namespace sleepnet
