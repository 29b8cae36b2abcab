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

#include "core/geometry_channel.h"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "core/errors.h"

namespace sleepnet {

double Distance(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

std::string_view BsKindName(BsKind kind) {
  return kind == BsKind::kMacro ? "mbs" : "sbs";
}

void Validate(const ChannelParams& params) {
  if (!(params.bandwidth_hz > 0.0) || !std::isfinite(params.bandwidth_hz)) {
    Fail(ErrorKind::kParameter, "channel bandwidth must be positive");
  }
  if (!std::isfinite(params.noise_density_dbm_per_hz)) {
    Fail(ErrorKind::kParameter, "noise density must be finite");
  }
  for (const PathLossModel* m : {&params.pathloss_mbs, &params.pathloss_sbs}) {
    if (!(m->slope_db_per_decade > 0.0)) {
      Fail(ErrorKind::kParameter, "path loss slope must be positive");
    }
    if (!(m->min_distance_m > 0.0)) {
      Fail(ErrorKind::kParameter, "path loss minimum distance must be positive");
    }
    if (!std::isfinite(m->intercept_db)) {
      Fail(ErrorKind::kParameter, "path loss intercept must be finite");
    }
  }
}

double DbmToW(double dbm) { return std::pow(10.0, dbm / 10.0) / 1000.0; }

double WToDbm(double watts) { return 10.0 * std::log10(watts * 1000.0); }

double DbToLinear(double db) { return std::pow(10.0, db / 10.0); }

double PathLossDb(BsKind kind, double distance_m, const ChannelParams& params) {
  if (!(distance_m > 0.0)) {
    Fail(ErrorKind::kInput,
         fmt::format("path loss distance must be positive, got {}", distance_m));
  }
  const PathLossModel& model = params.ForKind(kind);
  const double d = std::max(distance_m, model.min_distance_m);
  return model.intercept_db + model.slope_db_per_decade * std::log10(d / 1000.0);
}

double ChannelGain(BsKind kind, const Position& bs_pos, const Position& ue_pos,
                   const ChannelParams& params) {
  const double d = std::max(Distance(bs_pos, ue_pos),
                            params.ForKind(kind).min_distance_m);
  return std::pow(10.0, -PathLossDb(kind, d, params) / 10.0);
}

double NoisePowerW(const ChannelParams& params) {
  return DbmToW(params.noise_density_dbm_per_hz +
                10.0 * std::log10(params.bandwidth_hz));
}

double Sinr(std::size_t serving, const Position& ue_pos,
            std::span<const Action> actions,
            std::span<const BaseStation> stations,
            const ChannelParams& params) {
  if (actions.size() != stations.size() || serving >= stations.size()) {
    Fail(ErrorKind::kInput, "sinr: serving index or action vector mismatch");
  }
  if (!actions[serving].active) {
    Fail(ErrorKind::kDomain,
         fmt::format("sinr: serving station {} is asleep", serving));
  }
  double signal = 0.0;
  double interference = 0.0;
  for (std::size_t b = 0; b < stations.size(); ++b) {
    if (!actions[b].active) continue;
    const double rx =
        actions[b].transmit_power_w *
        ChannelGain(stations[b].kind, stations[b].pos, ue_pos, params);
    if (b == serving) {
      signal = rx;
    } else {
      interference += rx;
    }
  }
  return signal / (interference + NoisePowerW(params));
}

double RateBps(double sinr, const ChannelParams& params) {
  if (!(sinr >= 0.0)) {
    Fail(ErrorKind::kInput, fmt::format("rate: negative sinr {}", sinr));
  }
  return params.bandwidth_hz * std::log2(1.0 + sinr);
}

}  // namespace sleepnet
