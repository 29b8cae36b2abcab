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

#include "core/station.h"

#include <cmath>

#include <fmt/core.h>

#include "core/errors.h"
#include "core/geometry_channel.h"
#include "core/power_model.h"

namespace sleepnet {

std::vector<Action> BuildActionSpace(BsKind kind, const StationKindConfig& c) {
  const std::string_view name = BsKindName(kind);
  std::vector<Action> actions;
  if (c.sleep_capable) actions.push_back(Action{0.0, 0.0, false});
  const double p_max = DbmToW(c.max_transmit_dbm);
  for (double offset : c.power_offsets_db) {
    if (!(offset <= 0.0) || !std::isfinite(offset)) {
      Fail(ErrorKind::kConfig,
           fmt::format("{} power offset {} dB exceeds the transmit cap", name,
                       offset));
    }
    const double p = offset == 0.0 ? p_max : DbmToW(c.max_transmit_dbm + offset);
    for (double zeta : c.creb_db) {
      if (kind == BsKind::kMacro && zeta != 0.0) {
        Fail(ErrorKind::kConfig, "macro stations do not use a CREB bias");
      }
      if (!(zeta >= 0.0) || !std::isfinite(zeta)) {
        Fail(ErrorKind::kConfig,
             fmt::format("{} CREB {} must be >= 0", name, zeta));
      }
      Action a{p, zeta, true};
      const double total = TotalPowerW(c.power, a);
      if (total > c.power.p_max_w) {
        Fail(ErrorKind::kConfig,
             fmt::format("{} action ({} W, {} dB) draws {} W above the total "
                         "power cap {} W",
                         name, p, zeta, total, c.power.p_max_w));
      }
      actions.push_back(a);
    }
  }
  if (actions.empty()) {
    Fail(ErrorKind::kConfig, fmt::format("{} action space is empty", name));
  }
  if (TotalPowerW(c.power, Action{0.0, 0.0, false}) > c.power.p_max_w) {
    Fail(ErrorKind::kConfig,
         fmt::format("{} idle power exceeds the total power cap", name));
  }
  return actions;
}

BaseStation MakeStation(int id, BsKind kind, const Position& pos,
                        const StationKindConfig& c) {
  BaseStation s;
  s.id = id;
  s.kind = kind;
  s.pos = pos;
  s.power = c.power;
  s.max_transmit_power_w = DbmToW(c.max_transmit_dbm);
  s.rho_best = c.rho_best;
  s.actions = BuildActionSpace(kind, c);
  return s;
}

int FindAction(const BaseStation& station, const Action& action) {
  for (std::size_t i = 0; i < station.actions.size(); ++i) {
    if (station.actions[i] == action) return static_cast<int>(i);
  }
  return -1;
}

Action MaxPowerAction(const BaseStation& station) {
  return Action{station.max_transmit_power_w, 0.0, true};
}

}  // namespace sleepnet
