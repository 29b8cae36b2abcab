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

// Domain types shared by the channel, power, association and learning code.

#ifndef SLEEPNET_CORE_TYPES_H_
#define SLEEPNET_CORE_TYPES_H_

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

namespace sleepnet {

// Planar coordinates in meters. The first macro station sits at the origin.
struct Position {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Position&) const = default;
};

double Distance(const Position& a, const Position& b);

enum class BsKind { kMacro, kSmall };

std::string_view BsKindName(BsKind kind);

// One station's strategic choice. creb_bias_db is a dB bias on received
// power during association (in literal additive mode it is read as watts).
struct Action {
  double transmit_power_w = 0.0;
  double creb_bias_db = 0.0;
  bool active = true;

  bool operator==(const Action&) const = default;
};

struct PowerModelParams {
  double p_rf_w = 0.0;
  double p_bb_w = 0.0;
  double sigma_dc = 0.0;
  double sigma_ms = 0.0;
  double sigma_cool = 0.0;
  double sigma_feed = 0.0;
  double eta = 1.0;
  double p_bck_w = 0.0;
  // Bound on total consumed power. Infinity disables the check.
  double p_max_w = std::numeric_limits<double>::infinity();
};

struct BaseStation {
  int id = 0;
  BsKind kind = BsKind::kSmall;
  Position pos;
  PowerModelParams power;
  double max_transmit_power_w = 0.0;
  double rho_best = 0.7;
  std::vector<Action> actions;
};

struct UserEquipment {
  std::int64_t id = 0;
  Position pos;
  double arrival_rate_pps = 0.0;        // packets per second
  double mean_packet_size_bits = 0.0;

  double OfferedTrafficBps() const {
    return arrival_rate_pps * mean_packet_size_bits;
  }
};

}  // namespace sleepnet

#endif  // SLEEPNET_CORE_TYPES_H_
