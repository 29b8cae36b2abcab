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

// Distance-based path loss, channel gains, co-channel SINR and Shannon rate.
// All power arithmetic is linear (watts); dBm only appears at the edges.

#ifndef SLEEPNET_CORE_GEOMETRY_CHANNEL_H_
#define SLEEPNET_CORE_GEOMETRY_CHANNEL_H_

#include <cstddef>
#include <span>

#include "core/types.h"

namespace sleepnet {

// L(d) = intercept + slope * log10(d / 1 km). Distances below
// min_distance_m are clamped up to it.
struct PathLossModel {
  double intercept_db = 0.0;
  double slope_db_per_decade = 0.0;
  double min_distance_m = 1.0;
};

struct ChannelParams {
  double bandwidth_hz = 10e6;
  double noise_density_dbm_per_hz = -174.0;
  PathLossModel pathloss_mbs{128.1, 37.6, 35.0};
  PathLossModel pathloss_sbs{140.7, 37.6, 10.0};

  const PathLossModel& ForKind(BsKind kind) const {
    return kind == BsKind::kMacro ? pathloss_mbs : pathloss_sbs;
  }
};

// Throws kParameter on non-positive bandwidth, slope or minimum distance.
void Validate(const ChannelParams& params);

double DbmToW(double dbm);
double WToDbm(double watts);
double DbToLinear(double db);

double PathLossDb(BsKind kind, double distance_m, const ChannelParams& params);

double ChannelGain(BsKind kind, const Position& bs_pos, const Position& ue_pos,
                   const ChannelParams& params);

double NoisePowerW(const ChannelParams& params);

// Downlink SINR at ue_pos when served by stations[serving]. Sleeping
// interferers contribute nothing; a sleeping serving station is a kDomain
// error.
double Sinr(std::size_t serving, const Position& ue_pos,
            std::span<const Action> actions,
            std::span<const BaseStation> stations,
            const ChannelParams& params);

double RateBps(double sinr, const ChannelParams& params);

}  // namespace sleepnet

#endif  // SLEEPNET_CORE_GEOMETRY_CHANNEL_H_
