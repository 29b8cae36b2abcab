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

#ifndef SLEEPNET_CORE_STATION_H_
#define SLEEPNET_CORE_STATION_H_

#include <vector>

#include "core/config.h"
#include "core/types.h"

namespace sleepnet {

// Discrete action set for one station kind: the sleep action first (when
// sleep-capable), then every power level crossed with every CREB value.
// Throws kConfig when an action exceeds the transmit-power cap, the total
// power cap, or gives a macro station a non-zero CREB.
std::vector<Action> BuildActionSpace(BsKind kind, const StationKindConfig& c);

BaseStation MakeStation(int id, BsKind kind, const Position& pos,
                        const StationKindConfig& c);

// Index of `action` in the station's action space, or -1.
int FindAction(const BaseStation& station, const Action& action);

// Full power, zero CREB, always on.
Action MaxPowerAction(const BaseStation& station);

}  // namespace sleepnet

#endif  // SLEEPNET_CORE_STATION_H_
