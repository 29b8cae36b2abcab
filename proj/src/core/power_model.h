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

// Electrical power drawn by a base station in sleep and active states.
//
//   idle   = (P_RF + P_BB) / sigma,   sigma = (1-s_DC)(1-s_MS)(1-s_cool)
//   active = P / (eta * sigma * (1 - s_feed)) + P_BCK + idle
//
// A sleeping station still draws the idle power it needs to sense UEs.

#ifndef SLEEPNET_CORE_POWER_MODEL_H_
#define SLEEPNET_CORE_POWER_MODEL_H_

#include "core/types.h"

namespace sleepnet {

// Throws kParameter unless every sigma lies in [0, 1), eta in (0, 1] and all
// powers are non-negative.
void Validate(const PowerModelParams& params);

double LossProduct(const PowerModelParams& params);

double IdlePowerW(const PowerModelParams& params);

// Watts of consumed power per watt radiated, i.e. 1 / (eta sigma (1-s_feed)).
double AmplifierSlope(const PowerModelParams& params);

double TotalPowerW(const PowerModelParams& params, const Action& action);

}  // namespace sleepnet

#endif  // SLEEPNET_CORE_POWER_MODEL_H_
