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

#include "core/power_model.h"

#include <cmath>

#include <fmt/core.h>

#include "core/errors.h"

namespace sleepnet {
namespace {

void CheckFraction(double value, const char* name) {
  if (!(value >= 0.0 && value < 1.0)) {
    Fail(ErrorKind::kParameter,
         fmt::format("power model: {} = {} must lie in [0, 1)", name, value));
  }
}

void CheckPower(double value, const char* name) {
  if (!(value >= 0.0) || std::isnan(value)) {
    Fail(ErrorKind::kParameter,
         fmt::format("power model: {} = {} must be non-negative", name, value));
  }
}

}  // namespace

void Validate(const PowerModelParams& params) {
  CheckFraction(params.sigma_dc, "sigma_dc");
  CheckFraction(params.sigma_ms, "sigma_ms");
  CheckFraction(params.sigma_cool, "sigma_cool");
  CheckFraction(params.sigma_feed, "sigma_feed");
  if (!(params.eta > 0.0 && params.eta <= 1.0)) {
    Fail(ErrorKind::kParameter,
         fmt::format("power model: eta = {} must lie in (0, 1]", params.eta));
  }
  CheckPower(params.p_rf_w, "p_rf_w");
  CheckPower(params.p_bb_w, "p_bb_w");
  CheckPower(params.p_bck_w, "p_bck_w");
  CheckPower(params.p_max_w, "p_max_w");
}

double LossProduct(const PowerModelParams& params) {
  return (1.0 - params.sigma_dc) * (1.0 - params.sigma_ms) *
         (1.0 - params.sigma_cool);
}

double IdlePowerW(const PowerModelParams& params) {
  const double sigma = LossProduct(params);
  if (!(sigma > 0.0)) {
    Fail(ErrorKind::kParameter, "power model: loss product is zero");
  }
  return (params.p_rf_w + params.p_bb_w) / sigma;
}

double AmplifierSlope(const PowerModelParams& params) {
  const double denom =
      params.eta * LossProduct(params) * (1.0 - params.sigma_feed);
  if (!(denom > 0.0)) {
    Fail(ErrorKind::kParameter,
         "power model: eta * sigma * (1 - sigma_feed) is zero");
  }
  return 1.0 / denom;
}

double TotalPowerW(const PowerModelParams& params, const Action& action) {
  const double idle = IdlePowerW(params);
  if (!action.active) return idle;
  return action.transmit_power_w * AmplifierSlope(params) + params.p_bck_w +
         idle;
}

}  // namespace sleepnet
