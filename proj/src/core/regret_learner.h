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

// Per-station regret learning with three step-size sequences.
//
// Each station keeps, per action i,
//   u_hat_i  utility estimate, refreshed only for the action just played,
//   r_hat_i  regret estimate, tracking u_hat_i - u (every action),
//   pi_i     mixed strategy, relaxed toward softmax(kappa * r_hat).
// All three recursions read the previous iteration's values. The step sizes
// are t^-c with c_tau < c_iota < c_eps, so utilities are learned fastest and
// the strategy slowest.

#ifndef SLEEPNET_CORE_REGRET_LEARNER_H_
#define SLEEPNET_CORE_REGRET_LEARNER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/rng.h"

namespace sleepnet {

struct LearningRates {
  double tau_exponent = 0.6;
  double iota_exponent = 0.7;
  double epsilon_exponent = 0.8;
  double kappa = 10.0;
};

// Step sizes actually applied in one update.
struct StepSizes {
  double tau = 0.0;
  double iota = 0.0;
  double epsilon = 0.0;
};

double LearningRate(std::size_t t, double exponent);

StepSizes StepSizesAt(std::size_t t, const LearningRates& rates);

// Result of checking the step-size conditions for rates t^-c:
//   (i)   each sequence sums to infinity            (c <= 1)
//   (ii)  each sequence is square-summable          (c > 1/2)
//   (iii) iota/tau -> 0 and eps/iota -> 0           (c_tau < c_iota < c_eps)
struct RateReport {
  bool ok = true;
  std::vector<std::string> violations;
};

RateReport ValidateRateExponents(const LearningRates& rates);

// Softmax of kappa * regrets with max-subtraction; regrets are clipped to
// [-1e6, 1e6] first.
std::vector<double> BoltzmannGibbs(std::span<const double> regrets,
                                   double kappa);

// Inverse-CDF draw over the ordered strategy. Throws kStateCorruption when
// the vector is not a probability distribution within 1e-6.
std::size_t SampleAction(std::span<const double> strategy, Rng& rng);

struct LearnerState {
  std::vector<double> utility_estimates;
  std::vector<double> regret_estimates;
  std::vector<double> strategy;
  std::size_t iteration = 0;

  bool operator==(const LearnerState&) const = default;
};

// Zero estimates and a uniform strategy over n_actions.
LearnerState InitialLearnerState(std::size_t n_actions);

// Applies one step of the three recursions for the action `played` that
// earned `utility`. Throws kInput (leaving nothing modified) on a non-finite
// utility or out-of-range action.
LearnerState Update(const LearnerState& state, std::size_t played,
                    double utility, const StepSizes& steps, double kappa);

// Uses the step sizes at iteration state.iteration + 1.
LearnerState Update(const LearnerState& state, std::size_t played,
                    double utility, const LearningRates& rates);

}  // namespace sleepnet

#endif  // SLEEPNET_CORE_REGRET_LEARNER_H_
