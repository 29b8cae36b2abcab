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

#include "core/regret_learner.h"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "core/errors.h"

namespace sleepnet {
namespace {

constexpr double kRegretClip = 1e6;

}  // namespace

double LearningRate(std::size_t t, double exponent) {
  if (t == 0) Fail(ErrorKind::kDomain, "learning rate: t must be >= 1");
  return std::pow(static_cast<double>(t), -exponent);
}

StepSizes StepSizesAt(std::size_t t, const LearningRates& rates) {
  return {LearningRate(t, rates.tau_exponent),
          LearningRate(t, rates.iota_exponent),
          LearningRate(t, rates.epsilon_exponent)};
}

RateReport ValidateRateExponents(const LearningRates& rates) {
  RateReport report;
  auto violate = [&](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };
  const struct {
    const char* name;
    double c;
  } seqs[] = {{"tau", rates.tau_exponent},
              {"iota", rates.iota_exponent},
              {"epsilon", rates.epsilon_exponent}};
  for (const auto& s : seqs) {
    if (!(s.c <= 1.0)) {
      violate(fmt::format(
          "condition (i): sum of {} = t^-{} is finite (exponent must be <= 1)",
          s.name, s.c));
    }
    if (!(s.c > 0.5)) {
      violate(fmt::format(
          "condition (ii): sum of {}^2 = t^-{} diverges (exponent must be > "
          "0.5)",
          s.name, 2.0 * s.c));
    }
  }
  if (!(rates.tau_exponent < rates.iota_exponent)) {
    violate(fmt::format(
        "condition (iii): iota/tau does not vanish (need tau exponent {} < "
        "iota exponent {})",
        rates.tau_exponent, rates.iota_exponent));
  }
  if (!(rates.iota_exponent < rates.epsilon_exponent)) {
    violate(fmt::format(
        "condition (iii): epsilon/iota does not vanish (need iota exponent {} "
        "< epsilon exponent {})",
        rates.iota_exponent, rates.epsilon_exponent));
  }
  if (!(rates.kappa > 0.0)) {
    violate(fmt::format("kappa = {} must be positive", rates.kappa));
  }
  return report;
}

std::vector<double> BoltzmannGibbs(std::span<const double> regrets,
                                   double kappa) {
  std::vector<double> out(regrets.size());
  if (regrets.empty()) return out;
  double max_scaled = -INFINITY;
  for (std::size_t i = 0; i < regrets.size(); ++i) {
    out[i] = kappa * std::clamp(regrets[i], -kRegretClip, kRegretClip);
    max_scaled = std::max(max_scaled, out[i]);
  }
  double total = 0.0;
  for (double& v : out) {
    v = std::exp(v - max_scaled);
    total += v;
  }
  for (double& v : out) v /= total;
  return out;
}

std::size_t SampleAction(std::span<const double> strategy, Rng& rng) {
  double total = 0.0;
  for (double p : strategy) {
    if (!(p >= 0.0)) {
      Fail(ErrorKind::kStateCorruption, "sample_action: negative probability");
    }
    total += p;
  }
  if (strategy.empty() || std::abs(total - 1.0) > 1e-6) {
    Fail(ErrorKind::kStateCorruption,
         fmt::format("sample_action: strategy sums to {}", total));
  }
  const double u = rng.Uniform01();
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < strategy.size(); ++i) {
    if (strategy[i] <= 0.0) continue;
    cumulative += strategy[i];
    last_positive = i;
    if (u < cumulative) return i;
  }
  return last_positive;
}

LearnerState InitialLearnerState(std::size_t n_actions) {
  LearnerState state;
  state.utility_estimates.assign(n_actions, 0.0);
  state.regret_estimates.assign(n_actions, 0.0);
  state.strategy.assign(n_actions, 1.0 / static_cast<double>(n_actions));
  return state;
}

LearnerState Update(const LearnerState& state, std::size_t played,
                    double utility, const StepSizes& steps, double kappa) {
  const std::size_t n = state.strategy.size();
  if (played >= n) {
    Fail(ErrorKind::kInput,
         fmt::format("learner update: action {} out of range", played));
  }
  if (!std::isfinite(utility)) {
    Fail(ErrorKind::kInput, "learner update: non-finite utility");
  }
  const std::vector<double> target =
      BoltzmannGibbs(state.regret_estimates, kappa);
  LearnerState next = state;
  for (std::size_t i = 0; i < n; ++i) {
    const double u_hat = state.utility_estimates[i];
    const double r_hat = state.regret_estimates[i];
    if (i == played) {
      next.utility_estimates[i] = u_hat + steps.tau * (utility - u_hat);
    }
    next.regret_estimates[i] = r_hat + steps.iota * (u_hat - utility - r_hat);
    next.strategy[i] =
        state.strategy[i] + steps.epsilon * (target[i] - state.strategy[i]);
  }
  ++next.iteration;
  return next;
}

LearnerState Update(const LearnerState& state, std::size_t played,
                    double utility, const LearningRates& rates) {
  return Update(state, played, utility, StepSizesAt(state.iteration + 1, rates),
                rates.kappa);
}

}  // namespace sleepnet
