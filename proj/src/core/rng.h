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

#ifndef SLEEPNET_CORE_RNG_H_
#define SLEEPNET_CORE_RNG_H_

#include <cstdint>
#include <random>

namespace sleepnet {

// Named sub-streams derived from one run seed. Every consumer of randomness
// draws from its own stream so that adding draws in one place never shifts
// another place's sequence.
enum class StreamId : std::uint64_t {
  kSbsPlacement = 1,
  kUePlacement = 2,
  kUeTraffic = 3,
  kEnvironment = 4,
  kSchedule = 5,
  kBaseStation = 1000,  // + station index
};

// Seeded pseudo-random stream. Uniform draws are built directly from the
// 64-bit engine output, so sequences are identical across standard libraries
// (std::uniform_real_distribution is implementation-defined).
class Rng {
 public:
  Rng() : Rng(0) {}
  explicit Rng(std::uint64_t seed) : engine_(SplitMix(seed)) {}

  static Rng Derive(std::uint64_t seed, StreamId stream, std::uint64_t sub = 0);

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t Below(std::uint64_t n);

  // Exponential with the given mean, by inversion.
  double Exponential(double mean);

  static std::uint64_t SplitMix(std::uint64_t x);

  bool operator==(const Rng& other) const = default;

 private:
  std::mt19937_64 engine_;
};

}  // namespace sleepnet

#endif  // SLEEPNET_CORE_RNG_H_
