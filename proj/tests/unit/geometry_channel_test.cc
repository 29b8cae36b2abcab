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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "core/errors.h"

namespace sleepnet {
namespace {

BaseStation Bs(BsKind kind, double x, double y) {
  BaseStation s;
  s.kind = kind;
  s.pos = {x, y};
  return s;
}

Action On(double p) { return {p, 0.0, true}; }
Action Off() { return {0.0, 0.0, false}; }

bool Throws(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

TEST_CASE("path loss at reference distances") {
  const ChannelParams ch;
  CHECK(PathLossDb(BsKind::kMacro, 1000.0, ch) == doctest::Approx(128.1).epsilon(1e-12));
  CHECK(PathLossDb(BsKind::kMacro, 100.0, ch) == doctest::Approx(90.5).epsilon(1e-12));
  CHECK(PathLossDb(BsKind::kSmall, 1000.0, ch) == doctest::Approx(140.7).epsilon(1e-12));
}

TEST_CASE("path loss at one kilometre equals the intercept") {
  ChannelParams ch;
  ch.pathloss_mbs = {100.0, 20.0, 1.0};
  ch.pathloss_sbs = {77.7, 31.0, 1.0};
  CHECK(PathLossDb(BsKind::kMacro, 1000.0, ch) == 100.0);
  CHECK(PathLossDb(BsKind::kSmall, 1000.0, ch) == 77.7);
}

TEST_CASE("path loss clamps short distances and rejects non-positive ones") {
  const ChannelParams ch;
  CHECK(PathLossDb(BsKind::kMacro, 1.0, ch) == PathLossDb(BsKind::kMacro, 35.0, ch));
  CHECK(PathLossDb(BsKind::kSmall, 2.0, ch) == PathLossDb(BsKind::kSmall, 10.0, ch));
  CHECK(PathLossDb(BsKind::kSmall, 11.0, ch) > PathLossDb(BsKind::kSmall, 10.0, ch));
  CHECK(Throws(ErrorKind::kInput, [&] { PathLossDb(BsKind::kMacro, 0.0, ch); }));
  CHECK(Throws(ErrorKind::kInput, [&] { PathLossDb(BsKind::kMacro, -5.0, ch); }));
}

TEST_CASE("channel gain") {
  ChannelParams ch;
  // 90 dB at 1 km with a flat slope.
  ch.pathloss_mbs = {90.0, 37.6, 35.0};
  CHECK(ChannelGain(BsKind::kMacro, {0, 0}, {1000, 0}, ch) ==
        doctest::Approx(1e-9).epsilon(1e-12));
  const ChannelParams def;
  CHECK(ChannelGain(BsKind::kMacro, {0, 0}, {0, 1000}, def) ==
        doctest::Approx(1.549e-13).epsilon(1e-3));
  // Coincident positions use the clamped minimum distance.
  CHECK(ChannelGain(BsKind::kSmall, {5, 5}, {5, 5}, def) ==
        ChannelGain(BsKind::kSmall, {0, 0}, {10, 0}, def));
}

TEST_CASE("channel gain is in (0, 1) and non-increasing in distance") {
  const ChannelParams ch;
  for (BsKind kind : {BsKind::kMacro, BsKind::kSmall}) {
    double prev = 1.0;
    for (double d = 1.0; d < 5000.0; d *= 1.05) {
      const double g = ChannelGain(kind, {0, 0}, {d, 0}, ch);
      CHECK(g > 0.0);
      CHECK(g < 1.0);
      CHECK(g <= prev);
      prev = g;
    }
  }
}

TEST_CASE("noise power") {
  ChannelParams ch;
  CHECK(NoisePowerW(ch) == doctest::Approx(3.981e-14).epsilon(1e-3));
  CHECK(WToDbm(NoisePowerW(ch)) == doctest::Approx(-104.0).epsilon(1e-12));
  ch.bandwidth_hz = 1.0;
  CHECK(NoisePowerW(ch) == doctest::Approx(3.981e-21).epsilon(1e-3));
  ch.noise_density_dbm_per_hz = 0.0;
  CHECK(NoisePowerW(ch) == doctest::Approx(1e-3).epsilon(1e-12));
}

TEST_CASE("dBm and watt conversions round-trip") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> dbm(-150.0, 60.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = dbm(gen);
    CHECK(std::abs(WToDbm(DbmToW(x)) - x) <= 1e-12 * std::abs(x));
    const double w = DbmToW(x);
    CHECK(std::abs(DbmToW(WToDbm(w)) - w) <= 1e-12 * w);
  }
  CHECK(DbmToW(30.0) == doctest::Approx(1.0));
  CHECK(DbmToW(46.0) == doctest::Approx(39.81071705534972));
}

TEST_CASE("sinr examples") {
  ChannelParams ch;
  const double noise = NoisePowerW(ch);
  std::vector<BaseStation> bss{Bs(BsKind::kMacro, 0, 0)};
  const double g = ChannelGain(BsKind::kMacro, {0, 0}, {300, 0}, ch);
  // P * h = 4 N0 with a single station.
  std::vector<Action> act{On(4.0 * noise / g)};
  CHECK(Sinr(0, {300, 0}, act, bss, ch) == doctest::Approx(4.0).epsilon(1e-12));

  // Two stations with equal received power far above the noise.
  bss = {Bs(BsKind::kMacro, -50, 0), Bs(BsKind::kMacro, 50, 0)};
  act = {On(40.0), On(40.0)};
  CHECK(Sinr(0, {0, 0}, act, bss, ch) == doctest::Approx(1.0).epsilon(1e-6));

  act = {Off(), On(40.0)};
  CHECK(Throws(ErrorKind::kDomain, [&] { Sinr(0, {0, 0}, act, bss, ch); }));
}

TEST_CASE("rate examples") {
  const ChannelParams ch;
  CHECK(RateBps(1.0, ch) == doctest::Approx(1e7).epsilon(1e-15));
  CHECK(RateBps(3.0, ch) == doctest::Approx(2e7).epsilon(1e-15));
  CHECK(RateBps(0.0, ch) == 0.0);
  CHECK(Throws(ErrorKind::kInput, [&] { RateBps(-0.1, ch); }));
}

TEST_CASE("sinr increases with serving power and sleeping interferers never hurt") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> pos(-500.0, 500.0);
  std::uniform_real_distribution<double> pw(0.01, 40.0);
  const ChannelParams ch;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BaseStation> bss{Bs(BsKind::kMacro, 0, 0)};
    for (int i = 0; i < 4; ++i) bss.push_back(Bs(BsKind::kSmall, pos(gen), pos(gen)));
    std::vector<Action> act;
    for (std::size_t b = 0; b < bss.size(); ++b) act.push_back(On(pw(gen)));
    const Position ue{pos(gen), pos(gen)};
    const double base = Sinr(0, ue, act, bss, ch);
    std::vector<Action> louder = act;
    louder[0].transmit_power_w *= 1.5;
    CHECK(Sinr(0, ue, louder, bss, ch) > base);
    for (std::size_t off = 1; off < bss.size(); ++off) {
      std::vector<Action> quiet = act;
      quiet[off] = Off();
      CHECK(Sinr(0, ue, quiet, bss, ch) >= base);
    }
    CHECK(RateBps(base * 1.01, ch) > RateBps(base, ch));
  }
}

TEST_CASE("channel parameter validation") {
  ChannelParams ch;
  CHECK_NOTHROW(Validate(ch));
  ch.bandwidth_hz = 0.0;
  CHECK_THROWS_AS(Validate(ch), Error);
  ch = ChannelParams{};
  ch.pathloss_sbs.slope_db_per_decade = 0.0;
  CHECK_THROWS_AS(Validate(ch), Error);
}

}  // namespace
}  // namespace sleepnet
