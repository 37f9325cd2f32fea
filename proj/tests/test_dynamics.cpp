// Copyright 2026 The coinf Authors
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

#include <doctest.h>

#include <cmath>
#include <random>

#include "coinf/dynamics.hpp"
#include "fixtures.hpp"

namespace coinf {
namespace {

using testing::EndemicCoinfectionParams;
using testing::RandomParams;

const ReducedParamsd kLeft = Reduce(EndemicCoinfectionParams(2.0, 1.0));
const Thresholdsd kLeftTh = ComputeThresholds(kLeft);

TEST_CASE("primary field: equilibria and a reference value") {
  CHECK(RhsPrimary(State2d(0, 0), kLeft) == State2d(0, 0));
  const State2d e1 = RhsPrimary(State2d(*kLeftTh.s1_star, 0), kLeft);
  CHECK(std::abs(e1(idx::S)) <= 1e-12);
  CHECK(e1(idx::I) == 0.0);
  const State2d d = RhsPrimary(State2d(1, 1), kLeft);
  CHECK(d(idx::S) == doctest::Approx(24.6).epsilon(1e-14));
  CHECK(d(idx::I) == doctest::Approx(-10.325).epsilon(1e-14));
}

TEST_CASE("rescaled field: reference values") {
  const State2d at_a = RhsRescaled(State2d(*kLeftTh.a_bar_thr, 2.0), kLeftTh, kLeft);
  CHECK(at_a(idx::I) == doctest::Approx(-kLeft.c_bar_II * 4.0).epsilon(1e-14));
  const State2d at_e1 = RhsRescaled(State2d(*kLeftTh.s1_star, 0.0), kLeftTh, kLeft);
  CHECK(at_e1(idx::S) == 0.0);
  CHECK(at_e1(idx::I) == 0.0);
  const State2d d = RhsRescaled(State2d(1, 1), kLeftTh, kLeft);
  CHECK(d(idx::S) == doctest::Approx(24.6).epsilon(1e-13));
  CHECK(d(idx::I) == doctest::Approx(-10.325).epsilon(1e-13));
}

TEST_CASE("rescaled field: needs both thresholds") {
  auto p = EndemicCoinfectionParams();
  p.m = p.r;
  const auto rp = Reduce(p);
  CHECK_THROWS_AS(RhsRescaled(State2d(1, 1), ComputeThresholds(rp), rp), DomainError);
}

TEST_CASE("rescaled and expanded forms agree on random states") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<> u(0.0, 20.0);
  int checked = 0;
  while (checked < 1000) {
    const auto rp = Reduce(RandomParams(rng));
    const auto th = ComputeThresholds(rp);
    if (!th.a_bar_thr) continue;
    const State2d s(u(rng), u(rng));
    const State2d a = RhsPrimary(s, rp);
    const State2d b = RhsRescaled(s, th, rp);
    // Relative to the size of the terms that cancel.
    const double scale = rp.r * (s.sum()) + rp.c_SS * s(0) * s(0) + rp.beta_bar * s.prod() +
                         rp.c_bar_II * s(1) * s(1) + rp.removal_rate() * s(1) + 1.0;
    CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-12 * scale);
    ++checked;
  }
}

TEST_CASE("fast field") {
  CHECK(RhsFast(1.0, 0.0, 2.0, 1.0) == Eigen::Vector2d(0, 0));
  CHECK(RhsFast(0.0, 0.0, 2.0, 1.0) == Eigen::Vector2d(0, 0));
  const auto at_eq = RhsFast(0.7, 0.7, 2.0, 1.0);
  CHECK(at_eq(0) == 0.0);
  CHECK(at_eq(1) == 0.0);
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<> u(0.0, 10.0);
  for (int k = 0; k < 1000; ++k) {
    const auto d = RhsFast(u(rng), u(rng), u(rng), u(rng));
    CHECK(d(0) + d(1) == 0.0);
  }
}

TEST_CASE("complete field") {
  const auto p = EndemicCoinfectionParams(2.0, 1.0);
  CHECK(RhsComplete(State3d(0, 0, 0), p) == State3d(0, 0, 0));
  CHECK(RhsComplete(State3d(2.5, 1.3, 0), p)(idx::V) == 0.0);

  auto frozen = p;
  frozen.epsilon = 0.0;  // bypasses Validate on purpose: pure fast dynamics
  const double nu = ComputeNuStar(p.lambda, p.delta);
  const double I = 1.7;
  const State3d at_fast_eq(3.0, (1 - nu) * I, nu * I);
  CHECK(RhsComplete(at_fast_eq, frozen).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("complete field without coinfection matches the primary field") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<> u(0.0, 10.0);
  for (int k = 0; k < 200; ++k) {
    auto p = RandomParams(rng);
    p.delta = p.lambda + u(rng);
    p.epsilon = std::uniform_real_distribution<>(1e-4, 1.0)(rng);
    const double S = u(rng), U = u(rng);
    const State3d d = RhsComplete(State3d(S, U, 0.0), p);
    const State2d e = RhsPrimary(State2d(S, U), Reduce(p));
    CHECK(d(idx::S) / p.epsilon == doctest::Approx(e(idx::S)).epsilon(1e-12).scale(1.0));
    CHECK(d(idx::U) / p.epsilon == doctest::Approx(e(idx::I)).epsilon(1e-12).scale(1.0));
    CHECK(d(idx::V) == 0.0);
  }
}

TEST_CASE("slow-fast change of variables") {
  const auto sf = ToSlowFast(State3d(1, 2, 3));
  CHECK(sf.slow == State2d(1, 5));
  CHECK(sf.coinfected == 3.0);
  CHECK(FromSlowFast(ToSlowFast(State3d(0, 0, 0))) == State3d(0, 0, 0));
  CHECK_THROWS_AS(FromSlowFast(SlowFastState<double>{State2d(1, 2), 3.0}), DomainError);

  std::mt19937_64 rng(34);
  std::uniform_int_distribution<int> u(0, 1 << 20);
  for (int k = 0; k < 1000; ++k) {
    // Dyadic values keep U + V - V exact.
    const State3d s(u(rng) / 1024.0, u(rng) / 1024.0, u(rng) / 1024.0);
    CHECK(FromSlowFast(ToSlowFast(s)) == s);
  }
}

TEST_CASE("lift to the fast equilibrium") {
  const State3d s = LiftToFastEquilibrium(State2d(3.0, 2.0), 0.25);
  CHECK(s == State3d(3.0, 1.5, 0.5));
}

}  // namespace
}  // namespace coinf
