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

// Parameter sets and random generators shared by the unit and acceptance
// suites.

#ifndef COINF_TESTS_FIXTURES_HPP_
#define COINF_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "coinf/dynamics.hpp"
#include "coinf/equilibria.hpp"
#include "coinf/integrator.hpp"
#include "coinf/params.hpp"

namespace coinf::testing {

/// Endemic coinfection for lambda = 2, delta = 1; the reference set of the
/// outcome map with the opportunistic rates given.
inline FullParamsd EndemicCoinfectionParams(double lambda = 2.0, double delta = 1.0) {
  FullParamsd p;
  p.a_U = 0.9;
  p.a_V = 0.7;
  p.r = 26;
  p.m = 12;
  p.mu_U = 0.3;
  p.mu_V = 0.5;
  p.c_SS = 3.8;
  p.c_SU = 0.5;
  p.c_SV = 0.5;
  p.c_US = 2.6;
  p.c_UU = 0.1;
  p.c_UV = 1;
  p.c_VS = 0.5;
  p.c_VU = 4;
  p.c_VV = 4;
  p.beta_U = 4;
  p.beta_V = 8;
  p.gamma = 0.2;
  p.lambda = lambda;
  p.delta = delta;
  p.epsilon = 1e-3;
  return p;
}

/// The reference set with m = 17, c_SS = 2.8, beta_V = 4: disease-free for
/// every (lambda, delta).
inline FullParamsd DiseaseFreeParams(double lambda = 2.0, double delta = 1.0) {
  FullParamsd p = EndemicCoinfectionParams(lambda, delta);
  p.m = 17;
  p.c_SS = 2.8;
  p.beta_V = 4;
  return p;
}

/// Uniform draw over a broad admissible box. r > m unless `extinct`.
inline FullParamsd RandomParams(std::mt19937_64& rng, bool extinct = false) {
  auto u = [&rng](double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng); };
  FullParamsd p;
  p.r = u(1, 30);
  p.m = extinct ? p.r * u(1.0, 2.0) : p.r * u(0.1, 0.9);
  p.a_U = u(0.2, 0.95);
  p.a_V = p.a_U * u(0.05, 0.99);
  p.mu_U = u(0, 2);
  p.mu_V = u(0, 2);
  p.gamma = u(0, 2);
  p.beta_U = u(0.5, 6);
  p.beta_V = u(0.5, 6);
  p.c_SS = u(1, 20);
  for (auto member : {&FullParamsd::c_SU, &FullParamsd::c_SV, &FullParamsd::c_US,
                      &FullParamsd::c_UU, &FullParamsd::c_UV, &FullParamsd::c_VS,
                      &FullParamsd::c_VU, &FullParamsd::c_VV}) {
    p.*member = u(0.05, 3);
  }
  p.lambda = u(0.1, 10);
  p.delta = u(0, 10);
  p.epsilon = 1e-3;
  return p;
}

/// True when r > m, beta_bar > c_bar_IS and S1* < A-bar < B-bar.
inline bool InTwoThresholdRegime(const Thresholdsd& th) {
  return th.s1_star && th.a_bar_thr && *th.s1_star < *th.a_bar_thr &&
         *th.a_bar_thr < th.b_bar_thr;
}

/// Rejection sampling of parameter sets in the two-threshold regime.
inline FullParamsd RandomTwoThresholdParams(std::mt19937_64& rng) {
  for (;;) {
    FullParamsd p = RandomParams(rng);
    const auto th = ComputeThresholds(Reduce(p));
    if (InTwoThresholdRegime(th) && th.r_script) return p;
  }
}

/// Base set for the bistability search; the opportunistic disease is absent
/// (delta > lambda), so the reduced system is the primary submodel.
inline FullParamsd BistableSearchBase() {
  FullParamsd p;
  p.r = 29.9;
  p.m = 3.6;
  p.a_U = 0.9;
  p.a_V = 0.3;
  p.mu_U = 0.3;
  p.mu_V = 1;
  p.gamma = 0.4;
  p.beta_U = 2.1;
  p.beta_V = 1.3;
  p.c_SS = 17.6;
  p.c_SU = 0.3;
  p.c_SV = 1.3;
  p.c_US = 0.6;
  p.c_UU = 0.1;
  p.c_UV = 2.5;
  p.c_VS = 1.3;
  p.c_VU = 0.1;
  p.c_VV = 0.2;
  p.lambda = 1;
  p.delta = 2;
  p.epsilon = 1e-3;
  return p;
}

/// Grid search over (c_SS, beta_U) for a set classified Bistable, scored by
/// the smallest of R - 1 and the relative gaps S1* < A-bar < S+1 < S+2 < B-bar.
inline std::optional<FullParamsd> FindBistableParams() {
  std::optional<FullParamsd> best;
  double best_score = 0.0;
  for (int a = 0; a <= 50; ++a) {
    for (int b = 0; b <= 50; ++b) {
      FullParamsd p = BistableSearchBase();
      p.c_SS = 10.0 + 0.8 * a;
      p.beta_U = 1.5 + 0.04 * b;
      const auto sc = Classify(p);
      if (sc.label != ScenarioLabel::kBistable) continue;
      const auto& th = sc.thresholds;
      const auto in = sc.interior();
      const double s1 = *th.s1_star;
      const double abar = *th.a_bar_thr;
      const double lo = in[0].location(idx::S);
      const double hi = in[1].location(idx::S);
      const double score =
          std::min({*th.r_script - 1.0, (abar - s1) / abar, (lo - abar) / abar, (hi - lo) / hi,
                    (th.b_bar_thr - hi) / th.b_bar_thr});
      if (score > best_score) {
        best_score = score;
        best = p;
      }
    }
  }
  return best;
}

/// Roots of Phi - Psi in (lo, hi): sign changes on an n-point grid refined
/// by bisection. The interval must not contain the pole at B-bar.
inline std::vector<double> BisectNullclineCrossings(const Thresholdsd& th,
                                                    const ReducedParamsd& rp, double lo,
                                                    double hi, int n = 10000) {
  std::vector<double> roots;
  if (!(hi > lo)) return roots;
  auto g = [&](double S) { return NullclinePhi(S, th, rp) - NullclinePsi(S, th, rp); };
  double x0 = lo;
  double g0 = g(x0);
  for (int k = 1; k <= n; ++k) {
    const double x1 = lo + (hi - lo) * k / n;
    const double g1 = g(x1);
    if ((g0 < 0) != (g1 < 0)) {
      double a = x0, c = x1, ga = g0;
      for (int it = 0; it < 200 && c - a > 1e-15 * c; ++it) {
        const double mid = 0.5 * (a + c);
        const double gm = g(mid);
        if ((gm < 0) == (ga < 0)) {
          a = mid;
          ga = gm;
        } else {
          c = mid;
        }
      }
      roots.push_back(0.5 * (a + c));
    }
    x0 = x1;
    g0 = g1;
  }
  return roots;
}

/// Crossings in the open quadrant: Phi > 0 strictly between S1* and B-bar,
/// Psi > 0 above A-bar.
inline std::vector<double> BisectInteriorCrossings(const Thresholdsd& th,
                                                   const ReducedParamsd& rp, int n = 10000) {
  if (!th.s1_star || !th.a_bar_thr) return {};
  const double s1 = *th.s1_star;
  const double b = th.b_bar_thr;
  double lo = std::max(std::min(s1, b), *th.a_bar_thr);
  double hi = std::max(s1, b);
  if (b > s1) {
    hi = b * (1.0 - 1e-9);
  } else {
    lo = std::max(lo, b * (1.0 + 1e-9));
  }
  return BisectNullclineCrossings(th, rp, lo, hi, n);
}

/// Crossings anywhere on S > 0, including those with negative I. Both roots
/// of the quadratic are below middle / lead.
inline std::vector<double> BisectAllCrossings(const Thresholdsd& th, const ReducedParamsd& rp,
                                              int n = 10000) {
  const auto quad = MakeInteriorQuadratic(rp);
  const double b = th.b_bar_thr;
  const double s_max = 2.0 * std::max(quad.middle / quad.lead, b);
  auto roots = BisectNullclineCrossings(th, rp, 1e-12 * b, b * (1.0 - 1e-9), n);
  const auto upper = BisectNullclineCrossings(th, rp, b * (1.0 + 1e-9), s_max, n);
  roots.insert(roots.end(), upper.begin(), upper.end());
  return roots;
}

/// Number of distinct real roots of the interior-equilibrium quadratic.
inline std::size_t QuadraticRealRootCount(const ReducedParamsd& rp) {
  const auto q = MakeInteriorQuadratic(rp);
  const double disc = q.middle * q.middle - 4.0 * q.lead * q.constant;
  if (disc > 0.0) return 2;
  return disc == 0.0 ? 1 : 0;
}

/// Central-difference Jacobian of the reduced field, h = 1e-6 (1 + |x|).
inline Eigen::Matrix2d FiniteDifferenceJacobian(const State2d& at, const ReducedParamsd& rp) {
  Eigen::Matrix2d J;
  for (int j = 0; j < 2; ++j) {
    const double h = 1e-6 * (1.0 + std::abs(at(j)));
    State2d up = at;
    State2d down = at;
    up(j) += h;
    down(j) -= h;
    J.col(j) = (RhsPrimary(up, rp) - RhsPrimary(down, rp)) / (2.0 * h);
  }
  return J;
}

/// Largest entrywise deviation relative to the largest entry.
inline double RelativeJacobianError(const Eigen::Matrix2d& analytic,
                                    const Eigen::Matrix2d& numeric) {
  return (analytic - numeric).cwiseAbs().maxCoeff() /
         std::max(1.0, analytic.cwiseAbs().maxCoeff());
}

/// Integrates the reduced field from y0 until it settles (or t = horizon).
inline Trajectory<State2d> SettleReduced(const ReducedParamsd& rp, const State2d& y0,
                                         double horizon = 1e5) {
  IntegratorOptions opts;
  // Tight enough that tolerance-level noise near a stiff equilibrium stays
  // below the steady-state threshold.
  opts.tol = {1e-12, 1e-14};
  opts.stop_at_steady_state = true;
  return Integrate([&rp](double, const State2d& y) { return RhsPrimary(y, rp); }, y0, 0.0,
                   horizon, opts);
}

}  // namespace coinf::testing

#endif  // COINF_TESTS_FIXTURES_HPP_
