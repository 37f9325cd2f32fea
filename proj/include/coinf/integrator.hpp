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

#ifndef COINF_INTEGRATOR_HPP_
#define COINF_INTEGRATOR_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <fmt/format.h>

#include "coinf/errors.hpp"

namespace coinf {

struct Tolerances {
  double rel = 1e-8;
  double abs = 1e-10;
};

struct IntegratorOptions {
  Tolerances tol;
  /// Output times, strictly increasing inside [t0, t1]. Empty: record the
  /// initial point and every accepted step.
  std::vector<double> sample_times;
  /// Clamp slightly negative components to zero after each step; clearly
  /// negative components raise IntegrationError.
  bool clamp_nonnegative = true;
  /// Stop once ||f(y)|| < steady_tol * (1 + ||y||) for steady_steps
  /// consecutive accepted steps.
  bool stop_at_steady_state = false;
  double steady_tol = 1e-9;
  int steady_steps = 10;
  long max_steps = 20'000'000;
  double initial_step = 0.0;  ///< 0 selects a starting step automatically
  double max_step = std::numeric_limits<double>::infinity();
};

struct IntegrationStats {
  long accepted = 0;
  long rejected = 0;
  long rhs_evals = 0;
  bool steady_state = false;  ///< stopped early by steady-state detection
  double t_final = 0.0;
};

/// Time-stamped states produced by Integrate. Read-only once built.
template <typename Vector>
class Trajectory {
 public:
  using Scalar = typename Vector::Scalar;

  Trajectory(std::vector<Scalar> times, std::vector<Vector> states, IntegrationStats stats)
      : times_(std::move(times)), states_(std::move(states)), stats_(stats) {}

  const std::vector<Scalar>& times() const { return times_; }
  const std::vector<Vector>& states() const { return states_; }
  const IntegrationStats& stats() const { return stats_; }
  std::size_t size() const { return times_.size(); }
  const Vector& back() const { return states_.back(); }

 private:
  std::vector<Scalar> times_;
  std::vector<Vector> states_;
  IntegrationStats stats_;
};

namespace detail {

// Dormand-Prince 5(4) tableau with Hairer's dense-output coefficients.
struct Dopri5 {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                          a75 = -2187.0 / 6784, a76 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  static constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                          d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                          d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;
};

template <typename Vector>
typename Vector::Scalar ScaledRmsNorm(const Vector& v, const Vector& scale) {
  using std::sqrt;
  const auto n = static_cast<typename Vector::Scalar>(v.size());
  return sqrt((v.array() / scale.array()).square().sum() / n);
}

}  // namespace detail

/// Adaptive explicit Runge-Kutta (Dormand-Prince 5(4)) solution of
/// y' = f(t, y) on [t0, t1], t1 > t0.
///
/// `Vector` is a fixed- or dynamic-size Eigen column vector; `f` is callable
/// as `Vector f(Scalar t, const Vector& y)`. The local error per step is
/// bounded by the mixed tolerance abs + rel * |y| in RMS norm. Requested
/// sample times are served from the 4th-order continuous extension.
/// Throws StiffnessError on step-size underflow.
template <typename Vector, typename Field>
Trajectory<Vector> Integrate(Field&& f, const Vector& y0, typename Vector::Scalar t0,
                             typename Vector::Scalar t1, const IntegratorOptions& opts = {}) {
  using Scalar = typename Vector::Scalar;
  using std::abs;
  using std::max;
  using std::min;
  using std::pow;
  using K = detail::Dopri5;

  if (!(opts.tol.rel > 0) || !(opts.tol.abs > 0)) {
    throw std::invalid_argument("integration tolerances must be positive");
  }
  if (!(t1 > t0)) throw std::invalid_argument("integration interval must satisfy t1 > t0");
  for (std::size_t i = 0; i < opts.sample_times.size(); ++i) {
    const double ts = opts.sample_times[i];
    if (ts < t0 || ts > t1 || (i > 0 && !(ts > opts.sample_times[i - 1]))) {
      throw std::invalid_argument("sample times must increase strictly within [t0, t1]");
    }
  }

  const Scalar rtol = Scalar(opts.tol.rel);
  const Scalar atol = Scalar(opts.tol.abs);
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Eigen::Index n = y0.size();

  IntegrationStats stats;
  std::vector<Scalar> times;
  std::vector<Vector> states;

  auto scale_of = [&](const Vector& a, const Vector& b) -> Vector {
    return (atol + rtol * a.array().abs().max(b.array().abs())).matrix();
  };
  auto eval = [&](Scalar t, const Vector& y) -> Vector {
    ++stats.rhs_evals;
    return f(t, y);
  };
  // Returns true if y was modified.
  auto clamp = [&](Vector& y, const Vector& reference, Scalar t) -> bool {
    if (!opts.clamp_nonnegative) return false;
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (y(i) >= Scalar(0)) continue;
      const Scalar slack = Scalar(100) * (atol + rtol * max(abs(y(i)), abs(reference(i))));
      if (y(i) < -slack) {
        throw IntegrationError(
            fmt::format("state component {} became negative ({:.6g}) at t = {:.17g}", i,
                        static_cast<double>(y(i)), static_cast<double>(t)),
            static_cast<double>(t));
      }
      y(i) = Scalar(0);
      changed = true;
    }
    return changed;
  };

  Vector y = y0;
  clamp(y, y0, t0);
  Scalar t = t0;
  Vector k1 = eval(t, y);

  const bool record_steps = opts.sample_times.empty();
  std::size_t next_sample = 0;
  if (record_steps) {
    times.push_back(t);
    states.push_back(y);
  } else {
    while (next_sample < opts.sample_times.size() && Scalar(opts.sample_times[next_sample]) == t0) {
      times.push_back(t0);
      states.push_back(y);
      ++next_sample;
    }
  }

  const Scalar max_step = min(Scalar(opts.max_step), t1 - t0);
  Scalar h = Scalar(opts.initial_step);
  if (!(h > 0)) {
    const Vector sc = scale_of(y, y);
    const Scalar d0 = detail::ScaledRmsNorm(y, sc);
    const Scalar d1 = detail::ScaledRmsNorm(k1, sc);
    Scalar h0 = (d0 < Scalar(1e-5) || d1 < Scalar(1e-5)) ? Scalar(1e-6) : Scalar(0.01) * d0 / d1;
    h0 = min(h0, max_step);
    const Vector y1 = y + h0 * k1;
    const Vector f1 = eval(t + h0, y1);
    const Scalar d2 = detail::ScaledRmsNorm(Vector(f1 - k1), sc) / h0;
    const Scalar dmax = max(d1, d2);
    const Scalar h1 = dmax <= Scalar(1e-15) ? max(Scalar(1e-6), h0 * Scalar(1e-3))
                                             : pow(Scalar(0.01) / dmax, Scalar(0.2));
    h = min(Scalar(100) * h0, h1);
  }
  h = min(h, max_step);

  int steady_count = 0;
  bool last_rejected = false;

  while (t < t1) {
    if (stats.accepted + stats.rejected >= opts.max_steps) {
      throw IntegrationError(
          fmt::format("step budget of {} exhausted at t = {:.17g}", opts.max_steps,
                      static_cast<double>(t)),
          static_cast<double>(t));
    }
    if (h < Scalar(16) * eps * max(abs(t), Scalar(1e-300))) {
      throw StiffnessError(fmt::format("step size underflow at t = {:.17g}; the problem is "
                                       "too stiff for the explicit integrator",
                                       static_cast<double>(t)),
                           static_cast<double>(t));
    }
    bool final_step = false;
    if (t + h >= t1) {
      h = t1 - t;
      final_step = true;
    }

    const Vector k2 = eval(t + K::c2 * h, y + h * (K::a21 * k1));
    const Vector k3 = eval(t + K::c3 * h, y + h * (K::a31 * k1 + K::a32 * k2));
    const Vector k4 = eval(t + K::c4 * h, y + h * (K::a41 * k1 + K::a42 * k2 + K::a43 * k3));
    const Vector k5 =
        eval(t + K::c5 * h, y + h * (K::a51 * k1 + K::a52 * k2 + K::a53 * k3 + K::a54 * k4));
    const Vector k6 = eval(t + h, y + h * (K::a61 * k1 + K::a62 * k2 + K::a63 * k3 +
                                          K::a64 * k4 + K::a65 * k5));
    Vector y_new =
        y + h * (K::a71 * k1 + K::a73 * k3 + K::a74 * k4 + K::a75 * k5 + K::a76 * k6);
    const Scalar t_new = final_step ? t1 : t + h;
    Vector k7 = eval(t_new, y_new);

    const Vector err_vec =
        h * (K::e1 * k1 + K::e3 * k3 + K::e4 * k4 + K::e5 * k5 + K::e6 * k6 + K::e7 * k7);
    const Scalar err = detail::ScaledRmsNorm(err_vec, scale_of(y, y_new));

    if (!(err <= Scalar(1))) {
      ++stats.rejected;
      const Scalar factor =
          std::isfinite(static_cast<double>(err))
              ? max(Scalar(0.2), Scalar(0.9) * pow(err, Scalar(-0.2)))
              : Scalar(0.2);
      h *= factor;
      last_rejected = true;
      continue;
    }

    ++stats.accepted;
    // Continuous extension on [t, t_new] from the unclamped step.
    if (!record_steps) {
      const Vector ydiff = y_new - y;
      const Vector bspl = h * k1 - ydiff;
      const Vector r4 = ydiff - h * k7 - bspl;
      const Vector r5 =
          h * (K::d1 * k1 + K::d3 * k3 + K::d4 * k4 + K::d5 * k5 + K::d6 * k6 + K::d7 * k7);
      while (next_sample < opts.sample_times.size() &&
             Scalar(opts.sample_times[next_sample]) <= t_new) {
        const Scalar ts = Scalar(opts.sample_times[next_sample]);
        const Scalar theta = (ts - t) / h;
        const Scalar theta1 = Scalar(1) - theta;
        Vector ys = y + theta * (ydiff + theta1 * (bspl + theta * (r4 + theta1 * r5)));
        clamp(ys, y, ts);
        times.push_back(ts);
        states.push_back(std::move(ys));
        ++next_sample;
      }
    }

    if (clamp(y_new, y, t_new)) k7 = eval(t_new, y_new);
    y = y_new;
    k1 = k7;
    t = t_new;
    if (record_steps) {
      times.push_back(t);
      states.push_back(y);
    }

    if (opts.stop_at_steady_state) {
      if (k1.norm() < Scalar(opts.steady_tol) * (Scalar(1) + y.norm())) {
        if (++steady_count >= opts.steady_steps) {
          stats.steady_state = true;
          break;
        }
      } else {
        steady_count = 0;
      }
    }

    Scalar factor = Scalar(0.9) * pow(max(err, Scalar(1e-10)), Scalar(-0.2));
    factor = min(last_rejected ? Scalar(1) : Scalar(10), max(Scalar(0.2), factor));
    h = min(h * factor, max_step);
    last_rejected = false;
  }

  if (!record_steps && stats.steady_state && (times.empty() || times.back() < t)) {
    times.push_back(t);
    states.push_back(y);
  }
  stats.t_final = static_cast<double>(t);
  return Trajectory<Vector>(std::move(times), std::move(states), stats);
}

}  // namespace coinf

#endif  // COINF_INTEGRATOR_HPP_
