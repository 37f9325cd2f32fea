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

#ifndef COINF_EQUILIBRIA_HPP_
#define COINF_EQUILIBRIA_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "coinf/dynamics.hpp"
#include "coinf/errors.hpp"
#include "coinf/params.hpp"

namespace coinf {

/// |R - 1| at or below this is the tangent (double-root) case.
inline constexpr double kTangentTolerance = 1e-10;
/// Threshold equalities (S1* vs A-bar, A-bar vs B-bar) closer than this,
/// relative, are classified as boundary cases.
inline constexpr double kBoundaryRelTolerance = 1e-12;
/// Eigenvalue real parts below this fraction of the spectral scale count as 0.
inline constexpr double kHyperbolicRelTolerance = 1e-12;

enum class EquilibriumKind { kOrigin, kDiseaseFree, kInterior };
enum class Stability { kStable, kSaddle, kUnstable, kNonhyperbolic };

template <typename Scalar>
struct Equilibrium {
  State2<Scalar> location = State2<Scalar>::Zero();
  EquilibriumKind kind = EquilibriumKind::kOrigin;
  Stability stability = Stability::kNonhyperbolic;
  std::array<std::complex<Scalar>, 2> eigenvalues{};  ///< ascending real part
};

using Equilibriumd = Equilibrium<double>;

std::string_view ToString(EquilibriumKind kind);
std::string_view ToString(Stability stability);

inline bool NearlyEqual(double a, double b, double rel = kBoundaryRelTolerance) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

/// S-nullcline I = Phi(S) of the reduced system. Needs S1*; throws
/// DomainError at the pole S = B-bar.
template <typename Scalar>
Scalar NullclinePhi(Scalar S, const Thresholds<Scalar>& th, const ReducedParams<Scalar>& rp) {
  if (!th.s1_star) throw DomainError("S-nullcline needs r > m");
  if (S == th.b_bar_thr) throw DomainError("S-nullcline has a pole at S = B-bar");
  return rp.c_SS / rp.susceptible_coupling() * S * (*th.s1_star - S) / (S - th.b_bar_thr);
}

/// True when S1* = B-bar: inside the positive quadrant the S-nullcline is
/// then the vertical line S = B-bar instead of the graph of Phi.
template <typename Scalar>
bool SNullclineIsVertical(const Thresholds<Scalar>& th) {
  return th.s1_star && NearlyEqual(static_cast<double>(*th.s1_star),
                                   static_cast<double>(th.b_bar_thr));
}

/// I-nullcline I = Psi(S), the line through (A-bar, 0).
template <typename Scalar>
Scalar NullclinePsi(Scalar S, const Thresholds<Scalar>& th, const ReducedParams<Scalar>& rp) {
  if (!th.a_bar_thr) throw DomainError("I-nullcline needs beta_bar > c_bar_IS");
  return th.invasion_margin / rp.c_bar_II * (S - *th.a_bar_thr);
}

/// lead * S^2 - middle * S + constant = 0 at nullcline intersections.
template <typename Scalar>
struct InteriorQuadratic {
  Scalar lead{};
  Scalar middle{};
  Scalar constant{};
};

template <typename Scalar>
InteriorQuadratic<Scalar> MakeInteriorQuadratic(const ReducedParams<Scalar>& rp) {
  const Scalar margin = rp.invasion_margin();
  return {rp.c_SS * rp.c_bar_II + rp.susceptible_coupling() * margin,
          rp.c_bar_II * (rp.r - rp.m) + rp.infected_inflow() * margin +
              rp.susceptible_coupling() * rp.removal_rate(),
          rp.infected_inflow() * rp.removal_rate()};
}

/// Exact Jacobian of the planar vector field at `at`.
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> Jacobian(const State2<Scalar>& at, const ReducedParams<Scalar>& rp) {
  const Scalar S = at(idx::S);
  const Scalar I = at(idx::I);
  const Scalar margin = rp.invasion_margin();
  Eigen::Matrix<Scalar, 2, 2> J;
  J(0, 0) = (rp.r - rp.m) - Scalar(2) * rp.c_SS * S - rp.susceptible_coupling() * I;
  J(0, 1) = rp.infected_inflow() - rp.susceptible_coupling() * S;
  J(1, 0) = margin * I;
  J(1, 1) = -rp.removal_rate() + margin * S - Scalar(2) * rp.c_bar_II * I;
  return J;
}

/// Eigenvalues of a real 2x2 matrix from its characteristic polynomial,
/// sorted by ascending real part.
template <typename Scalar>
std::array<std::complex<Scalar>, 2> Eigenvalues2x2(const Eigen::Matrix<Scalar, 2, 2>& J) {
  using std::abs;
  using std::sqrt;
  const Scalar half_tr = J.trace() / Scalar(2);
  const Scalar det = J(0, 0) * J(1, 1) - J(0, 1) * J(1, 0);
  const Scalar disc = half_tr * half_tr - det;
  std::array<std::complex<Scalar>, 2> ev;
  if (disc < Scalar(0)) {
    const Scalar im = sqrt(-disc);
    ev = {std::complex<Scalar>(half_tr, -im), std::complex<Scalar>(half_tr, im)};
  } else {
    // Larger-magnitude root first, the other from the product det.
    const Scalar q = half_tr + std::copysign(sqrt(disc), half_tr);
    const Scalar other = q != Scalar(0) ? det / q : Scalar(0);
    ev = {std::complex<Scalar>(q), std::complex<Scalar>(other)};
    if (ev[1].real() < ev[0].real()) std::swap(ev[0], ev[1]);
  }
  return ev;
}

template <typename Scalar>
Stability StabilityOf(const std::array<std::complex<Scalar>, 2>& ev) {
  using std::abs;
  const Scalar scale = std::max({Scalar(1), abs(ev[0]), abs(ev[1])});
  const Scalar zero = Scalar(kHyperbolicRelTolerance) * scale;
  const Scalar lo = ev[0].real();
  const Scalar hi = ev[1].real();
  if (abs(lo) <= zero || abs(hi) <= zero) return Stability::kNonhyperbolic;
  if (hi < Scalar(0)) return Stability::kStable;
  if (lo > Scalar(0)) return Stability::kUnstable;
  return Stability::kSaddle;
}

template <typename Scalar>
Equilibrium<Scalar> MakeEquilibrium(const State2<Scalar>& at, EquilibriumKind kind,
                                    const ReducedParams<Scalar>& rp) {
  Equilibrium<Scalar> e;
  e.location = at;
  e.kind = kind;
  e.eigenvalues = Eigenvalues2x2(Jacobian(at, rp));
  e.stability = StabilityOf(e.eigenvalues);
  return e;
}

/// Interior equilibria (S > 0, I > 0) as intersections of Phi and Psi,
/// sorted by S. Needs r > m and beta_bar > c_bar_IS.
///
/// The real root count follows R: none for R < 1, a single (nonhyperbolic)
/// double root for |R - 1| <= kTangentTolerance, two roots otherwise. Roots
/// with Psi(S) <= 0 are not equilibria of the quadrant and are dropped.
template <typename Scalar>
std::vector<Equilibrium<Scalar>> InteriorEquilibria(const Thresholds<Scalar>& th,
                                                    const ReducedParams<Scalar>& rp) {
  using std::abs;
  using std::sqrt;
  if (!th.s1_star) throw DomainError("interior equilibria need r > m");
  if (!th.a_bar_thr) throw DomainError("interior equilibria need beta_bar > c_bar_IS");

  const auto quad = MakeInteriorQuadratic(rp);
  std::vector<Scalar> roots;
  bool tangent = false;
  if (quad.constant == Scalar(0)) {
    // S = 0 is a root; the other is middle / lead.
    roots.push_back(quad.middle / quad.lead);
  } else if (th.r_script && abs(*th.r_script - Scalar(1)) <= Scalar(kTangentTolerance)) {
    roots.push_back(quad.middle / (Scalar(2) * quad.lead));
    tangent = true;
  } else if (!th.r_script || *th.r_script > Scalar(1)) {
    const Scalar disc = quad.middle * quad.middle - Scalar(4) * quad.lead * quad.constant;
    if (disc >= Scalar(0)) {
      const Scalar big = (quad.middle + sqrt(disc)) / (Scalar(2) * quad.lead);
      roots.push_back(quad.constant / (quad.lead * big));
      roots.push_back(big);
    }
  }

  std::vector<Equilibrium<Scalar>> out;
  for (Scalar S : roots) {
    if (!(S > Scalar(0))) continue;
    const Scalar I = NullclinePsi(S, th, rp);
    if (!(I > Scalar(0))) continue;
    auto e = MakeEquilibrium(State2<Scalar>(S, I), EquilibriumKind::kInterior, rp);
    if (tangent) e.stability = Stability::kNonhyperbolic;
    out.push_back(e);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.location(idx::S) < b.location(idx::S); });
  return out;
}

enum class ScenarioLabel {
  kExtinction,
  kDiseaseFreeGlobal,
  kEndemicGlobal,
  kEndemicLocal,
  kBistable,
  kDegenerateTangent,
  kBoundary,
};

std::string_view ToString(ScenarioLabel label);
/// Inverse of ToString; throws std::invalid_argument on unknown text.
ScenarioLabel ParseScenarioLabel(std::string_view text);

/// Long-term outcome of the aggregated model for one parameter set.
struct Scenario {
  ScenarioLabel label = ScenarioLabel::kBoundary;
  bool coinfection_active = false;  ///< nu* > 0
  /// E0*, then E1* when r > m, then interior equilibria by increasing S.
  std::vector<Equilibriumd> equilibria;
  Thresholdsd thresholds;
  ReducedParamsd reduced;

  std::vector<Equilibriumd> interior() const;
};

/// Classifies the aggregated system's outcome. Decision order:
/// extinction (r <= m); disease-free when susceptibles outcompete infection
/// (beta_bar <= c_bar_IS); boundary when S1* = A-bar; disease-free when
/// A-bar >= max(S1*, B-bar) (boundary if A-bar = B-bar); endemic when
/// S1* > A-bar (global if S1* < B-bar, otherwise local only since limit
/// cycles are not excluded); for S1* < A-bar < B-bar the value of R decides
/// between disease-free, tangent and bistable, where tangent and bistable
/// also need the crossings to lie above A-bar. Validates `p` first.
Scenario Classify(const FullParamsd& p);

}  // namespace coinf

#endif  // COINF_EQUILIBRIA_HPP_
