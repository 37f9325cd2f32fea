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

#ifndef COINF_DYNAMICS_HPP_
#define COINF_DYNAMICS_HPP_

#include <Eigen/Core>

#include "coinf/errors.hpp"
#include "coinf/params.hpp"

namespace coinf {

/// (S, I): susceptible and total infected densities.
template <typename Scalar>
using State2 = Eigen::Matrix<Scalar, 2, 1>;
/// (S, U, V): susceptible, primary infected, coinfected densities.
template <typename Scalar>
using State3 = Eigen::Matrix<Scalar, 3, 1>;

using State2d = State2<double>;
using State3d = State3<double>;

namespace idx {
inline constexpr Eigen::Index S = 0;
inline constexpr Eigen::Index I = 1;  // State2
inline constexpr Eigen::Index U = 1;  // State3
inline constexpr Eigen::Index V = 2;  // State3
}  // namespace idx

/// u * v / (u + v), extended by 0 on the empty population.
template <typename Scalar>
Scalar ContactFraction(Scalar u, Scalar v) {
  const Scalar total = u + v;
  if (total == Scalar(0)) return Scalar(0);
  return u * v / total;
}

/// Vector field of the planar SIS-with-demography system. Applies to the
/// primary submodel and to the aggregated system alike.
template <typename Scalar>
State2<Scalar> RhsPrimary(const State2<Scalar>& s, const ReducedParams<Scalar>& rp) {
  const Scalar S = s(idx::S);
  const Scalar I = s(idx::I);
  State2<Scalar> d;
  d(idx::S) = rp.r * S + rp.a_bar * rp.r * I - rp.m * S -
              (rp.c_SS * S + rp.c_bar_SI * I) * S - rp.beta_bar * S * I + rp.gamma_bar * I;
  d(idx::I) = -rp.m * I - (rp.c_bar_IS * S + rp.c_bar_II * I) * I + rp.beta_bar * S * I -
              rp.gamma_bar * I - rp.mu_bar * I;
  return d;
}

/// The same vector field written around S1*, A-bar and B-bar. Requires all
/// three thresholds to exist.
template <typename Scalar>
State2<Scalar> RhsRescaled(const State2<Scalar>& s, const Thresholds<Scalar>& th,
                           const ReducedParams<Scalar>& rp) {
  if (!th.s1_star || !th.a_bar_thr) {
    throw DomainError("rescaled form needs S1* (r > m) and A-bar (beta_bar > c_bar_IS)");
  }
  const Scalar S = s(idx::S);
  const Scalar I = s(idx::I);
  State2<Scalar> d;
  d(idx::S) = rp.c_SS * S * (*th.s1_star - S) + rp.susceptible_coupling() * (th.b_bar_thr - S) * I;
  d(idx::I) = th.invasion_margin * (S - *th.a_bar_thr) * I - rp.c_bar_II * I * I;
  return d;
}

/// Opportunistic SIS dynamics on the infected class, fast time.
/// Returns (dU/dtau, dV/dtau); U + V is conserved.
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 1> RhsFast(Scalar u, Scalar v, Scalar lambda, Scalar delta) {
  const Scalar flow = lambda * ContactFraction(u, v) - delta * v;
  return Eigen::Matrix<Scalar, 2, 1>(-flow, flow);
}

/// Complete slow-fast system in fast time tau; slow terms carry epsilon.
template <typename Scalar>
State3<Scalar> RhsComplete(const State3<Scalar>& s, const FullParams<Scalar>& p) {
  const Scalar S = s(idx::S);
  const Scalar U = s(idx::U);
  const Scalar V = s(idx::V);
  const Scalar fast = p.lambda * ContactFraction(U, V) - p.delta * V;

  const Scalar slow_S = p.r * S + p.a_U * p.r * U + p.a_V * p.r * V - p.m * S -
                        (p.c_SS * S + p.c_SU * U + p.c_SV * V) * S - p.beta_U * S * U -
                        p.beta_V * S * V + p.gamma * U;
  const Scalar slow_U = -p.m * U - (p.c_US * S + p.c_UU * U + p.c_UV * V) * U +
                        p.beta_U * S * U + p.beta_V * S * V - p.gamma * U - p.mu_U * U;
  const Scalar slow_V = -p.m * V - (p.c_VS * S + p.c_VU * U + p.c_VV * V) * V - p.mu_V * V;

  State3<Scalar> d;
  d(idx::S) = p.epsilon * slow_S;
  d(idx::U) = -fast + p.epsilon * slow_U;
  d(idx::V) = fast + p.epsilon * slow_V;
  return d;
}

/// (S, U, V) in slow-fast coordinates: slow part (S, I = U + V) plus V.
template <typename Scalar>
struct SlowFastState {
  State2<Scalar> slow;
  Scalar coinfected{};
};

template <typename Scalar>
SlowFastState<Scalar> ToSlowFast(const State3<Scalar>& s) {
  return {State2<Scalar>(s(idx::S), s(idx::U) + s(idx::V)), s(idx::V)};
}

template <typename Scalar>
State3<Scalar> FromSlowFast(const SlowFastState<Scalar>& sf) {
  const Scalar I = sf.slow(idx::I);
  if (sf.coinfected > I) {
    throw DomainError("coinfected density exceeds total infected density");
  }
  return State3<Scalar>(sf.slow(idx::S), I - sf.coinfected, sf.coinfected);
}

/// Point of the complete model that corresponds to a reduced-system state
/// when the fast process sits at its equilibrium: (S, (1 - nu*) I, nu* I).
template <typename Scalar>
State3<Scalar> LiftToFastEquilibrium(const State2<Scalar>& s, Scalar nu_star) {
  const Scalar I = s(idx::I);
  return State3<Scalar>(s(idx::S), (Scalar(1) - nu_star) * I, nu_star * I);
}

}  // namespace coinf

#endif  // COINF_DYNAMICS_HPP_
