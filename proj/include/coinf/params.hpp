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

#ifndef COINF_PARAMS_HPP_
#define COINF_PARAMS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "coinf/errors.hpp"

namespace coinf {

/// Rates and competition coefficients of the complete slow-fast model
/// (susceptible S, primary infected U, coinfected V).
///
/// Units: rates in 1/time, transmission and competition coefficients in
/// 1/(density*time), fertility reductions and `epsilon` dimensionless.
template <typename Scalar>
struct FullParams {
  Scalar r{};       ///< per-capita fertility of uninfected hosts
  Scalar m{};       ///< natural death rate
  Scalar a_U{};     ///< fertility reduction, primary infected
  Scalar a_V{};     ///< fertility reduction, coinfected
  Scalar mu_U{};    ///< disease mortality, primary infected
  Scalar mu_V{};    ///< disease mortality, coinfected
  Scalar beta_U{};  ///< primary transmission by U
  Scalar beta_V{};  ///< primary transmission by V
  Scalar gamma{};   ///< primary recovery
  Scalar lambda{};  ///< opportunistic transmission (frequency dependent)
  Scalar delta{};   ///< opportunistic recovery
  Scalar c_SS{}, c_SU{}, c_SV{};
  Scalar c_US{}, c_UU{}, c_UV{};
  Scalar c_VS{}, c_VU{}, c_VV{};
  Scalar epsilon{Scalar(1e-3)};  ///< ratio of fast to slow time scales
};

using FullParamsd = FullParams<double>;

/// Name/member table for FullParams, in canonical order. Names are the keys of
/// the configuration format and the admissible sweep axes.
template <typename Scalar>
inline constexpr std::array<std::pair<std::string_view, Scalar FullParams<Scalar>::*>, 21>
    kFullParamFields = {{
        {"r", &FullParams<Scalar>::r},
        {"m", &FullParams<Scalar>::m},
        {"a_U", &FullParams<Scalar>::a_U},
        {"a_V", &FullParams<Scalar>::a_V},
        {"mu_U", &FullParams<Scalar>::mu_U},
        {"mu_V", &FullParams<Scalar>::mu_V},
        {"beta_U", &FullParams<Scalar>::beta_U},
        {"beta_V", &FullParams<Scalar>::beta_V},
        {"gamma", &FullParams<Scalar>::gamma},
        {"lambda", &FullParams<Scalar>::lambda},
        {"delta", &FullParams<Scalar>::delta},
        {"c_SS", &FullParams<Scalar>::c_SS},
        {"c_SU", &FullParams<Scalar>::c_SU},
        {"c_SV", &FullParams<Scalar>::c_SV},
        {"c_US", &FullParams<Scalar>::c_US},
        {"c_UU", &FullParams<Scalar>::c_UU},
        {"c_UV", &FullParams<Scalar>::c_UV},
        {"c_VS", &FullParams<Scalar>::c_VS},
        {"c_VU", &FullParams<Scalar>::c_VU},
        {"c_VV", &FullParams<Scalar>::c_VV},
        {"epsilon", &FullParams<Scalar>::epsilon},
    }};

/// Member pointer for a parameter name, or nullptr if the name is unknown.
template <typename Scalar>
constexpr Scalar FullParams<Scalar>::*FindParamField(std::string_view name) {
  for (const auto& [key, member] : kFullParamFields<Scalar>) {
    if (key == name) return member;
  }
  return nullptr;
}

/// Throws ParameterError if `p` violates the model's admissible domain:
/// nonnegative finite rates, strictly positive competition coefficients,
/// lambda > 0, 0 < a_V < a_U < 1 and 0 < epsilon <= 1.
template <typename Scalar>
void Validate(const FullParams<Scalar>& p) {
  using std::isfinite;
  for (const auto& [key, member] : kFullParamFields<Scalar>) {
    if (!isfinite(p.*member)) {
      throw ParameterError("parameter '" + std::string(key) + "' is not finite");
    }
    if (p.*member < Scalar(0)) {
      throw ParameterError("parameter '" + std::string(key) + "' is negative");
    }
  }
  constexpr std::array<std::string_view, 9> competition = {
      "c_SS", "c_SU", "c_SV", "c_US", "c_UU", "c_UV", "c_VS", "c_VU", "c_VV"};
  for (auto key : competition) {
    if (!(p.*FindParamField<Scalar>(key) > Scalar(0))) {
      throw ParameterError("competition coefficient '" + std::string(key) +
                           "' must be strictly positive");
    }
  }
  if (!(p.lambda > Scalar(0))) {
    throw ParameterError("opportunistic transmission 'lambda' must be positive");
  }
  if (!(Scalar(0) < p.a_V && p.a_V < p.a_U && p.a_U < Scalar(1))) {
    throw ParameterError("fertility reductions must satisfy 0 < a_V < a_U < 1");
  }
  if (!(p.epsilon > Scalar(0) && p.epsilon <= Scalar(1))) {
    throw ParameterError("time-scale ratio 'epsilon' must lie in (0, 1]");
  }
}

/// Coefficients of the aggregated planar (S, I) system. The same structure
/// describes the primary-disease submodel when `nu_star == 0`.
template <typename Scalar>
struct ReducedParams {
  Scalar r{};
  Scalar m{};
  Scalar c_SS{};
  Scalar a_bar{};
  Scalar c_bar_SI{};
  Scalar c_bar_IS{};
  Scalar c_bar_II{};
  Scalar beta_bar{};
  Scalar gamma_bar{};
  Scalar mu_bar{};
  Scalar nu_star{};

  /// m + gamma_bar + mu_bar: per-capita outflow from the infected class.
  Scalar removal_rate() const { return m + gamma_bar + mu_bar; }
  /// beta_bar - c_bar_IS: net per-susceptible gain of infected when rare.
  Scalar invasion_margin() const { return beta_bar - c_bar_IS; }
  /// a_bar * r + gamma_bar: inflow into S per infected individual.
  Scalar infected_inflow() const { return a_bar * r + gamma_bar; }
  /// c_bar_SI + beta_bar: per-susceptible loss of S per infected individual.
  Scalar susceptible_coupling() const { return c_bar_SI + beta_bar; }
};

using ReducedParamsd = ReducedParams<double>;

/// Threshold quantities that drive the classification of the reduced system.
/// Quantities that are undefined for the given coefficients are empty.
template <typename Scalar>
struct Thresholds {
  std::optional<Scalar> s1_star;    ///< disease-free carrying capacity, r > m
  std::optional<Scalar> a_bar_thr;  ///< invasion threshold, margin > 0
  Scalar b_bar_thr{};               ///< sign switch of I's effect on S growth
  std::optional<Scalar> r_script;   ///< interior-equilibrium discriminant ratio
  Scalar invasion_margin{};         ///< beta_bar - c_bar_IS
};

using Thresholdsd = Thresholds<double>;

/// Coinfected fraction of the infected class at the fast equilibrium.
/// Zero when recovery is at least as fast as transmission.
template <typename Scalar>
Scalar ComputeNuStar(Scalar lambda, Scalar delta) {
  if (!(lambda > Scalar(0))) {
    throw ParameterError("lambda must be positive to form the fast equilibrium");
  }
  if (delta < Scalar(0)) {
    throw ParameterError("delta must be nonnegative");
  }
  if (delta >= lambda) return Scalar(0);
  return Scalar(1) - delta / lambda;
}

/// Aggregates the complete model onto the slow variables (S, I = U + V) by
/// substituting the fast equilibrium V = nu* I into the slow equations.
template <typename Scalar>
ReducedParams<Scalar> Reduce(const FullParams<Scalar>& p) {
  Validate(p);
  const Scalar nu = ComputeNuStar(p.lambda, p.delta);
  const Scalar q = Scalar(1) - nu;
  ReducedParams<Scalar> rp;
  rp.r = p.r;
  rp.m = p.m;
  rp.c_SS = p.c_SS;
  rp.nu_star = nu;
  rp.a_bar = q * p.a_U + nu * p.a_V;
  rp.c_bar_SI = q * p.c_SU + nu * p.c_SV;
  rp.c_bar_IS = q * p.c_US + nu * p.c_VS;
  rp.c_bar_II = q * q * p.c_UU + q * nu * p.c_UV + nu * q * p.c_VU + nu * nu * p.c_VV;
  rp.beta_bar = q * p.beta_U + nu * p.beta_V;
  rp.gamma_bar = q * p.gamma;
  rp.mu_bar = q * p.mu_U + nu * p.mu_V;
  return rp;
}

/// The primary-disease submodel coefficients (the U-indexed slow rates).
template <typename Scalar>
ReducedParams<Scalar> PrimarySubmodel(const FullParams<Scalar>& p) {
  ReducedParams<Scalar> rp;
  rp.r = p.r;
  rp.m = p.m;
  rp.c_SS = p.c_SS;
  rp.a_bar = p.a_U;
  rp.c_bar_SI = p.c_SU;
  rp.c_bar_IS = p.c_US;
  rp.c_bar_II = p.c_UU;
  rp.beta_bar = p.beta_U;
  rp.gamma_bar = p.gamma;
  rp.mu_bar = p.mu_U;
  rp.nu_star = Scalar(0);
  return rp;
}

/// Smallest of the four competition coefficients of the reduced system; the
/// total population S + I is eventually bounded by (r - m) / this value.
template <typename Scalar>
Scalar MinCompetition(const ReducedParams<Scalar>& rp) {
  return std::min({rp.c_SS, rp.c_bar_SI, rp.c_bar_IS, rp.c_bar_II});
}

/// S1*, A-bar, B-bar and R of the reduced system.
///
/// R compares the middle coefficient of the interior-equilibrium quadratic
/// with twice the geometric mean of the outer ones, so R < 1, R = 1, R > 1
/// correspond to a negative, zero, positive discriminant. The quadratic comes
/// from clearing S-nullcline = I-nullcline, whose constant term carries the
/// full infected outflow m + gamma_bar + mu_bar.
template <typename Scalar>
Thresholds<Scalar> ComputeThresholds(const ReducedParams<Scalar>& rp) {
  using std::sqrt;
  Thresholds<Scalar> th;
  th.invasion_margin = rp.invasion_margin();
  th.b_bar_thr = rp.infected_inflow() / rp.susceptible_coupling();
  if (rp.r > rp.m) th.s1_star = (rp.r - rp.m) / rp.c_SS;
  if (th.invasion_margin > Scalar(0)) {
    th.a_bar_thr = rp.removal_rate() / th.invasion_margin;
  }
  if (th.s1_star && th.a_bar_thr) {
    const Scalar lead = rp.c_SS * rp.c_bar_II + rp.susceptible_coupling() * th.invasion_margin;
    const Scalar middle = rp.c_bar_II * (rp.r - rp.m) +
                          rp.infected_inflow() * th.invasion_margin +
                          rp.susceptible_coupling() * rp.removal_rate();
    const Scalar constant = rp.infected_inflow() * rp.removal_rate();
    const Scalar radicand = lead * constant;
    if (radicand > Scalar(0)) th.r_script = middle / (Scalar(2) * sqrt(radicand));
  }
  return th;
}

}  // namespace coinf

#endif  // COINF_PARAMS_HPP_
