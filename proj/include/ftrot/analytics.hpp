// Copyright 2026 The ftrot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>

#include "ftrot/errors.hpp"

namespace ftrot {

template <class Scalar>
struct RotationConfigT {
  Scalar theta = 0;        ///< physical rotation angle
  int d = 1;               ///< weight of the logical-Z support
  Scalar p_in = 0;         ///< depolarizing probability per qubit per cycle
  int r = 1;               ///< detection cycles
  Scalar sigma_theta = 0;  ///< per-qubit coherent angle std
};
using RotationConfig = RotationConfigT<double>;

template <class Scalar>
struct SuccessRateT {
  Scalar p_s = 1;
  Scalar p_s_in = 1;
  Scalar p_s_coh = 1;
};
using SuccessRate = SuccessRateT<double>;

template <class Scalar>
struct IncoherentSeriesT {
  Scalar value = 0;
  int terms = 0;
  /// p_in >= 3 sin^2 cos^2: higher orders no longer shrink, the series is summed to n = d.
  bool substrate_limited = false;
};
using IncoherentSeries = IncoherentSeriesT<double>;

template <class Scalar>
struct FilterCoefficientsT {
  Scalar c0 = 1;
  Scalar c1 = 1;
};

template <class Scalar>
struct FourQubitResultT {
  Scalar theta_L = 0;
  Scalar eps_in = 0;
  Scalar correlation = 0.5;
  const char* axis = "-y";
};

template <class Scalar>
struct PerfectCodeResultT {
  Scalar theta_L = 0;
  Scalar eps_in = 0;
};

namespace detail {

template <class Scalar>
void check_angle(Scalar theta) {
  if (!(theta >= 0 && theta <= std::numbers::pi_v<Scalar>)) {
    throw DomainError("rotation angle must lie in [0, pi], got " + std::to_string(double(theta)));
  }
}

inline void check_distance(int d) {
  if (d < 1) throw DomainError("support weight d must be >= 1");
}

template <class Scalar>
void check_probability(Scalar p, const char* what) {
  if (!(p >= 0 && p < 1)) {
    throw DomainError(std::string(what) + " must lie in [0, 1), got " + std::to_string(double(p)));
  }
}

template <class Scalar>
void check_config(const RotationConfigT<Scalar>& cfg) {
  check_angle(cfg.theta);
  check_distance(cfg.d);
  check_probability(cfg.p_in, "p_in");
  if (cfg.r < 1) throw DomainError("detection cycles r must be >= 1");
  if (!(cfg.sigma_theta >= 0)) throw DomainError("sigma_theta must be non-negative");
}

}  // namespace detail

/// x^e for x >= 0, switching to exp(e log x) once the direct power would underflow.
template <class Scalar>
Scalar safe_pow(Scalar x, Scalar e) {
  if (e == 0) return Scalar(1);
  if (x == 0) return e > 0 ? Scalar(0) : Scalar(INFINITY);
  const Scalar lg = e * std::log(x);
  if (lg < Scalar(-600)) return std::exp(lg);
  return std::pow(x, e);
}

/// Logical Z rotation produced by d physical R_z(theta) on the logical-Z support.
template <class Scalar>
Scalar logical_angle(Scalar theta, int d) {
  detail::check_angle(theta);
  detail::check_distance(d);
  const Scalar s = std::sin(theta / 2);
  const Scalar c = std::cos(theta / 2);
  if (s == 0) return Scalar(0);
  if (c == 0) return std::numbers::pi_v<Scalar>;
  // ratio sin^d / sqrt(cos^2d + sin^2d) = 1 / sqrt(1 + cot^2d)
  const Scalar log_cot = std::log(c) - std::log(s);
  const Scalar cot2d = std::exp(2 * d * log_cot);
  return 2 * std::asin(1 / std::sqrt(1 + cot2d));
}

/// Logical angle of the branch whose Z^b has weight b_weight (folded to min(m, d-m)).
///
/// Signed so that the m = 0 branch equals logical_angle; odd weight classes rotate the
/// opposite way: tan(phi/2) = (-1)^m tan^(d-2m)(theta/2).
template <class Scalar>
Scalar branch_angle(int b_weight, int d, Scalar theta) {
  detail::check_angle(theta);
  detail::check_distance(d);
  if (b_weight < 0 || b_weight > d) {
    throw DomainError("branch weight must lie in [0, d]");
  }
  const int m = std::min(b_weight, d - b_weight);
  const int k = d - 2 * m;
  const Scalar sign = (m % 2 == 0) ? Scalar(1) : Scalar(-1);
  if (k == 0) return sign * std::numbers::pi_v<Scalar> / 2;
  const Scalar s = std::sin(theta / 2);
  const Scalar c = std::cos(theta / 2);
  if (s == 0) return Scalar(0);
  if (c == 0) return sign * std::numbers::pi_v<Scalar>;
  const Scalar tk = std::exp(k * (std::log(s) - std::log(c)));
  return 2 * std::atan(sign * tk);
}

/// First-order post-selected error: d' (p/3) sin^(2(d-1)) / cos, all at theta/2.
template <class Scalar>
Scalar incoherent_error_first_order(const RotationConfigT<Scalar>& cfg, int d_prime) {
  detail::check_config(cfg);
  if (d_prime < 0) throw DomainError("multiplicity must be non-negative");
  if (cfg.p_in == 0 || d_prime == 0) return Scalar(0);
  const Scalar s = std::sin(cfg.theta / 2);
  const Scalar c = std::cos(cfg.theta / 2);
  if (c == 0) throw DomainError("first-order error diverges at theta = pi");
  return d_prime * (cfg.p_in / 3) * safe_pow(s, Scalar(2 * (cfg.d - 1))) / c;
}

/// Default higher-order multiplicity: C(d'_1, n), extrapolated from the single-error count.
inline std::function<double(int, int)> binomial_multiplicity(int d_prime_1) {
  return [d_prime_1](int /*d*/, int n) {
    if (n > d_prime_1) return 0.0;
    double c = 1;
    for (int i = 1; i <= n; ++i) c = c * (d_prime_1 - n + i) / i;
    return c;
  };
}

/// sum_n d'(d, n) (p/3)^n sin^(2(d-n)) cos^(-2n), truncated at a relative tolerance.
template <class Scalar>
IncoherentSeriesT<Scalar> incoherent_error_total(const RotationConfigT<Scalar>& cfg,
                                                 const std::function<double(int, int)>& mult,
                                                 Scalar rel_tol = Scalar(1e-3)) {
  detail::check_config(cfg);
  IncoherentSeriesT<Scalar> out;
  if (cfg.p_in == 0) return out;
  const Scalar s = std::sin(cfg.theta / 2);
  const Scalar c = std::cos(cfg.theta / 2);
  if (c == 0) throw DomainError("incoherent series diverges at theta = pi");
  out.substrate_limited = cfg.p_in >= 3 * s * s * c * c;
  for (int n = 1; n <= cfg.d; ++n) {
    const Scalar term = Scalar(mult(cfg.d, n)) * safe_pow(cfg.p_in / 3, Scalar(n)) *
                        safe_pow(s, Scalar(2 * (cfg.d - n))) * safe_pow(c, Scalar(-2 * n));
    out.value += term;
    out.terms = n;
    if (!out.substrate_limited && n >= 2 && term < rel_tol * out.value) break;
  }
  return out;
}

/// Coherent acceptance cos^2d + sin^2d.
template <class Scalar>
Scalar coherent_success(Scalar theta, int d) {
  detail::check_angle(theta);
  detail::check_distance(d);
  const Scalar s = std::sin(theta / 2);
  const Scalar c = std::cos(theta / 2);
  return safe_pow(c, Scalar(2 * d)) + safe_pow(s, Scalar(2 * d));
}

/// Readout masking of a weight-1 branch: combos q^r P(m=1 | accept) sin^2((theta_L - phi_1)/2).
/// q defaults to 2 p_in / 3.
template <class Scalar>
Scalar readout_error(const RotationConfigT<Scalar>& cfg, int readout_combos,
                     std::optional<Scalar> q = std::nullopt) {
  detail::check_config(cfg);
  const Scalar q_ro = q.value_or(2 * cfg.p_in / 3);
  if (q_ro == 0 || readout_combos == 0 || cfg.d < 2) return Scalar(0);
  const Scalar s = std::sin(cfg.theta / 2);
  const Scalar c = std::cos(cfg.theta / 2);
  const Scalar weight1 = s * s * safe_pow(c, Scalar(2 * (cfg.d - 1))) +
                         safe_pow(s, Scalar(2 * (cfg.d - 1))) * c * c;
  const Scalar projection = weight1 / coherent_success(cfg.theta, cfg.d);
  const Scalar dphi = logical_angle(cfg.theta, cfg.d) - branch_angle(1, cfg.d, cfg.theta);
  const Scalar flip = std::sin(dphi / 2);
  return readout_combos * safe_pow(q_ro, Scalar(cfg.r)) * projection * flip * flip;
}

/// Incoherent times coherent acceptance, with one outcome-flip factor per generator per round.
template <class Scalar>
SuccessRateT<Scalar> success_rate(const RotationConfigT<Scalar>& cfg, int n_qubits,
                                  int n_stabilizers) {
  detail::check_config(cfg);
  if (n_qubits < 1 || n_stabilizers < 0) throw DomainError("invalid qubit or generator count");
  SuccessRateT<Scalar> out;
  out.p_s_in = std::pow(1 - cfg.p_in, Scalar(cfg.r) * n_qubits) *
               std::pow(1 - 2 * cfg.p_in / 3, Scalar(cfg.r) * n_stabilizers);
  out.p_s_coh = coherent_success(cfg.theta, cfg.d);
  out.p_s = out.p_s_in * out.p_s_coh;
  return out;
}

template <class Scalar>
Scalar coherent_angle_std(int d, Scalar theta_L0, Scalar sigma_frac) {
  if (d < 0 || theta_L0 < 0 || sigma_frac < 0) throw DomainError("inputs must be non-negative");
  return std::sqrt(Scalar(d)) * theta_L0 * sigma_frac;
}

/// m repetitions at theta / m^(1/d): m d' (p/3) sin^(2(d-1)) cos^2.
template <class Scalar>
Scalar multi_rotation_incoherent(int m, const RotationConfigT<Scalar>& cfg, int d_prime) {
  detail::check_config(cfg);
  if (m < 1) throw DomainError("repetition count must be >= 1");
  const Scalar half = cfg.theta / (2 * std::pow(Scalar(m), Scalar(1) / cfg.d));
  const Scalar s = std::sin(half);
  const Scalar c = std::cos(half);
  return m * d_prime * (cfg.p_in / 3) * safe_pow(s, Scalar(2 * (cfg.d - 1))) * c * c;
}

template <class Scalar>
Scalar multi_rotation_coherent_std(int m, int d, Scalar sigma_frac) {
  if (m < 1) throw DomainError("repetition count must be >= 1");
  return std::sqrt(Scalar(d) / m) * sigma_frac;
}

/// Non-rotation filtering for even d. sign = +1 damps |0_L>, sign = -1 damps |1_L>.
template <class Scalar>
FilterCoefficientsT<Scalar> filter_coefficients(Scalar theta, int d, int sign = 1) {
  detail::check_angle(theta);
  if (d < 2 || d % 2 != 0) throw UnsupportedParameter("filter coefficients need even d >= 2");
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  const Scalar cd = safe_pow(std::cos(theta / 2), Scalar(d));
  const Scalar sd = safe_pow(std::sin(theta / 2), Scalar(d));
  return {cd - sign * sd, cd + sign * sd};
}

template <class Scalar>
FourQubitResultT<Scalar> four_qubit_analytics(Scalar theta, Scalar p_in) {
  detail::check_angle(theta);
  detail::check_probability(p_in, "p_in");
  FourQubitResultT<Scalar> out;
  const Scalar s = std::sin(theta / 2);
  const Scalar c = std::cos(theta / 2);
  out.theta_L = logical_angle(theta, 2);
  const Scalar cl = std::cos(out.theta_L);
  out.eps_in = 8 * (p_in / 3) * s * s * c * c * cl * cl;
  out.correlation = Scalar(0.5) - out.eps_in / (2 * (1 - out.eps_in));
  return out;
}

template <class Scalar>
PerfectCodeResultT<Scalar> perfect_code_analytics(Scalar theta, Scalar p_in) {
  detail::check_angle(theta);
  detail::check_probability(p_in, "p_in");
  PerfectCodeResultT<Scalar> out;
  const Scalar s = std::sin(theta / 2);
  const Scalar c = std::cos(theta / 2);
  out.theta_L = -logical_angle(theta, 3);
  const Scalar half = std::sin((out.theta_L - theta) / 2);
  out.eps_in = 3 * (p_in / 3) * s * s * safe_pow(c, Scalar(4)) * half * half;
  return out;
}

}  // namespace ftrot
