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

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace ftrot::oracle {

/// Phase-flip code state vector: |+>^d, R_z(theta) on every qubit, projection onto the
/// X_i X_{i+1} eigenspace holding Z^b, the lighter of Z^b and its complement undone, logical ratio read from |+_L>, |-_L>.
/// Returns tan(phi / 2) in the sign convention where the trivial branch rotates positively.
inline double branch_tan_half(int b_weight, int d, double theta) {
  using cd = std::complex<double>;
  const std::size_t dim = std::size_t{1} << d;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(double(dim)));
  for (std::size_t x = 0; x < dim; ++x) {
    const int ones = std::popcount(x);
    psi(x) *= std::exp(cd(0, -theta / 2) * double(d - 2 * ones));
  }
  const std::uint64_t b = (std::uint64_t{1} << b_weight) - 1;
  auto apply_xx = [&](const Eigen::VectorXcd& v, int i) {
    Eigen::VectorXcd out(dim);
    const std::size_t flip = (std::size_t{1} << i) | (std::size_t{1} << (i + 1));
    for (std::size_t x = 0; x < dim; ++x) out(x ^ flip) = v(x);
    return out;
  };
  for (int i = 0; i + 1 < d; ++i) {
    const int s = int((b >> i) & 1) ^ int((b >> (i + 1)) & 1);
    const double sign = s ? -1.0 : 1.0;
    psi = 0.5 * (psi + sign * apply_xx(psi, i));
  }
  const std::uint64_t undo = 2 * b_weight > d ? (~b & (dim - 1)) : b;
  for (std::size_t x = 0; x < dim; ++x) {
    if (std::popcount(x & undo) % 2) psi(x) = -psi(x);
  }
  Eigen::VectorXcd plus = Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(double(dim)));
  Eigen::VectorXcd minus = plus;
  for (std::size_t x = 0; x < dim; ++x) {
    if (std::popcount(x) % 2) minus(x) = -minus(x);
  }
  const cd alpha = plus.dot(psi);
  const cd beta = minus.dot(psi);
  cd phase(1, 0);
  for (int i = 0; i < d; ++i) phase *= cd(0, 1);
  return (phase * beta / alpha).real();
}

inline double branch_angle(int b_weight, int d, double theta) {
  return 2 * std::atan(branch_tan_half(b_weight, d, theta));
}

}  // namespace ftrot::oracle

#include "ftrot/analytics.hpp"
#include "ftrot/mcsim.hpp"

namespace ftrot::oracle {

/// Mean infidelity of accepted trials to first order in p_in with readout flips off:
/// every single Pauli fault in every cycle against every branch pattern, weighted exactly.
inline double first_order_infidelity(const StabilizerCode& code, double theta, double p_in, int r) {
  const int d = static_cast<int>(code.z_support.size());
  NoiseModel noise{p_in, r, 0.0, NoiseChannel::depolarizing};
  PrepSimulator sim(code, theta, logical_angle(theta, d), noise);
  const double s2 = std::pow(std::sin(theta / 2), 2);
  const double c2 = 1 - s2;
  double accept0 = 0;
  double weighted = 0;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    std::vector<std::uint8_t> b(static_cast<std::size_t>(d));
    int w = 0;
    for (int i = 0; i < d; ++i) {
      b[static_cast<std::size_t>(i)] = (mask >> i) & 1;
      w += (mask >> i) & 1;
    }
    const double pb = std::pow(s2, w) * std::pow(c2, d - w);
    const auto clean = sim.evaluate(b, {}, {});
    if (clean.accepted) accept0 += pb;
    for (int cycle = 0; cycle < r; ++cycle) {
      for (std::size_t q = 0; q < code.n; ++q) {
        for (char p : {'X', 'Y', 'Z'}) {
          std::vector<PauliString> errs(static_cast<std::size_t>(r), PauliString(code.n));
          errs[static_cast<std::size_t>(cycle)] = PauliString::single(code.n, q, p);
          const auto o = sim.evaluate(b, errs, {});
          if (o.accepted) weighted += pb * o.infidelity_sample;
        }
      }
    }
  }
  return (p_in / 3) * weighted / accept0;
}

}  // namespace ftrot::oracle
