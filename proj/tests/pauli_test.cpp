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

#include <complex>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "ftrot/errors.hpp"
#include "ftrot/pauli.hpp"

namespace {

using ftrot::PauliString;
using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

Mat single_matrix(char p) {
  Mat m(2, 2);
  switch (p) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cd(0, -1), cd(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1;
  }
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Mat dense(const PauliString& p) {
  Mat m = Mat::Identity(1, 1);
  for (std::size_t q = 0; q < p.num_qubits(); ++q) m = kron(m, single_matrix(p.pauli(q)));
  const cd phases[4] = {1, cd(0, 1), -1, cd(0, -1)};
  return phases[p.phase()] * m;
}

PauliString random_pauli(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  PauliString p(n);
  for (std::size_t q = 0; q < n; ++q) p.set(q, "IXYZ"[pick(rng)]);
  p.set_phase(pick(rng));
  return p;
}

TEST(Pauli, LabelRoundTrip) {
  const auto p = PauliString::from_label("-iXYZ_I");
  EXPECT_EQ(p.num_qubits(), 5u);
  EXPECT_EQ(p.phase(), 3);
  EXPECT_EQ(p.weight(), 3u);
  EXPECT_EQ(PauliString::from_label(p.str()), p);
}

TEST(Pauli, RejectsBadLabel) {
  EXPECT_THROW(PauliString::from_label("XQZ"), std::invalid_argument);
}

TEST(Pauli, DocumentedProduct) {
  const auto a = PauliString::from_label("ZZZII");
  const auto b = PauliString::from_label("YYIZZ");
  const auto c = a * b;
  EXPECT_EQ(c, PauliString::from_label("-XXZZZ"));
  EXPECT_EQ(c.weight(), 5u);
  EXPECT_TRUE(commutes(a, b));
}

TEST(Pauli, MatchesDenseMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto a = random_pauli(n, rng);
    const auto b = random_pauli(n, rng);
    const Mat ab = dense(a) * dense(b);
    EXPECT_LT((dense(a * b) - ab).norm(), 1e-12);
    const Mat comm = dense(a) * dense(b) - dense(b) * dense(a);
    EXPECT_EQ(commutes(a, b), comm.norm() < 1e-12);
  }
}

TEST(Pauli, MultiWordStrings) {
  std::mt19937_64 rng(11);
  const auto a = random_pauli(150, rng);
  const auto b = random_pauli(150, rng);
  auto prod = a * b;
  prod *= b;
  EXPECT_EQ(prod.label(), a.label());
  EXPECT_EQ((a * a).weight(), 0u);
}

TEST(Pauli, DimensionMismatchThrows) {
  EXPECT_THROW(multiply(PauliString(3), PauliString(4)), ftrot::DimensionError);
  EXPECT_THROW((void)commutes(PauliString(3), PauliString(4)), ftrot::DimensionError);
}

TEST(Pauli, ZPattern) {
  const std::vector<std::size_t> support = {0, 4, 8};
  const auto z = ftrot::z_pattern(9, support, 0b101);
  EXPECT_EQ(z.label(), "ZIIIIIIIZ");
}

}  // namespace
