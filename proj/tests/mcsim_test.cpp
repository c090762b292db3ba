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

#include <bit>
#include <cmath>

#include <gtest/gtest.h>

#include "ftrot/analytics.hpp"
#include "ftrot/codes.hpp"
#include "ftrot/errors.hpp"
#include "ftrot/mcsim.hpp"
#include "oracles.hpp"

namespace {

using namespace ftrot;

std::size_t generator_hit_by(const StabilizerCode& code, const PauliString& e) {
  const auto s = syndrome(e, code);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) return i;
  }
  return s.size();
}

class SurfaceInjection : public ::testing::Test {
 protected:
  StabilizerCode code = rotated_surface_code(3);
  double theta = 0.5;
  double target = logical_angle(0.5, 3);
  PrepSimulator sim{code, theta, target, NoiseModel{1e-3, 2, std::nullopt, NoiseChannel::depolarizing}};
  std::vector<std::uint8_t> none = {0, 0, 0};
  std::vector<std::uint8_t> first = {1, 0, 0};
  double flip1 = std::pow(std::sin((target - branch_angle(1, 3, theta)) / 2), 2);
};

TEST_F(SurfaceInjection, CleanTrivialBranch) {
  const auto o = sim.evaluate(none, {}, {});
  EXPECT_TRUE(o.accepted);
  EXPECT_EQ(o.branch_weight, 0);
  EXPECT_NEAR(o.infidelity_sample, 0.0, 1e-15);
}

TEST_F(SurfaceInjection, WeightOneBranchRejected) {
  EXPECT_FALSE(sim.evaluate(first, {}, {}).accepted);
  EXPECT_FALSE(sim.evaluate({0, 1, 0}, {}, {}).accepted);
}

TEST_F(SurfaceInjection, FlipProjection) {
  const auto z0 = PauliString::single(9, 0, 'Z');
  const auto o = sim.evaluate(first, {z0}, {});
  ASSERT_TRUE(o.accepted);
  EXPECT_EQ(o.branch_weight, 1);
  EXPECT_FALSE(o.logical_x);
  EXPECT_FALSE(o.logical_z);
  EXPECT_NEAR(o.infidelity_sample, flip1, 1e-15);
}

TEST_F(SurfaceInjection, SecondaryFlip) {
  // (1, 0) shares the only X plaquette of corner qubit 0.
  const auto z = PauliString::single(9, 3, 'Z');
  const auto o = sim.evaluate(first, {z}, {});
  ASSERT_TRUE(o.accepted);
  EXPECT_NEAR(o.infidelity_sample, flip1, 1e-15);
}

TEST_F(SurfaceInjection, ReadoutMasking) {
  const std::size_t g = generator_hit_by(code, PauliString::single(9, 0, 'Z'));
  std::vector<std::uint8_t> mask(code.stabilizers.size(), 0);
  mask[g] = 1;
  const auto both = sim.evaluate(first, {}, {mask, mask});
  ASSERT_TRUE(both.accepted);
  EXPECT_EQ(both.branch_weight, 1);
  EXPECT_NEAR(both.infidelity_sample, flip1, 1e-15);
  EXPECT_FALSE(sim.evaluate(first, {}, {mask}).accepted);
}

TEST_F(SurfaceInjection, LastRoundErrorIsCorrectable) {
  const auto z0 = PauliString::single(9, 0, 'Z');
  const std::size_t g = generator_hit_by(code, z0);
  std::vector<std::uint8_t> mask(code.stabilizers.size(), 0);
  mask[g] = 1;
  const auto o = sim.evaluate(none, {PauliString(9), z0}, {{}, mask});
  ASSERT_TRUE(o.accepted);
  EXPECT_NEAR(o.infidelity_sample, 0.0, 1e-15);
}

TEST_F(SurfaceInjection, DetectedErrorsRejected) {
  EXPECT_FALSE(sim.evaluate(none, {PauliString::single(9, 4, 'X')}, {}).accepted);
  EXPECT_FALSE(sim.evaluate(none, {PauliString::single(9, 4, 'Y')}, {}).accepted);
  EXPECT_FALSE(sim.evaluate(none, {PauliString(9), PauliString::single(9, 4, 'Z')}, {}).accepted);
}

TEST_F(SurfaceInjection, UndetectedLogicals) {
  const auto ox = sim.evaluate(none, {code.logical_x[0]}, {});
  ASSERT_TRUE(ox.accepted);
  EXPECT_TRUE(ox.logical_x);
  EXPECT_NEAR(ox.infidelity_sample, std::pow(std::sin(target), 2), 1e-14);
  const auto oz = sim.evaluate(none, {code.logical_z[0]}, {});
  ASSERT_TRUE(oz.accepted);
  EXPECT_TRUE(oz.logical_z);
  EXPECT_NEAR(oz.infidelity_sample, 1.0, 1e-14);
}

TEST_F(SurfaceInjection, InputChecks) {
  EXPECT_THROW(sim.evaluate({0, 0}, {}, {}), DimensionError);
  EXPECT_THROW(sim.evaluate(none, {PauliString(4)}, {}), DimensionError);
}

TEST(Mcsim, UnsupportedCodes) {
  const NoiseModel noise{1e-3, 2, std::nullopt, NoiseChannel::depolarizing};
  EXPECT_THROW(PrepSimulator(perfect_code_weight3(), 0.3, 0.0, noise), UnsupportedParameter);
}

TEST(Mcsim, NoiselessAcceptance) {
  const auto code = rotated_surface_code(3);
  const NoiseModel noise{0.0, 2, std::nullopt, NoiseChannel::depolarizing};
  const auto st = estimate(code, 0.8, logical_angle(0.8, 3), noise, 400000, 5, {1 << 14, 1, {}});
  EXPECT_NEAR(st.acceptance_rate, coherent_success(0.8, 3), 4 * st.acceptance_stderr);
  ASSERT_TRUE(st.mean_infidelity.has_value());
  EXPECT_EQ(*st.mean_infidelity, 0.0);
  EXPECT_EQ(st.n_accepted_erroneous, 0u);
}

TEST(Mcsim, MatchesExactFirstOrder) {
  const auto code = rotated_surface_code(3);
  const NoiseModel noise{1e-3, 2, 0.0, NoiseChannel::depolarizing};
  const double exact = oracle::first_order_infidelity(code, 0.8, 1e-3, 2);
  const auto st = estimate(code, 0.8, logical_angle(0.8, 3), noise, 4000000, 17, {1 << 16, 1, {}});
  ASSERT_TRUE(st.mean_infidelity && st.infidelity_stderr);
  EXPECT_NEAR(*st.mean_infidelity, exact, 4 * *st.infidelity_stderr + 0.03 * exact);
}

TEST(Mcsim, PhaseFlipMatchesExactFirstOrder) {
  const auto code = phase_flip_code(3);
  const NoiseModel noise{1e-3, 1, 0.0, NoiseChannel::dephasing};
  const auto st = estimate(code, 0.8, logical_angle(0.8, 3), noise, 2000000, 23, {1 << 16, 1, {}});
  ASSERT_TRUE(st.mean_infidelity && st.infidelity_stderr);
  // Dephasing carries all of p_in on Z, three times the depolarizing Z share.
  const NoiseModel depol{1e-3, 1, 0.0, NoiseChannel::depolarizing};
  PrepSimulator sim(code, 0.8, logical_angle(0.8, 3), depol);
  double z_only = 0;
  double accept0 = 0;
  const double s2 = std::pow(std::sin(0.4), 2);
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    std::vector<std::uint8_t> b = {std::uint8_t(mask & 1), std::uint8_t(mask >> 1 & 1),
                                   std::uint8_t(mask >> 2 & 1)};
    const int w = std::popcount(mask);
    const double pb = std::pow(s2, w) * std::pow(1 - s2, 3 - w);
    if (sim.evaluate(b, {}, {}).accepted) accept0 += pb;
    for (std::size_t q = 0; q < 3; ++q) {
      const auto o = sim.evaluate(b, {PauliString::single(3, q, 'Z')}, {});
      if (o.accepted) z_only += pb * o.infidelity_sample;
    }
  }
  const double exact = 1e-3 * z_only / accept0;
  EXPECT_NEAR(*st.mean_infidelity, exact, 4 * *st.infidelity_stderr + 0.03 * exact);
}

TEST(Mcsim, DeterministicAcrossThreads) {
  const auto code = rotated_surface_code(3);
  const NoiseModel noise{1e-2, 2, std::nullopt, NoiseChannel::depolarizing};
  const auto a = estimate(code, 0.5, logical_angle(0.5, 3), noise, 300000, 99, {4096, 1, {}});
  const auto b = estimate(code, 0.5, logical_angle(0.5, 3), noise, 300000, 99, {4096, 3, {}});
  EXPECT_EQ(a.n_accepted, b.n_accepted);
  EXPECT_EQ(a.branch_histogram, b.branch_histogram);
  EXPECT_EQ(a.n_accepted_erroneous, b.n_accepted_erroneous);
  ASSERT_TRUE(a.mean_infidelity && b.mean_infidelity);
  EXPECT_EQ(*a.mean_infidelity, *b.mean_infidelity);
  const auto c = estimate(code, 0.5, logical_angle(0.5, 3), noise, 300000, 100, {4096, 1, {}});
  EXPECT_NE(a.n_accepted, c.n_accepted);
}

TEST(Mcsim, RareEventWarning) {
  const auto code = rotated_surface_code(3);
  const NoiseModel noise{1e-4, 2, std::nullopt, NoiseChannel::depolarizing};
  const auto st = estimate(code, 0.2, logical_angle(0.2, 3), noise, 20000, 1, {});
  EXPECT_FALSE(st.warnings.empty());
}

TEST(Mcsim, Samplers) {
  Rng rng = substream(1, 0);
  const int n = 200000;
  const double th = 0.9;
  double ones = 0;
  for (int i = 0; i < n; ++i) {
    for (auto bit : sample_branch(3, th, rng)) ones += bit;
  }
  const double p = std::pow(std::sin(th / 2), 2);
  EXPECT_NEAR(ones / (3.0 * n), p, 4 * std::sqrt(p * (1 - p) / (3.0 * n)));
  double weight = 0;
  double zs = 0;
  for (int i = 0; i < n; ++i) {
    const auto e = sample_depolarizing(10, 0.05, rng);
    weight += static_cast<double>(e.weight());
    for (std::size_t q = 0; q < 10; ++q) zs += e.pauli(q) == 'Z';
  }
  EXPECT_NEAR(weight / (10.0 * n), 0.05, 4 * std::sqrt(0.05 * 0.95 / (10.0 * n)));
  EXPECT_NEAR(zs / weight, 1.0 / 3, 0.01);
}

TEST(Mcsim, SubstreamsDiffer) {
  Rng a = substream(5, 0);
  Rng b = substream(5, 1);
  Rng c = substream(5, 0);
  const auto x = a();
  EXPECT_NE(x, b());
  EXPECT_EQ(x, c());
}

TEST(Mcsim, NoiseChecks) {
  EXPECT_THROW((NoiseModel{1.5, 2, std::nullopt, NoiseChannel::depolarizing}.check()), DomainError);
  EXPECT_THROW((NoiseModel{1e-3, 0, std::nullopt, NoiseChannel::depolarizing}.check()), DomainError);
  EXPECT_EQ(noise_channel_from_string("single-z"), NoiseChannel::single_z);
  EXPECT_THROW(noise_channel_from_string("bitflip"), std::invalid_argument);
}

TEST(Mcsim, CoherentSampling) {
  const auto st = coherent_mc(5, 0.1, 0.001, 100000, 8);
  const double expected = coherent_angle_std(5, logical_angle(0.1, 5), 0.01);
  EXPECT_LT(std::abs(st.std_theta_L / expected - 1), 0.02);
  EXPECT_NEAR(st.mean_theta_L, logical_angle(0.1, 5), 5 * expected / std::sqrt(1e5) + 1e-3 * logical_angle(0.1, 5));
  const auto again = coherent_mc(5, 0.1, 0.001, 100000, 8);
  EXPECT_EQ(st.std_theta_L, again.std_theta_L);
}

}  // namespace
