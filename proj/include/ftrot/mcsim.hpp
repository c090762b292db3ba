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

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ftrot/codes.hpp"
#include "ftrot/pauli.hpp"

namespace ftrot {

using Rng = std::mt19937_64;

/// Stream for batch `index` of a run seeded with `seed`.
Rng substream(std::uint64_t seed, std::uint64_t index);

enum class NoiseChannel {
  depolarizing,  ///< X, Y, Z each with p_in / 3 per qubit per cycle
  dephasing,     ///< Z with p_in per qubit per cycle
  single_z,      ///< exactly one Z on a uniformly chosen data qubit, first cycle only
};

const char* to_string(NoiseChannel c);
NoiseChannel noise_channel_from_string(const std::string& s);

struct NoiseModel {
  double p_in = 0;
  int r = 1;
  /// Outcome-flip probability per generator per cycle; 2 p_in / 3 when unset.
  std::optional<double> readout_flip;
  NoiseChannel channel = NoiseChannel::depolarizing;

  double readout() const { return readout_flip.value_or(2 * p_in / 3); }
  void check() const;
};

struct TrialOutcome {
  bool accepted = false;
  int branch_weight = 0;
  /// Frame carries logical X (mirrors the branch angle) or logical Z content.
  bool logical_x = false;
  bool logical_z = false;
  double infidelity_sample = 0;
};

/// Bits b_j ~ Bernoulli(sin^2(theta/2)), j < d.
std::vector<std::uint8_t> sample_branch(int d, double theta, Rng& rng);

/// Each qubit: I w.p. 1 - p, else X, Y or Z uniformly.
PauliString sample_depolarizing(std::size_t n, double p_in, Rng& rng);

/// Frame + syndrome simulation of one code, rotation angle and noise model.
class PrepSimulator {
 public:
  PrepSimulator(const StabilizerCode& code, double theta, double theta_L_target,
                const NoiseModel& noise);

  TrialOutcome run(Rng& rng) const;

  /// Deterministic trial: branch bits over z_support, data errors per cycle, readout flips
  /// per cycle (one entry per generator). Missing cycles mean no error.
  TrialOutcome evaluate(const std::vector<std::uint8_t>& b,
                        const std::vector<PauliString>& cycle_errors,
                        const std::vector<std::vector<std::uint8_t>>& readout_flips) const;

  /// Infidelity of an accepted trial in weight class m with the given logical content.
  double infidelity(int m, bool logical_x, bool logical_z) const;

  const StabilizerCode& code() const { return code_; }
  int max_weight_class() const { return d_ / 2; }

 private:
  struct Impl;
  StabilizerCode code_;
  double theta_;
  double target_;
  NoiseModel noise_;
  int d_;
  std::vector<double> inf_table_;
  std::shared_ptr<const Impl> impl_;
};

TrialOutcome run_prep_trial(const StabilizerCode& code, double theta, const NoiseModel& noise,
                            Rng& rng);

struct McOptions {
  std::uint64_t batch_size = std::uint64_t{1} << 16;
  unsigned threads = 0;  ///< 0 = hardware concurrency
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

struct McParams {
  std::string code;
  int d = 0;
  double theta = 0;
  double theta_L_target = 0;
  NoiseModel noise;
  std::uint64_t batch_size = 0;
};

struct McStats {
  std::uint64_t n_trials = 0;
  std::uint64_t n_accepted = 0;
  double acceptance_rate = 0;
  double acceptance_stderr = 0;
  std::optional<double> mean_infidelity;
  std::optional<double> infidelity_stderr;
  std::vector<std::uint64_t> branch_histogram;
  /// Accepted trials outside the trivial branch or carrying a logical error.
  std::uint64_t n_accepted_erroneous = 0;
  std::uint64_t seed = 0;
  McParams params;
  std::vector<std::string> warnings;
};

McStats estimate(const StabilizerCode& code, double theta, double theta_L_target,
                 const NoiseModel& noise, std::uint64_t n_trials, std::uint64_t seed,
                 const McOptions& options = {});

struct SingleFaultExpectation {
  double acceptance = 0;
  /// Accepted infidelity per trial.
  double error_mass = 0;
  std::optional<double> mean_infidelity;
};

/// Exact expectation of the single-z channel with readout flips off: one Z on each data
/// qubit with weight 1/n against all 2^d branch patterns. Requires d <= 24.
SingleFaultExpectation single_z_exact(const StabilizerCode& code, double theta,
                                      double theta_L_target, int r = 1);

struct CoherentStats {
  double mean_theta_L = 0;
  double std_theta_L = 0;
  std::uint64_t n_samples = 0;
};

/// Samples theta_i = theta + N(0, sigma_theta^2) on d qubits and evaluates the product-form
/// logical angle 2 asin(prod sin / sqrt(prod cos^2 + prod sin^2)).
CoherentStats coherent_mc(int d, double theta, double sigma_theta, std::uint64_t n_samples,
                          std::uint64_t seed);

}  // namespace ftrot
