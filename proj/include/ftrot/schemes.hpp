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

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ftrot/errors.hpp"
#include "ftrot/mcsim.hpp"

namespace ftrot {

/// Expected first-passage time of a fair +-1 walk from 0 to +-m, from the absorption system
/// (I - P) t = 1 on the transient states -(m-1) .. m-1.
template <class Scalar = double>
Scalar walk_expected_steps(int m) {
  if (m < 1) throw DomainError("walk target m must be >= 1");
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const int n = 2 * m - 1;
  Mat a = Mat::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    if (i > 0) a(i, i - 1) -= Scalar(0.5);
    if (i + 1 < n) a(i, i + 1) -= Scalar(0.5);
  }
  const Vec t = a.partialPivLu().solve(Vec::Ones(n));
  return t(m - 1);
}

struct WalkStats {
  int m = 0;
  std::uint64_t n_walks = 0;
  double mean_steps = 0;
  double std_steps = 0;
  double stderr_steps = 0;
  /// Terminal +m needs no fix-up; -m needs a Pauli-X correction.
  std::uint64_t plus_terminal = 0;
  std::uint64_t minus_terminal = 0;
  std::uint64_t seed = 0;
};

WalkStats simulate_walk(int m, std::uint64_t n_walks, std::uint64_t seed);

/// Expected attempts p_s^-m until m parallel preparations all succeed.
double ghz_expected_attempts(double p_s, int m);

struct CostModelParams {
  int d = 3;
  /// Defaults: r + 1 cycles and 2 d^2 - 1 qubits per attempt.
  std::optional<double> prep_attempt_cycles;
  std::optional<double> prep_attempt_qubits;
  double teleport_step_cost = 2;
  double ghz_merge_cost_per_leg = 2;

  double cycles(int r) const { return prep_attempt_cycles.value_or(r + 1); }
  double qubits() const { return prep_attempt_qubits.value_or(2.0 * d * d - 1); }
  void check() const;
};

/// Expected preparation cost in d^3 units: qubits * cycles / (d^3 p_s).
double prep_expected_cost(const StabilizerCode& code, double theta, const NoiseModel& noise,
                          const CostModelParams& cost);

enum class CostAccounting {
  full,       ///< preparation + GHZ merges + teleportation steps
  prep_only,  ///< preparation attempts only
};

const char* to_string(CostAccounting a);

struct ScaffoldBreakdown {
  double prep = 0;
  double ghz_merge = 0;
  double teleport = 0;

  double total() const { return prep + ghz_merge + teleport; }
};

struct ScaffoldPlan {
  int d = 0;
  int k = 1;
  int m = 1;
  double theta_L = 0;
  double theta_stage = 0;
  double theta_base = 0;
  double walk_steps = 1;
  double p_s = 1;
  double eps_per_state = 0;
  double expected_cost = 0;
  double predicted_error = 0;
  ScaffoldBreakdown breakdown;
};

struct ScaffoldBounds {
  int k_max = 9;
  int m_max = 64;
  std::vector<int> d_set = {3, 5, 7};
  std::optional<double> error_ceiling;
};

struct ScaffoldResult {
  bool feasible = false;
  std::optional<ScaffoldPlan> plan;
  std::optional<ScaffoldPlan> best_violating;
  std::size_t evaluated = 0;
};

/// Cost and error of building R(theta_L) from k-fold GHZ stages fed into an m-step walk.
ScaffoldPlan evaluate_plan(double theta_L, const StabilizerCode& code, const NoiseModel& noise,
                           int k, int m, CostAccounting accounting,
                           const CostModelParams& cost_template = {});

/// Strict total order used to pick plans: cost, error, d, m, k.
bool plan_less(const ScaffoldPlan& a, const ScaffoldPlan& b);

ScaffoldResult scaffold_optimize(double theta_L, const std::string& family,
                                 const NoiseModel& noise, const ScaffoldBounds& bounds = {},
                                 CostAccounting accounting = CostAccounting::full,
                                 const CostModelParams& cost_template = {});

}  // namespace ftrot
