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

#include <optional>
#include <string>
#include <vector>

#include "ftrot/mcsim.hpp"
#include "ftrot/schemes.hpp"

namespace ftrot {

/// One distilled T-state factory. cost_d3 is in units of distance^3 qubit-cycles.
struct DistillEntry {
  double p_in = 0;
  double out_error = 0;
  double cost_d3 = 0;
  int distance = 0;
  std::string protocol;
  std::string provenance;

  double qubit_cycles() const;
};

struct DistillCostTable {
  std::string provenance;
  std::vector<DistillEntry> entries;  ///< sorted by out_error

  /// Accepts {"provenance": ..., "entries": [...]} or an array whose entries carry provenance.
  static DistillCostTable from_json(const std::string& text);
  static DistillCostTable load(const std::string& path);

  /// Entries at exactly this p_in (relative tolerance 1e-9). Throws ConfigError when none.
  std::vector<DistillEntry> at(double p_in) const;
};

struct CliffordCostTable {
  double h_cost = 1;
  double s_cost = 6;
  double t_cost = 5;
};

struct GateCounts {
  int h = 0;
  int s = 0;
  int t = 0;
};

/// ceil(3 log2(1/theta_eps) + loglog_coeff * log2(log2(1/theta_eps))).
int rs_t_count(double theta_eps, double loglog_coeff = 0);

/// Tabulated synthesis counts for 2 pi / 2^level, level in {4, 7, 10}.
std::optional<GateCounts> rs_table_counts(int level);

double rs_clifford_cost(const GateCounts& counts, const CliffordCostTable& table = {});
/// Clifford cost of the tabulated row for 2 pi / 2^level. Throws ConfigError for other levels.
double rs_clifford_cost(int level, const CliffordCostTable& table = {});

struct CostPoint {
  std::string method;
  double logical_error = 0;
  double cost_d3 = 0;
  int d = 0;
  std::optional<double> theta;
  std::optional<int> k;
  std::optional<int> m;
  std::string error_kind;
  std::string provenance;

  double qubit_cycles() const;
};

/// Ross-Selinger synthesis from distilled T states: one point per table entry at p_in.
std::vector<CostPoint> rs_total(double theta_L, const DistillCostTable& distill, double p_in,
                                bool include_clifford = false);

double coh_error_step(double eps_T, double eps_l1, double eps_l);

struct CohCostTable {
  double success = 165;
  double fail = 181;
  double prep = 6;
  double reuse = -1;
  double t_inject = 8;
  double average = 187;
  double pivot_success_probability = 0.5;

  /// Mean of the success and fail rows plus preparation and T injection.
  double average_per_check() const;
  /// Geometric retries: success + fail (1 - p) / p + (prep + t_inject) / p.
  double expected_per_check() const;
};

struct CohLevel {
  int level = 0;
  double error = 0;
  double ancilla_cost = 0;
  double clifford_expected = 0;
};

struct CohLadder {
  double error = 0;
  /// Expected ancilla cost in units of t_cost.
  double ancilla_cost = 0;
  double clifford_expected = 0;
  double clifford_average = 0;
  std::vector<CohLevel> levels;
};

/// Parity-check ladder from level 3 (T) up to target_level. Each check consumes two raw
/// level-(l+1) states, one purified level-l state and 8 T states, and aborts and restarts
/// when the pivotal teleportation fails.
CohLadder coh_ladder(int target_level, double eps_T, double raw_error, double t_cost = 1,
                     double raw_cost = 0, const CohCostTable& table = {});

/// Level k with theta_L = 2 pi / 2^k, or nullopt.
std::optional<int> hierarchy_level(double theta_L);

/// Best plan per (d, m * k) from the scaffold grid, reduced to its Pareto front.
std::vector<CostPoint> our_method_curve(double theta_L, const std::string& family,
                                        const NoiseModel& noise, const ScaffoldBounds& bounds = {},
                                        CostAccounting accounting = CostAccounting::full,
                                        const CostModelParams& cost = {});

/// Points not dominated in (logical_error, qubit_cycles), sorted by logical_error.
std::vector<CostPoint> pareto_front(std::vector<CostPoint> points);

struct BenchConfig {
  double theta_L = 0;
  std::string family = "surface";
  NoiseModel noise;
  ScaffoldBounds bounds;
  CostAccounting accounting = CostAccounting::full;
  CostModelParams cost;
  std::optional<DistillCostTable> distill;
  bool rs_include_clifford = false;
  bool coh_include_clifford = false;
  std::optional<double> coh_raw_error;  ///< defaults to p_in
};

/// Methods: "ours", "rs", "coh". Rows grouped by method in request order.
std::vector<CostPoint> pareto_report(const std::vector<std::string>& methods,
                                     const BenchConfig& config);

/// Largest cost ratio rs / ours over our points in [err_lo, err_hi], comparing each of our
/// points with the cheapest RS point whose error is no larger. 0 when nothing compares.
double max_cost_gap(const std::vector<CostPoint>& ours, const std::vector<CostPoint>& rs,
                    double err_lo, double err_hi);

}  // namespace ftrot
