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

#include "ftrot/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "ftrot/errors.hpp"

namespace ftrot {
namespace {

using nlohmann::json;

double cube(int d) { return static_cast<double>(d) * d * d; }

DistillEntry parse_entry(const json& j, const std::string& table_provenance) {
  DistillEntry e;
  try {
    e.p_in = j.at("p_in").get<double>();
    e.out_error = j.at("out_error").get<double>();
    e.cost_d3 = j.at("cost").get<double>();
    e.distance = j.at("distance").get<int>();
    e.protocol = j.value("protocol", std::string());
    e.provenance = j.value("provenance", table_provenance);
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("malformed distillation entry: ") + ex.what());
  }
  if (e.provenance.empty()) throw ConfigError("distillation entry without provenance");
  if (!(e.cost_d3 >= 0) || !(e.out_error >= 0) || !(e.p_in > 0) || e.distance < 1) {
    throw ConfigError("distillation entry with invalid values");
  }
  return e;
}

}  // namespace

double DistillEntry::qubit_cycles() const { return cost_d3 * cube(distance); }
double CostPoint::qubit_cycles() const { return cost_d3 * cube(d); }

DistillCostTable DistillCostTable::from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ConfigError(std::string("distillation table is not valid JSON: ") + ex.what());
  }
  DistillCostTable table;
  const json* entries = nullptr;
  if (doc.is_object()) {
    table.provenance = doc.value("provenance", std::string());
    if (table.provenance.empty()) throw ConfigError("distillation table without provenance");
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
      throw ConfigError("distillation table needs an 'entries' array");
    }
    entries = &doc["entries"];
  } else if (doc.is_array()) {
    entries = &doc;
  } else {
    throw ConfigError("distillation table must be a JSON object or array");
  }
  for (const auto& j : *entries) table.entries.push_back(parse_entry(j, table.provenance));
  if (table.entries.empty()) throw ConfigError("distillation table has no entries");
  std::stable_sort(table.entries.begin(), table.entries.end(),
                   [](const auto& a, const auto& b) { return a.out_error < b.out_error; });
  return table;
}

DistillCostTable DistillCostTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open distillation table '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::vector<DistillEntry> DistillCostTable::at(double p_in) const {
  std::vector<DistillEntry> out;
  for (const auto& e : entries) {
    if (std::abs(e.p_in - p_in) <= 1e-9 * std::abs(p_in)) out.push_back(e);
  }
  if (out.empty()) {
    throw ConfigError("distillation table has no entry at p_in = " + std::to_string(p_in) +
                      " (no interpolation)");
  }
  return out;
}

int rs_t_count(double theta_eps, double loglog_coeff) {
  if (!(theta_eps > 0 && theta_eps < 1)) throw DomainError("theta_eps must lie in (0, 1)");
  const double l = std::log2(1 / theta_eps);
  double n = 3 * l;
  if (loglog_coeff != 0 && l > 1) n += loglog_coeff * std::log2(l);
  return static_cast<int>(std::ceil(n - 1e-9));
}

std::optional<GateCounts> rs_table_counts(int level) {
  switch (level) {
    case 4:
      return GateCounts{15, 2, 14};
    case 7:
      return GateCounts{23, 2, 22};
    case 10:
      return GateCounts{30, 1, 30};
    default:
      return std::nullopt;
  }
}

double rs_clifford_cost(const GateCounts& counts, const CliffordCostTable& table) {
  return counts.h * table.h_cost + counts.s * table.s_cost + counts.t * table.t_cost;
}

double rs_clifford_cost(int level, const CliffordCostTable& table) {
  const auto counts = rs_table_counts(level);
  if (!counts) {
    throw ConfigError("no tabulated gate counts for 2pi/2^" + std::to_string(level) +
                      "; supply counts explicitly");
  }
  return rs_clifford_cost(*counts, table);
}

std::vector<CostPoint> rs_total(double theta_L, const DistillCostTable& distill, double p_in,
                                bool include_clifford) {
  if (!(theta_L > 0 && theta_L < 10)) throw DomainError("theta_L must be positive");
  const int n_t = rs_t_count(theta_L / 10);
  double clifford = 0;
  if (include_clifford) {
    const auto level = hierarchy_level(theta_L);
    if (!level) throw ConfigError("Clifford cost needs a 2pi/2^k target");
    clifford = rs_clifford_cost(*level);
  }
  std::vector<CostPoint> out;
  for (const auto& e : distill.at(p_in)) {
    CostPoint pt;
    pt.method = "rs";
    pt.logical_error = n_t * e.out_error;
    pt.cost_d3 = n_t * e.cost_d3 + clifford;
    pt.d = e.distance;
    pt.error_kind = "incoherent";
    pt.provenance = e.provenance;
    out.push_back(pt);
  }
  return out;
}

double coh_error_step(double eps_T, double eps_l1, double eps_l) {
  for (double e : {eps_T, eps_l1, eps_l}) {
    if (!(e >= 0 && e < 1)) throw DomainError("error rates must lie in [0, 1)");
  }
  return 8 * eps_T * eps_T + eps_l1 * eps_l1 + 0.25 * eps_l;
}

double CohCostTable::average_per_check() const { return (success + fail) / 2 + prep + t_inject; }

double CohCostTable::expected_per_check() const {
  const double p = pivot_success_probability;
  return success + fail * (1 - p) / p + (prep + t_inject) / p;
}

CohLadder coh_ladder(int target_level, double eps_T, double raw_error, double t_cost,
                     double raw_cost, const CohCostTable& table) {
  if (target_level < 4) throw DomainError("COH target level must be >= 4");
  const double p = table.pivot_success_probability;
  if (!(p > 0 && p <= 1)) throw DomainError("pivot success probability must lie in (0, 1]");
  CohLadder out;
  double err = eps_T;
  double anc = t_cost;
  double clif = 0;
  double clif_avg = 0;
  for (int level = 4; level <= target_level; ++level) {
    err = coh_error_step(eps_T, raw_error, err);
    anc = (2 * raw_cost + anc + 8 * t_cost) / p;
    clif = clif / p + table.expected_per_check();
    clif_avg += table.average_per_check();
    out.levels.push_back({level, err, anc, clif});
  }
  out.error = err;
  out.ancilla_cost = anc;
  out.clifford_expected = clif;
  out.clifford_average = clif_avg;
  return out;
}

std::optional<int> hierarchy_level(double theta_L) {
  if (!(theta_L > 0)) return std::nullopt;
  const double k = std::log2(2 * std::numbers::pi / theta_L);
  const double r = std::round(k);
  if (std::abs(k - r) > 1e-9 || r < 1) return std::nullopt;
  return static_cast<int>(r);
}

std::vector<CostPoint> pareto_front(std::vector<CostPoint> points) {
  std::stable_sort(points.begin(), points.end(), [](const CostPoint& a, const CostPoint& b) {
    if (a.logical_error != b.logical_error) return a.logical_error < b.logical_error;
    return a.qubit_cycles() < b.qubit_cycles();
  });
  std::vector<CostPoint> out;
  for (const auto& p : points) {
    if (out.empty() || p.qubit_cycles() < out.back().qubit_cycles()) out.push_back(p);
  }
  return out;
}

std::vector<CostPoint> our_method_curve(double theta_L, const std::string& family,
                                        const NoiseModel& noise, const ScaffoldBounds& bounds,
                                        CostAccounting accounting, const CostModelParams& cost) {
  std::vector<CostPoint> points;
  for (int d : bounds.d_set) {
    const StabilizerCode code = make_code(family, d);
    std::map<int, ScaffoldPlan> best;
    for (int m = 1; m <= bounds.m_max; ++m) {
      for (int k = 1; k <= bounds.k_max; ++k) {
        ScaffoldPlan plan;
        try {
          plan = evaluate_plan(theta_L, code, noise, k, m, accounting, cost);
        } catch (const DivergenceError&) {
          continue;
        }
        auto it = best.find(m * k);
        if (it == best.end() || plan_less(plan, it->second)) best[m * k] = plan;
      }
    }
    for (const auto& [product, plan] : best) {
      CostPoint pt;
      pt.method = "ours";
      pt.logical_error = plan.predicted_error;
      pt.cost_d3 = plan.expected_cost;
      pt.d = plan.d;
      pt.theta = plan.theta_base;
      pt.k = plan.k;
      pt.m = plan.m;
      pt.error_kind = "incoherent";
      pt.provenance = "analytic model";
      points.push_back(pt);
    }
  }
  return pareto_front(std::move(points));
}

std::vector<CostPoint> pareto_report(const std::vector<std::string>& methods,
                                     const BenchConfig& config) {
  for (const auto& m : methods) {
    if (m != "ours" && m != "rs" && m != "coh") {
      throw ConfigError("unknown method '" + m + "'");
    }
    if ((m == "rs" || m == "coh") && !config.distill) {
      throw ConfigError("method '" + m + "' needs a distillation cost table");
    }
  }
  std::vector<CostPoint> out;
  for (const auto& method : methods) {
    std::vector<CostPoint> pts;
    if (method == "ours") {
      pts = our_method_curve(config.theta_L, config.family, config.noise, config.bounds,
                             config.accounting, config.cost);
    } else if (method == "rs") {
      pts = pareto_front(
          rs_total(config.theta_L, *config.distill, config.noise.p_in, config.rs_include_clifford));
    } else {
      const auto level = hierarchy_level(config.theta_L);
      if (!level || *level < 4) throw ConfigError("COH needs a 2pi/2^k target with k >= 4");
      const double raw = config.coh_raw_error.value_or(config.noise.p_in);
      for (const auto& e : config.distill->at(config.noise.p_in)) {
        const CohLadder ladder = coh_ladder(*level, e.out_error, raw, e.cost_d3);
        CostPoint pt;
        pt.method = "coh";
        pt.logical_error = ladder.error;
        pt.cost_d3 = ladder.ancilla_cost + (config.coh_include_clifford ? ladder.clifford_expected : 0);
        pt.d = e.distance;
        pt.error_kind = "incoherent";
        pt.provenance = e.provenance;
        pts.push_back(pt);
      }
      pts = pareto_front(std::move(pts));
    }
    out.insert(out.end(), pts.begin(), pts.end());
  }
  return out;
}

double max_cost_gap(const std::vector<CostPoint>& ours, const std::vector<CostPoint>& rs,
                    double err_lo, double err_hi) {
  double gap = 0;
  for (const auto& p : ours) {
    if (p.logical_error < err_lo || p.logical_error > err_hi) continue;
    double cheapest = INFINITY;
    for (const auto& q : rs) {
      if (q.logical_error <= p.logical_error) cheapest = std::min(cheapest, q.qubit_cycles());
    }
    if (std::isfinite(cheapest) && p.qubit_cycles() > 0) {
      gap = std::max(gap, cheapest / p.qubit_cycles());
    }
  }
  return gap;
}

}  // namespace ftrot
