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

#include "ftrot/schemes.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "ftrot/analytics.hpp"

namespace ftrot {

WalkStats simulate_walk(int m, std::uint64_t n_walks, std::uint64_t seed) {
  if (m < 1) throw DomainError("walk target m must be >= 1");
  if (n_walks < 1) throw DomainError("n_walks must be >= 1");
  Rng rng = substream(seed, 0);
  std::bernoulli_distribution coin(0.5);
  WalkStats st;
  st.m = m;
  st.n_walks = n_walks;
  st.seed = seed;
  double mean = 0;
  double m2 = 0;
  for (std::uint64_t w = 0; w < n_walks; ++w) {
    int pos = 0;
    std::uint64_t steps = 0;
    while (pos > -m && pos < m) {
      pos += coin(rng) ? 1 : -1;
      ++steps;
    }
    (pos > 0 ? st.plus_terminal : st.minus_terminal) += 1;
    const double x = static_cast<double>(steps);
    const double delta = x - mean;
    mean += delta / static_cast<double>(w + 1);
    m2 += delta * (x - mean);
  }
  st.mean_steps = mean;
  st.std_steps = n_walks > 1 ? std::sqrt(m2 / static_cast<double>(n_walks - 1)) : 0.0;
  st.stderr_steps = st.std_steps / std::sqrt(static_cast<double>(n_walks));
  return st;
}

double ghz_expected_attempts(double p_s, int m) {
  if (m < 1) throw DomainError("m must be >= 1");
  if (!(p_s > 0 && p_s <= 1)) {
    if (p_s == 0) throw DivergenceError("zero success probability: expected attempts diverge");
    throw DomainError("success probability must lie in (0, 1]");
  }
  const double v = std::pow(p_s, -m);
  if (!std::isfinite(v)) throw DivergenceError("expected attempts overflow");
  return v;
}

void CostModelParams::check() const {
  if (d < 1) throw DomainError("cost model distance must be >= 1");
  if (qubits() <= 0 || (prep_attempt_cycles && *prep_attempt_cycles <= 0) ||
      teleport_step_cost <= 0 || ghz_merge_cost_per_leg <= 0) {
    throw DomainError("cost model parameters must be positive");
  }
}

namespace {

RotationConfig config_for(const StabilizerCode& code, double theta, const NoiseModel& noise) {
  return {theta, static_cast<int>(code.z_support.size()), noise.p_in, noise.r, 0.0};
}

double success_for(const StabilizerCode& code, double theta, const NoiseModel& noise) {
  const auto sr = success_rate(config_for(code, theta, noise), static_cast<int>(code.n),
                               static_cast<int>(code.stabilizers.size()));
  return sr.p_s;
}

}  // namespace

double prep_expected_cost(const StabilizerCode& code, double theta, const NoiseModel& noise,
                          const CostModelParams& cost) {
  cost.check();
  const double p_s = success_for(code, theta, noise);
  if (!(p_s > 1e-300)) {
    throw DivergenceError("success probability underflows (p_s = " + std::to_string(p_s) +
                          ") at theta = " + std::to_string(theta));
  }
  const double d3 = std::pow(static_cast<double>(cost.d), 3);
  return cost.qubits() * cost.cycles(noise.r) / (d3 * p_s);
}

const char* to_string(CostAccounting a) {
  return a == CostAccounting::full ? "full" : "prep-only";
}

ScaffoldPlan evaluate_plan(double theta_L, const StabilizerCode& code, const NoiseModel& noise,
                           int k, int m, CostAccounting accounting,
                           const CostModelParams& cost_template) {
  if (k < 1 || m < 1) throw DomainError("k and m must be >= 1");
  if (!(theta_L > 0 && theta_L <= std::numbers::pi)) {
    throw DomainError("target logical angle must lie in (0, pi]");
  }
  CostModelParams cost = cost_template;
  cost.d = static_cast<int>(code.d);
  const int w = static_cast<int>(code.z_support.size());

  ScaffoldPlan plan;
  plan.d = static_cast<int>(code.d);
  plan.k = k;
  plan.m = m;
  plan.theta_L = theta_L;
  plan.theta_stage = theta_L / (static_cast<double>(m) * k);
  plan.theta_base = 2 * std::atan(std::pow(std::tan(plan.theta_stage / 2), 1.0 / w));
  plan.walk_steps = walk_expected_steps(m);
  plan.p_s = success_for(code, plan.theta_base, noise);

  const double prep = prep_expected_cost(code, plan.theta_base, noise, cost);
  const double attempts = ghz_expected_attempts(plan.p_s, k) * plan.p_s;
  plan.breakdown.prep = plan.walk_steps * k * prep * attempts;
  if (accounting == CostAccounting::full) {
    if (k > 1) plan.breakdown.ghz_merge = plan.walk_steps * k * cost.ghz_merge_cost_per_leg;
    if (m > 1) plan.breakdown.teleport = plan.walk_steps * cost.teleport_step_cost;
  }
  plan.expected_cost = plan.breakdown.total();
  if (!std::isfinite(plan.expected_cost)) throw DivergenceError("plan cost diverges");

  const RotationConfig cfg = config_for(code, plan.theta_base, noise);
  const auto& mult = code.multiplicities;
  plan.eps_per_state = incoherent_error_first_order(cfg, mult.flip_projection + mult.secondary_flip) +
                       readout_error(cfg, mult.readout_combos);
  plan.predicted_error = plan.walk_steps * k * plan.eps_per_state;
  return plan;
}

bool plan_less(const ScaffoldPlan& a, const ScaffoldPlan& b) {
  return std::tie(a.expected_cost, a.predicted_error, a.d, a.m, a.k) <
         std::tie(b.expected_cost, b.predicted_error, b.d, b.m, b.k);
}

ScaffoldResult scaffold_optimize(double theta_L, const std::string& family,
                                 const NoiseModel& noise, const ScaffoldBounds& bounds,
                                 CostAccounting accounting, const CostModelParams& cost_template) {
  if (bounds.k_max < 1 || bounds.m_max < 1 || bounds.d_set.empty()) {
    throw DomainError("scaffold bounds must be non-empty");
  }
  noise.check();
  ScaffoldResult res;
  for (int d : bounds.d_set) {
    const StabilizerCode code = make_code(family, d);
    for (int m = 1; m <= bounds.m_max; ++m) {
      for (int k = 1; k <= bounds.k_max; ++k) {
        ScaffoldPlan plan;
        try {
          plan = evaluate_plan(theta_L, code, noise, k, m, accounting, cost_template);
        } catch (const DivergenceError&) {
          continue;
        }
        ++res.evaluated;
        const bool ok = !bounds.error_ceiling || plan.predicted_error <= *bounds.error_ceiling;
        if (ok) {
          if (!res.plan || plan_less(plan, *res.plan)) res.plan = plan;
        } else if (!res.best_violating ||
                   std::tie(plan.predicted_error, plan.expected_cost, plan.d, plan.m, plan.k) <
                       std::tie(res.best_violating->predicted_error,
                                res.best_violating->expected_cost, res.best_violating->d,
                                res.best_violating->m, res.best_violating->k)) {
          res.best_violating = plan;
        }
      }
    }
  }
  res.feasible = res.plan.has_value();
  if (res.feasible) res.best_violating.reset();
  return res;
}

}  // namespace ftrot
