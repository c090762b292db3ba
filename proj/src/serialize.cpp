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

#include "ftrot/serialize.hpp"

#include <charconv>
#include <sstream>

namespace ftrot {

using nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

AnalyzeRow analyze_point(const StabilizerCode& code, double theta, double p_in, int r,
                         double sigma_theta) {
  const int w = static_cast<int>(code.z_support.size());
  const RotationConfig cfg{theta, w, p_in, r, sigma_theta};
  const auto& mult = code.multiplicities;
  const int d_prime = mult.flip_projection + mult.secondary_flip;
  AnalyzeRow row;
  row.theta = theta;
  row.theta_L = logical_angle(theta, w);
  row.eps_first_order = incoherent_error_first_order(cfg, d_prime);
  const auto series = incoherent_error_total(cfg, binomial_multiplicity(d_prime));
  row.eps_total = series.value;
  row.substrate_limited = series.substrate_limited;
  row.eps_readout = readout_error(cfg, mult.readout_combos);
  row.success = success_rate(cfg, static_cast<int>(code.n), static_cast<int>(code.stabilizers.size()));
  row.coherent_std = theta > 0 ? coherent_angle_std(w, row.theta_L, sigma_theta / theta) : 0.0;
  return row;
}

std::string analyze_csv(const std::vector<AnalyzeRow>& rows) {
  std::ostringstream out;
  out << "theta,theta_L,eps_first_order,eps_total,eps_readout,p_s,p_s_in,p_s_coh,coherent_std\n";
  for (const auto& r : rows) {
    out << format_double(r.theta) << ',' << format_double(r.theta_L) << ','
        << format_double(r.eps_first_order) << ',' << format_double(r.eps_total) << ','
        << format_double(r.eps_readout) << ',' << format_double(r.success.p_s) << ','
        << format_double(r.success.p_s_in) << ',' << format_double(r.success.p_s_coh) << ','
        << format_double(r.coherent_std) << '\n';
  }
  return out.str();
}

ordered_json to_json(const AnalyzeRow& r) {
  return {{"theta", r.theta},
          {"theta_L", r.theta_L},
          {"eps_first_order", r.eps_first_order},
          {"eps_total", r.eps_total},
          {"eps_readout", r.eps_readout},
          {"p_s", r.success.p_s},
          {"p_s_in", r.success.p_s_in},
          {"p_s_coh", r.success.p_s_coh},
          {"coherent_std", r.coherent_std},
          {"substrate_limited", r.substrate_limited}};
}

ordered_json to_json(const StabilizerCode& code) {
  auto labels = [](const std::vector<PauliString>& ps) {
    ordered_json a = ordered_json::array();
    for (const auto& p : ps) a.push_back(p.label());
    return a;
  };
  return {{"name", code.name},
          {"n", code.n},
          {"k", code.k},
          {"d", code.d},
          {"distance_kind", code.distance_kind == DistanceKind::full ? "full" : "z_only"},
          {"stabilizers", labels(code.stabilizers)},
          {"logical_z", labels(code.logical_z)},
          {"logical_x", labels(code.logical_x)},
          {"z_support", code.z_support},
          {"noncommuting", code.noncommuting},
          {"error_multiplicities",
           {{"flip_projection", code.multiplicities.flip_projection},
            {"secondary_flip", code.multiplicities.secondary_flip},
            {"readout_combos", code.multiplicities.readout_combos}}}};
}

ordered_json to_json(const ValidationReport& rep) {
  auto opt = [](const std::optional<std::size_t>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  ordered_json j{{"ok", rep.ok}, {"failures", rep.failures}, {"distance_checked", rep.distance_checked}};
  if (rep.distance_checked) {
    j["distance"] = {{"full", opt(rep.distance.full)},
                     {"z_only", opt(rep.distance.z_only)},
                     {"x_only", opt(rep.distance.x_only)}};
  }
  return j;
}

ordered_json to_json(const McStats& st) {
  auto opt = [](const std::optional<double>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  const auto& p = st.params;
  return {{"trials", st.n_trials},
          {"accepted", st.n_accepted},
          {"acceptance_rate", st.acceptance_rate},
          {"acceptance_stderr", st.acceptance_stderr},
          {"mean_infidelity", opt(st.mean_infidelity)},
          {"infidelity_stderr", opt(st.infidelity_stderr)},
          {"accepted_erroneous", st.n_accepted_erroneous},
          {"branch_histogram", st.branch_histogram},
          {"seed", st.seed},
          {"params",
           {{"code", p.code},
            {"d", p.d},
            {"theta", p.theta},
            {"theta_L_target", p.theta_L_target},
            {"p_in", p.noise.p_in},
            {"r", p.noise.r},
            {"readout_flip", p.noise.readout()},
            {"channel", to_string(p.noise.channel)},
            {"batch_size", p.batch_size}}},
          {"warnings", st.warnings}};
}

ordered_json to_json(const WalkStats& st) {
  return {{"m", st.m},
          {"walks", st.n_walks},
          {"mean_steps", st.mean_steps},
          {"std_steps", st.std_steps},
          {"stderr_steps", st.stderr_steps},
          {"expected_steps", walk_expected_steps(st.m)},
          {"plus_terminal", st.plus_terminal},
          {"minus_terminal", st.minus_terminal},
          {"seed", st.seed}};
}

ordered_json to_json(const ScaffoldPlan& plan) {
  return {{"d", plan.d},
          {"k", plan.k},
          {"m", plan.m},
          {"theta_L", plan.theta_L},
          {"theta_stage", plan.theta_stage},
          {"theta_base", plan.theta_base},
          {"walk_steps", plan.walk_steps},
          {"p_s", plan.p_s},
          {"eps_per_state", plan.eps_per_state},
          {"expected_cost", plan.expected_cost},
          {"predicted_error", plan.predicted_error},
          {"breakdown",
           {{"prep", plan.breakdown.prep},
            {"ghz_merge", plan.breakdown.ghz_merge},
            {"teleport", plan.breakdown.teleport}}}};
}

ordered_json to_json(const ScaffoldResult& res) {
  ordered_json j{{"feasible", res.feasible}, {"evaluated", res.evaluated}};
  j["plan"] = res.plan ? to_json(*res.plan) : ordered_json(nullptr);
  j["best_violating"] = res.best_violating ? to_json(*res.best_violating) : ordered_json(nullptr);
  return j;
}

ordered_json to_json(const CostPoint& pt) {
  auto opt_d = [](const std::optional<double>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  auto opt_i = [](const std::optional<int>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  return {{"method", pt.method},
          {"logical_error", pt.logical_error},
          {"cost_d3", pt.cost_d3},
          {"d", pt.d},
          {"theta", opt_d(pt.theta)},
          {"k", opt_i(pt.k)},
          {"m", opt_i(pt.m)},
          {"error_kind", pt.error_kind},
          {"qubit_cycles", pt.qubit_cycles()},
          {"provenance", pt.provenance}};
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string cost_points_csv(const std::vector<CostPoint>& points) {
  std::ostringstream out;
  out << "method,logical_error,cost_d3,d,theta,k,m,error_kind,qubit_cycles,provenance\n";
  for (const auto& p : points) {
    out << p.method << ',' << format_double(p.logical_error) << ',' << format_double(p.cost_d3)
        << ',' << p.d << ',' << (p.theta ? format_double(*p.theta) : "") << ','
        << (p.k ? std::to_string(*p.k) : "") << ',' << (p.m ? std::to_string(*p.m) : "") << ','
        << p.error_kind << ',' << format_double(p.qubit_cycles()) << ','
        << csv_quote(p.provenance) << '\n';
  }
  return out.str();
}

}  // namespace ftrot
