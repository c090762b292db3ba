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

// Batch driver: codes, analyze, simulate, walk, scaffold, bench.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ftrot/analytics.hpp"
#include "ftrot/angle_parse.hpp"
#include "ftrot/bench.hpp"
#include "ftrot/codes.hpp"
#include "ftrot/errors.hpp"
#include "ftrot/mcsim.hpp"
#include "ftrot/schemes.hpp"
#include "ftrot/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDiverged = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string path;
  std::string format = "json";

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
  }
  void write(const nlohmann::ordered_json& j) const { write(j.dump(2) + "\n"); }
};

void add_output(CLI::App* cmd, Output& out, bool csv_default) {
  out.format = csv_default ? "csv" : "json";
  cmd->add_option("--out", out.path, "Output file (default: stdout)");
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("malformed integer list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

std::vector<std::string> parse_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct NoiseFlags {
  double p_in = 1e-3;
  int r = 2;
  std::optional<double> readout_flip;
  std::string channel = "depolarizing";

  void add(CLI::App* cmd, bool with_channel) {
    cmd->add_option("--p-in", p_in, "Physical error probability per qubit per cycle")
        ->capture_default_str();
    cmd->add_option("--r", r, "Detection cycles")->capture_default_str();
    cmd->add_option("--readout-flip", readout_flip, "Outcome flip probability (default 2p/3)");
    if (with_channel) {
      cmd->add_option("--channel", channel, "Noise channel")
          ->check(CLI::IsMember({"depolarizing", "dephasing", "single-z"}))
          ->capture_default_str();
    }
  }
  ftrot::NoiseModel model() const {
    ftrot::NoiseModel nm;
    nm.p_in = p_in;
    nm.r = r;
    nm.readout_flip = readout_flip;
    nm.channel = ftrot::noise_channel_from_string(channel);
    nm.check();
    return nm;
  }
};

void progress_line(std::uint64_t done, std::uint64_t total) {
  static int last = -1;
  const int pct = static_cast<int>(100.0 * static_cast<double>(done) / static_cast<double>(total));
  if (pct / 10 != last / 10 || done == total) {
    last = pct;
    std::cerr << "progress " << done << "/" << total << " (" << pct << "%)\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Post-selected rotation-state preparation: analytics, Monte-Carlo and benchmarks"};
  app.require_subcommand(1);

  // codes
  auto* codes = app.add_subcommand("codes", "List, validate or export stabilizer codes");
  std::string codes_action;
  std::string code_name = "surface";
  int code_d = 3;
  Output codes_out;
  codes->add_option("action", codes_action, "list | validate | export")
      ->required()
      ->check(CLI::IsMember({"list", "validate", "export"}));
  codes->add_option("--code", code_name, "Code family")->capture_default_str();
  codes->add_option("--d", code_d, "Distance (phase-flip, surface)")->capture_default_str();
  codes->add_option("--out", codes_out.path, "Output file (default: stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Closed-form error and success-rate curves");
  std::string an_code = "surface";
  int an_d = 3;
  std::string an_theta = "0.05:1.0:20";
  double an_sigma = 0;
  NoiseFlags an_noise;
  Output an_out;
  analyze->add_option("--code", an_code, "Code family")->capture_default_str();
  analyze->add_option("--d", an_d, "Distance")->capture_default_str();
  analyze->add_option("--theta", an_theta, "Angle range start:stop:steps")->capture_default_str();
  analyze->add_option("--sigma", an_sigma, "Per-qubit coherent angle std (radians)")
      ->capture_default_str();
  an_noise.add(analyze, false);
  add_output(analyze, an_out, true);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo estimate of acceptance and infidelity");
  std::string sim_code = "surface";
  int sim_d = 3;
  std::string sim_theta = "0.5";
  std::string sim_target;
  std::uint64_t sim_trials = 1000000;
  std::optional<std::uint64_t> sim_seed;
  unsigned sim_threads = 0;
  std::uint64_t sim_batch = std::uint64_t{1} << 16;
  bool sim_quiet = false;
  NoiseFlags sim_noise;
  Output sim_out;
  simulate->add_option("--code", sim_code, "phase-flip | surface")->capture_default_str();
  simulate->add_option("--d", sim_d, "Distance")->capture_default_str();
  simulate->add_option("--theta", sim_theta, "Physical rotation angle")->capture_default_str();
  simulate->add_option("--target", sim_target, "Target logical angle (default: ideal)");
  simulate->add_option("--trials,-N", sim_trials, "Number of trials")->capture_default_str();
  simulate->add_option("--seed", sim_seed, "64-bit seed (generated and recorded if absent)");
  simulate->add_option("--threads", sim_threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  simulate->add_option("--batch-size", sim_batch, "Trials per substream batch")
      ->capture_default_str();
  simulate->add_flag("--quiet", sim_quiet, "No progress on stderr");
  sim_noise.add(simulate, true);
  simulate->add_option("--out", sim_out.path, "Output file (default: stdout)");

  // walk
  auto* walk = app.add_subcommand("walk", "Teleportation random walk");
  int walk_m = 3;
  std::uint64_t walk_n = 1000000;
  std::optional<std::uint64_t> walk_seed;
  Output walk_out;
  walk->add_option("--m", walk_m, "Walk half-width")->capture_default_str();
  walk->add_option("--walks,-N", walk_n, "Number of walks")->capture_default_str();
  walk->add_option("--seed", walk_seed, "64-bit seed (generated and recorded if absent)");
  walk->add_option("--out", walk_out.path, "Output file (default: stdout)");

  // scaffold
  auto* scaffold = app.add_subcommand("scaffold", "Rotation-scaffolding cost optimizer");
  std::string sc_theta = "2pi/2^10";
  std::string sc_code = "surface";
  int sc_kmax = 9;
  int sc_mmax = 64;
  std::string sc_dset = "3,5,7";
  std::optional<double> sc_ceiling;
  std::string sc_accounting = "full";
  NoiseFlags sc_noise;
  Output sc_out;
  scaffold->add_option("--theta-L", sc_theta, "Target logical angle")->capture_default_str();
  scaffold->add_option("--code", sc_code, "Code family")->capture_default_str();
  scaffold->add_option("--k-max", sc_kmax, "Maximum GHZ fan-in")->capture_default_str();
  scaffold->add_option("--m-max", sc_mmax, "Maximum walk ratio")->capture_default_str();
  scaffold->add_option("--d-set", sc_dset, "Comma-separated distances")->capture_default_str();
  scaffold->add_option("--ceiling", sc_ceiling, "Error ceiling");
  scaffold->add_option("--accounting", sc_accounting, "full | prep-only")
      ->check(CLI::IsMember({"full", "prep-only"}))
      ->capture_default_str();
  sc_noise.add(scaffold, false);
  scaffold->add_option("--out", sc_out.path, "Output file (default: stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "Cost/error comparison against RS and COH");
  std::string b_methods = "ours";
  std::string b_theta = "2pi/2^10";
  std::string b_code = "surface";
  std::string b_distill;
  int b_kmax = 9;
  int b_mmax = 64;
  std::string b_dset = "3,5,7";
  std::string b_accounting = "full";
  bool b_rs_clifford = false;
  bool b_coh_clifford = false;
  std::optional<double> b_coh_raw;
  NoiseFlags b_noise;
  Output b_out;
  bench->add_option("--methods", b_methods, "Comma-separated: ours, rs, coh")->capture_default_str();
  bench->add_option("--theta-L", b_theta, "Target logical angle")->capture_default_str();
  bench->add_option("--code", b_code, "Code family for our method")->capture_default_str();
  bench->add_option("--distill-costs", b_distill, "Distillation cost table (JSON)");
  bench->add_option("--k-max", b_kmax, "Maximum GHZ fan-in")->capture_default_str();
  bench->add_option("--m-max", b_mmax, "Maximum walk ratio")->capture_default_str();
  bench->add_option("--d-set", b_dset, "Comma-separated distances")->capture_default_str();
  bench->add_option("--accounting", b_accounting, "full | prep-only")
      ->check(CLI::IsMember({"full", "prep-only"}))
      ->capture_default_str();
  bench->add_flag("--rs-clifford", b_rs_clifford, "Add tabulated Clifford cost to RS points");
  bench->add_flag("--coh-clifford", b_coh_clifford, "Add expected Clifford cost to COH points");
  bench->add_option("--coh-raw-error", b_coh_raw, "Raw state error for COH (default p_in)");
  b_noise.add(bench, false);
  add_output(bench, b_out, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (codes->parsed()) {
      if (codes_action == "list") {
        std::string text;
        for (const auto& name : ftrot::code_families()) text += name + "\n";
        codes_out.write(text);
        return kExitOk;
      }
      const ftrot::StabilizerCode code = ftrot::make_code(code_name, code_d);
      if (codes_action == "export") {
        codes_out.write(ftrot::to_json(code));
        return kExitOk;
      }
      const auto rep = ftrot::validate(code);
      nlohmann::ordered_json j = ftrot::to_json(rep);
      j["code"] = code.name;
      j["d"] = code.d;
      codes_out.write(j);
      return rep.ok ? kExitOk : kExitValidation;
    }

    if (analyze->parsed()) {
      const ftrot::StabilizerCode code = ftrot::make_code(an_code, an_d);
      std::vector<ftrot::AnalyzeRow> rows;
      for (double th : ftrot::parse_range(an_theta)) {
        rows.push_back(ftrot::analyze_point(code, th, an_noise.p_in, an_noise.r, an_sigma));
      }
      if (an_out.format == "csv") {
        an_out.write(ftrot::analyze_csv(rows));
      } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) arr.push_back(ftrot::to_json(r));
        an_out.write(arr);
      }
      return kExitOk;
    }

    if (simulate->parsed()) {
      if (sim_trials == 0) throw UsageError("--trials must be positive");
      if (sim_batch == 0) throw UsageError("--batch-size must be positive");
      const ftrot::StabilizerCode code = ftrot::make_code(sim_code, sim_d);
      const double theta = ftrot::parse_angle(sim_theta);
      const int w = static_cast<int>(code.z_support.size());
      const double target =
          sim_target.empty() ? ftrot::logical_angle(theta, w) : ftrot::parse_angle(sim_target);
      ftrot::McOptions opts;
      opts.batch_size = sim_batch;
      opts.threads = sim_threads;
      if (!sim_quiet) opts.progress = progress_line;
      const auto st = ftrot::estimate(code, theta, target, sim_noise.model(), sim_trials,
                                      resolve_seed(sim_seed), opts);
      for (const auto& w : st.warnings) std::cerr << "warning: " << w << "\n";
      sim_out.write(ftrot::to_json(st));
      return kExitOk;
    }

    if (walk->parsed()) {
      if (walk_n == 0) throw UsageError("--walks must be positive");
      walk_out.write(ftrot::to_json(ftrot::simulate_walk(walk_m, walk_n, resolve_seed(walk_seed))));
      return kExitOk;
    }

    if (scaffold->parsed()) {
      ftrot::ScaffoldBounds bounds;
      bounds.k_max = sc_kmax;
      bounds.m_max = sc_mmax;
      bounds.d_set = parse_int_list(sc_dset);
      bounds.error_ceiling = sc_ceiling;
      const auto accounting =
          sc_accounting == "full" ? ftrot::CostAccounting::full : ftrot::CostAccounting::prep_only;
      const auto res = ftrot::scaffold_optimize(ftrot::parse_angle(sc_theta), sc_code,
                                                sc_noise.model(), bounds, accounting);
      nlohmann::ordered_json j = ftrot::to_json(res);
      j["accounting"] = ftrot::to_string(accounting);
      sc_out.write(j);
      return res.feasible ? kExitOk : kExitDiverged;
    }

    if (bench->parsed()) {
      ftrot::BenchConfig cfg;
      cfg.theta_L = ftrot::parse_angle(b_theta);
      cfg.family = b_code;
      cfg.noise = b_noise.model();
      cfg.bounds.k_max = b_kmax;
      cfg.bounds.m_max = b_mmax;
      cfg.bounds.d_set = parse_int_list(b_dset);
      cfg.accounting =
          b_accounting == "full" ? ftrot::CostAccounting::full : ftrot::CostAccounting::prep_only;
      cfg.rs_include_clifford = b_rs_clifford;
      cfg.coh_include_clifford = b_coh_clifford;
      cfg.coh_raw_error = b_coh_raw;
      if (!b_distill.empty()) cfg.distill = ftrot::DistillCostTable::load(b_distill);
      const auto points = ftrot::pareto_report(parse_list(b_methods), cfg);
      if (b_out.format == "csv") {
        b_out.write(ftrot::cost_points_csv(points));
      } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& p : points) arr.push_back(ftrot::to_json(p));
        b_out.write(arr);
      }
      return kExitOk;
    }
  } catch (const ftrot::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDiverged;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
