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

#include "ftrot/mcsim.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bitset>
#include <charconv>
#include <cmath>
#include <mutex>
#include <numbers>
#include <thread>
#include <unordered_map>

#include "ftrot/analytics.hpp"
#include "ftrot/errors.hpp"

namespace ftrot {
namespace {

constexpr std::size_t kMaxGenerators = 256;
using Bits = std::bitset<kMaxGenerators>;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

/// Calls f(i) for each slot i < n hit independently with probability p.
template <class F>
void for_each_hit(std::size_t n, const std::geometric_distribution<std::uint64_t>::param_type* param,
                  double p, Rng& rng, F&& f) {
  if (p <= 0 || n == 0) return;
  if (p >= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  thread_local std::geometric_distribution<std::uint64_t> geo;
  std::uint64_t pos = geo(rng, *param);
  while (pos < n) {
    f(static_cast<std::size_t>(pos));
    pos += 1 + geo(rng, *param);
  }
}

using GeoParam = std::geometric_distribution<std::uint64_t>::param_type;

std::optional<GeoParam> geo_param(double p) {
  if (p <= 0 || p >= 1) return std::nullopt;
  return GeoParam(p);
}

int type_index(char p) { return p == 'X' ? 0 : (p == 'Y' ? 1 : 2); }

}  // namespace

Rng substream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

const char* to_string(NoiseChannel c) {
  switch (c) {
    case NoiseChannel::depolarizing:
      return "depolarizing";
    case NoiseChannel::dephasing:
      return "dephasing";
    case NoiseChannel::single_z:
      return "single-z";
  }
  return "?";
}

NoiseChannel noise_channel_from_string(const std::string& s) {
  if (s == "depolarizing") return NoiseChannel::depolarizing;
  if (s == "dephasing") return NoiseChannel::dephasing;
  if (s == "single-z") return NoiseChannel::single_z;
  throw UnsupportedParameter("unknown noise channel '" + s + "'");
}

void NoiseModel::check() const {
  if (!(p_in >= 0 && p_in <= 1)) throw DomainError("p_in must lie in [0, 1]");
  if (r < 1) throw DomainError("detection cycles r must be >= 1");
  const double q = readout();
  if (!(q >= 0 && q <= 1)) throw DomainError("readout flip probability must lie in [0, 1]");
}

std::vector<std::uint8_t> sample_branch(int d, double theta, Rng& rng) {
  if (d < 1) throw DomainError("d must be >= 1");
  const double s = std::sin(theta / 2);
  const double p = s * s;
  std::vector<std::uint8_t> b(static_cast<std::size_t>(d), 0);
  const auto param = geo_param(p);
  for_each_hit(b.size(), param ? &*param : nullptr, p, rng, [&](std::size_t i) { b[i] = 1; });
  return b;
}

PauliString sample_depolarizing(std::size_t n, double p_in, Rng& rng) {
  PauliString out(n);
  const auto param = geo_param(p_in);
  std::uniform_int_distribution<int> kind(0, 2);
  for_each_hit(n, param ? &*param : nullptr, p_in, rng,
               [&](std::size_t q) { out.set(q, "XYZ"[kind(rng)]); });
  return out;
}

struct PrepSimulator::Impl {
  std::size_t n = 0;
  std::size_t n_gen = 0;
  std::vector<std::size_t> support;
  // Syndrome bits flipped by an X / Z on each qubit.
  std::vector<Bits> xcol;
  std::vector<Bits> zcol;
  // Whether error type t (X, Y, Z) on qubit q anticommutes with Z_L / X_L.
  std::vector<std::array<std::uint8_t, 3>> anti_zl;
  std::vector<std::array<std::uint8_t, 3>> anti_xl;
  std::uint8_t support_xl_parity = 0;
  double p_branch = 0;
  double p_data = 0;
  double p_readout = 0;
  std::optional<GeoParam> g_branch;
  std::optional<GeoParam> g_data;
  std::optional<GeoParam> g_readout;
  // Residual syndrome -> (anticommutes with Z_L) | (anticommutes with X_L) << 1 of a
  // minimum-weight Pauli with that syndrome, weights 1 and 2.
  std::unordered_map<Bits, std::uint8_t> decoder;

  std::uint8_t correction(const Bits& residual) const {
    if (residual.none()) return 0;
    const auto it = decoder.find(residual);
    return it == decoder.end() ? 0 : it->second;
  }
};

PrepSimulator::PrepSimulator(const StabilizerCode& code, double theta, double theta_L_target,
                             const NoiseModel& noise)
    : code_(code), theta_(theta), target_(theta_L_target), noise_(noise) {
  if (code.name != "phase-flip" && code.name != "surface") {
    throw UnsupportedParameter("Monte-Carlo supports the phase-flip and surface codes, not '" +
                               code.name + "'");
  }
  if (code.stabilizers.size() > kMaxGenerators) {
    throw UnsupportedParameter("code has more than " + std::to_string(kMaxGenerators) +
                               " generators");
  }
  noise.check();
  d_ = static_cast<int>(code.z_support.size());
  // Validate theta through the analytic domain check.
  (void)logical_angle(theta, d_);

  auto impl = std::make_shared<Impl>();
  impl->n = code.n;
  impl->n_gen = code.stabilizers.size();
  impl->support = code.z_support;
  impl->xcol.assign(code.n, Bits{});
  impl->zcol.assign(code.n, Bits{});
  impl->anti_zl.assign(code.n, {0, 0, 0});
  impl->anti_xl.assign(code.n, {0, 0, 0});
  for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
    const auto& s = code.stabilizers[i];
    for (std::size_t q = 0; q < code.n; ++q) {
      if (s.z(q)) impl->xcol[q].set(i);
      if (s.x(q)) impl->zcol[q].set(i);
    }
  }
  const auto& zl = code.logical_z.front();
  const auto& xl = code.logical_x.front();
  for (std::size_t q = 0; q < code.n; ++q) {
    for (char t : {'X', 'Y', 'Z'}) {
      const PauliString e = PauliString::single(code.n, q, t);
      impl->anti_zl[q][type_index(t)] = commutes(e, zl) ? 0 : 1;
      impl->anti_xl[q][type_index(t)] = commutes(e, xl) ? 0 : 1;
    }
  }
  for (std::size_t q : impl->support) impl->support_xl_parity ^= impl->anti_xl[q][2];
  auto column = [&](std::size_t q, int t) {
    Bits b;
    if (t != 2) b ^= impl->xcol[q];
    if (t != 0) b ^= impl->zcol[q];
    return b;
  };
  auto logical_bits = [&](std::size_t q, int t) {
    return static_cast<std::uint8_t>(impl->anti_zl[q][t] | (impl->anti_xl[q][t] << 1));
  };
  for (std::size_t q = 0; q < code.n; ++q) {
    for (int t = 0; t < 3; ++t) impl->decoder.emplace(column(q, t), logical_bits(q, t));
  }
  for (std::size_t q1 = 0; q1 < code.n; ++q1) {
    for (std::size_t q2 = q1 + 1; q2 < code.n; ++q2) {
      for (int t1 = 0; t1 < 3; ++t1) {
        for (int t2 = 0; t2 < 3; ++t2) {
          impl->decoder.emplace(column(q1, t1) ^ column(q2, t2),
                                logical_bits(q1, t1) ^ logical_bits(q2, t2));
        }
      }
    }
  }

  const double s = std::sin(theta / 2);
  impl->p_branch = s * s;
  impl->p_data = noise.p_in;
  impl->p_readout = noise.readout();
  impl->g_branch = geo_param(impl->p_branch);
  impl->g_data = geo_param(impl->p_data);
  impl->g_readout = geo_param(impl->p_readout);
  impl_ = std::move(impl);

  const int classes = d_ / 2 + 1;
  inf_table_.assign(static_cast<std::size_t>(classes) * 4, 0.0);
  for (int m = 0; m < classes; ++m) {
    const double phi = branch_angle(m, d_, theta);
    for (int lx = 0; lx < 2; ++lx) {
      for (int lz = 0; lz < 2; ++lz) {
        const double delta = target_ - (lx ? -phi : phi);
        const double v = lz ? std::cos(delta / 2) : std::sin(delta / 2);
        inf_table_[static_cast<std::size_t>(m) * 4 + lx * 2 + lz] = v * v;
      }
    }
  }
}

double PrepSimulator::infidelity(int m, bool logical_x, bool logical_z) const {
  return inf_table_.at(static_cast<std::size_t>(m) * 4 + (logical_x ? 2 : 0) + (logical_z ? 1 : 0));
}

namespace {

struct FrameState {
  Bits syn_b;
  Bits frame;
  std::uint8_t b_xl_parity = 0;
  std::uint8_t frame_zl = 0;
  std::uint8_t frame_xl = 0;
  int b_weight = 0;
};

}  // namespace

TrialOutcome PrepSimulator::run(Rng& rng) const {
  const Impl& im = *impl_;
  FrameState st;
  const GeoParam* gb = im.g_branch ? &*im.g_branch : nullptr;
  const GeoParam* gd = im.g_data ? &*im.g_data : nullptr;
  const GeoParam* gr = im.g_readout ? &*im.g_readout : nullptr;

  for_each_hit(im.support.size(), gb, im.p_branch, rng, [&](std::size_t j) {
    const std::size_t q = im.support[j];
    st.syn_b ^= im.zcol[q];
    st.b_xl_parity ^= im.anti_xl[q][2];
    ++st.b_weight;
  });

  auto apply = [&](std::size_t q, int t) {
    if (t != 2) st.frame ^= im.xcol[q];
    if (t != 0) st.frame ^= im.zcol[q];
    st.frame_zl ^= im.anti_zl[q][t];
    st.frame_xl ^= im.anti_xl[q][t];
  };

  std::uniform_int_distribution<int> kind(0, 2);
  for (int cycle = 0; cycle < noise_.r; ++cycle) {
    switch (noise_.channel) {
      case NoiseChannel::depolarizing:
        for_each_hit(im.n, gd, im.p_data, rng, [&](std::size_t q) { apply(q, kind(rng)); });
        break;
      case NoiseChannel::dephasing:
        for_each_hit(im.n, gd, im.p_data, rng, [&](std::size_t q) { apply(q, 2); });
        break;
      case NoiseChannel::single_z:
        if (cycle == 0) {
          std::uniform_int_distribution<std::size_t> pick(0, im.n - 1);
          apply(pick(rng), 2);
        }
        break;
    }
    Bits observed = st.frame ^ st.syn_b;
    for_each_hit(im.n_gen, gr, im.p_readout, rng, [&](std::size_t i) { observed.flip(i); });
    if (observed.any()) return {};
  }

  TrialOutcome out;
  out.accepted = true;
  const bool complement = 2 * st.b_weight > d_;
  out.branch_weight = complement ? d_ - st.b_weight : st.b_weight;
  const std::uint8_t bmin_xl = complement ? (st.b_xl_parity ^ im.support_xl_parity) : st.b_xl_parity;
  const std::uint8_t fix = im.correction(st.frame ^ st.syn_b);
  out.logical_x = (st.frame_zl ^ (fix & 1)) != 0;
  out.logical_z = (st.frame_xl ^ bmin_xl ^ (fix >> 1)) != 0;
  out.infidelity_sample = infidelity(out.branch_weight, out.logical_x, out.logical_z);
  return out;
}

TrialOutcome PrepSimulator::evaluate(
    const std::vector<std::uint8_t>& b, const std::vector<PauliString>& cycle_errors,
    const std::vector<std::vector<std::uint8_t>>& readout_flips) const {
  const Impl& im = *impl_;
  if (b.size() != im.support.size()) throw DimensionError("branch pattern length != d");
  FrameState st;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!b[j]) continue;
    const std::size_t q = im.support[j];
    st.syn_b ^= im.zcol[q];
    st.b_xl_parity ^= im.anti_xl[q][2];
    ++st.b_weight;
  }
  for (int cycle = 0; cycle < noise_.r; ++cycle) {
    const auto c = static_cast<std::size_t>(cycle);
    if (c < cycle_errors.size()) {
      const PauliString& e = cycle_errors[c];
      if (e.num_qubits() != im.n) throw DimensionError("injected error has the wrong size");
      for (std::size_t q = 0; q < im.n; ++q) {
        const char p = e.pauli(q);
        if (p == 'I') continue;
        const int t = type_index(p);
        if (t != 2) st.frame ^= im.xcol[q];
        if (t != 0) st.frame ^= im.zcol[q];
        st.frame_zl ^= im.anti_zl[q][t];
        st.frame_xl ^= im.anti_xl[q][t];
      }
    }
    Bits observed = st.frame ^ st.syn_b;
    if (c < readout_flips.size() && !readout_flips[c].empty()) {
      if (readout_flips[c].size() != im.n_gen) throw DimensionError("readout flips != generators");
      for (std::size_t i = 0; i < im.n_gen; ++i) {
        if (readout_flips[c][i]) observed.flip(i);
      }
    }
    if (observed.any()) return {};
  }
  TrialOutcome out;
  out.accepted = true;
  const bool complement = 2 * st.b_weight > d_;
  out.branch_weight = complement ? d_ - st.b_weight : st.b_weight;
  const std::uint8_t bmin_xl = complement ? (st.b_xl_parity ^ im.support_xl_parity) : st.b_xl_parity;
  const std::uint8_t fix = im.correction(st.frame ^ st.syn_b);
  out.logical_x = (st.frame_zl ^ (fix & 1)) != 0;
  out.logical_z = (st.frame_xl ^ bmin_xl ^ (fix >> 1)) != 0;
  out.infidelity_sample = infidelity(out.branch_weight, out.logical_x, out.logical_z);
  return out;
}

TrialOutcome run_prep_trial(const StabilizerCode& code, double theta, const NoiseModel& noise,
                            Rng& rng) {
  const int d = static_cast<int>(code.z_support.size());
  PrepSimulator sim(code, theta, logical_angle(theta, d), noise);
  return sim.run(rng);
}

SingleFaultExpectation single_z_exact(const StabilizerCode& code, double theta,
                                      double theta_L_target, int r) {
  const int d = static_cast<int>(code.z_support.size());
  if (d > 24) throw UnsupportedParameter("exact enumeration limited to d <= 24");
  const PrepSimulator sim(code, theta, theta_L_target,
                          NoiseModel{0.0, r, 0.0, NoiseChannel::single_z});
  const double s2 = std::pow(std::sin(theta / 2), 2);
  const double c2 = std::pow(std::cos(theta / 2), 2);
  const double per_qubit = 1.0 / static_cast<double>(code.n);
  std::vector<PauliString> errors(static_cast<std::size_t>(r), PauliString(code.n));
  std::vector<std::uint8_t> b(static_cast<std::size_t>(d));
  SingleFaultExpectation out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask) {
    int w = 0;
    for (int i = 0; i < d; ++i) {
      b[static_cast<std::size_t>(i)] = (mask >> i) & 1;
      w += (mask >> i) & 1;
    }
    const double pb = std::pow(s2, w) * std::pow(c2, d - w);
    for (std::size_t q = 0; q < code.n; ++q) {
      errors[0] = PauliString::single(code.n, q, 'Z');
      const TrialOutcome o = sim.evaluate(b, errors, {});
      if (!o.accepted) continue;
      out.acceptance += pb * per_qubit;
      out.error_mass += pb * per_qubit * o.infidelity_sample;
    }
  }
  if (out.acceptance > 0) out.mean_infidelity = out.error_mass / out.acceptance;
  return out;
}

McStats estimate(const StabilizerCode& code, double theta, double theta_L_target,
                 const NoiseModel& noise, std::uint64_t n_trials, std::uint64_t seed,
                 const McOptions& options) {
  if (n_trials < 1) throw DomainError("n_trials must be >= 1");
  if (options.batch_size < 1) throw DomainError("batch size must be >= 1");
  const PrepSimulator sim(code, theta, theta_L_target, noise);
  const int classes = sim.max_weight_class() + 1;
  const std::size_t cells = static_cast<std::size_t>(classes) * 4;

  const std::uint64_t n_batches = (n_trials + options.batch_size - 1) / options.batch_size;
  std::vector<std::vector<std::uint64_t>> batch_counts(n_batches);
  std::atomic<std::uint64_t> next{0};
  std::uint64_t done = 0;
  std::mutex progress_mutex;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= n_batches) return;
      const std::uint64_t begin = i * options.batch_size;
      const std::uint64_t count = std::min(options.batch_size, n_trials - begin);
      Rng rng = substream(seed, i);
      std::vector<std::uint64_t> counts(cells, 0);
      for (std::uint64_t t = 0; t < count; ++t) {
        const TrialOutcome o = sim.run(rng);
        if (o.accepted) {
          ++counts[static_cast<std::size_t>(o.branch_weight) * 4 + (o.logical_x ? 2 : 0) +
                   (o.logical_z ? 1 : 0)];
        }
      }
      batch_counts[i] = std::move(counts);
      if (options.progress) {
        std::lock_guard lock(progress_mutex);
        done += count;
        options.progress(done, n_trials);
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, n_batches));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<std::uint64_t> total(cells, 0);
  for (const auto& bc : batch_counts) {
    for (std::size_t c = 0; c < cells; ++c) total[c] += bc[c];
  }

  McStats st;
  st.n_trials = n_trials;
  st.seed = seed;
  st.params = {code.name, static_cast<int>(code.d), theta, theta_L_target, noise,
               options.batch_size};
  st.branch_histogram.assign(static_cast<std::size_t>(classes), 0);
  double sum = 0;
  double sum_sq = 0;
  for (int m = 0; m < classes; ++m) {
    for (int cell = 0; cell < 4; ++cell) {
      const std::uint64_t c = total[static_cast<std::size_t>(m) * 4 + cell];
      st.branch_histogram[static_cast<std::size_t>(m)] += c;
      st.n_accepted += c;
      const double v = sim.infidelity(m, cell & 2, cell & 1);
      if (m > 0 || cell != 0) st.n_accepted_erroneous += c;
      sum += static_cast<double>(c) * v;
      sum_sq += static_cast<double>(c) * v * v;
    }
  }
  const double n = static_cast<double>(n_trials);
  st.acceptance_rate = static_cast<double>(st.n_accepted) / n;
  st.acceptance_stderr = std::sqrt(st.acceptance_rate * (1 - st.acceptance_rate) / n);
  if (st.n_accepted == 0) {
    st.warnings.push_back("no accepted trials; mean_infidelity is undefined");
  } else {
    const double a = static_cast<double>(st.n_accepted);
    const double mean = sum / a;
    st.mean_infidelity = mean;
    const double var = std::max(0.0, sum_sq / a - mean * mean);
    st.infidelity_stderr = st.n_accepted > 1 ? std::sqrt(var / (a - 1)) : 0.0;
  }
  if (st.n_accepted_erroneous < 10) {
    std::string msg = "rare-event regime: " + std::to_string(st.n_accepted_erroneous) +
                      " accepted erroneous trials";
    if (noise.channel == NoiseChannel::depolarizing && noise.p_in < 1 && theta < std::numbers::pi) {
      const int d = static_cast<int>(code.z_support.size());
      const RotationConfig cfg{theta, d, noise.p_in, noise.r, 0.0};
      const auto& mult = code.multiplicities;
      const double predicted =
          incoherent_error_first_order(cfg, mult.flip_projection + mult.secondary_flip) +
          readout_error(cfg, mult.readout_combos, std::optional<double>(noise.readout()));
      msg += "; analytic prediction " + fmt(predicted);
    }
    st.warnings.push_back(msg);
  }
  return st;
}

CoherentStats coherent_mc(int d, double theta, double sigma_theta, std::uint64_t n_samples,
                          std::uint64_t seed) {
  if (n_samples < 2) throw DomainError("coherent_mc needs at least 2 samples");
  if (d < 1) throw DomainError("d must be >= 1");
  if (sigma_theta < 0) throw DomainError("sigma_theta must be non-negative");
  Rng rng = substream(seed, 0);
  std::normal_distribution<double> noise(0.0, sigma_theta > 0 ? sigma_theta : 1.0);
  double mean = 0;
  double m2 = 0;
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    double ps = 1;
    double pc = 1;
    for (int q = 0; q < d; ++q) {
      const double th = theta + (sigma_theta > 0 ? noise(rng) : 0.0);
      ps *= std::sin(th / 2);
      pc *= std::cos(th / 2);
    }
    const double x = 2 * std::asin(ps / std::hypot(pc, ps));
    const double delta = x - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (x - mean);
  }
  return {mean, std::sqrt(m2 / static_cast<double>(n_samples - 1)), n_samples};
}

}  // namespace ftrot
