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

#include "ftrot/codes.hpp"

#include <algorithm>
#include <bit>

#include "ftrot/errors.hpp"

namespace ftrot {
namespace {

void require_odd(int d, const char* family) {
  if (d < 3 || d % 2 == 0) {
    throw UnsupportedParameter(std::string(family) + " code needs odd d >= 3, got " +
                               std::to_string(d));
  }
}

std::vector<std::size_t> support_of(const PauliString& p) {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    if (p.pauli(q) != 'I') out.push_back(q);
  }
  return out;
}

std::vector<PauliString> parse_all(std::initializer_list<const char*> labels) {
  std::vector<PauliString> out;
  for (const char* l : labels) out.push_back(PauliString::from_label(l));
  return out;
}

void finish(StabilizerCode& code) {
  code.z_support = support_of(code.logical_z.front());
  code.noncommuting = noncommuting_set(code.stabilizers, code.z_support);
}

struct Masks {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
};

Masks masks_of(const PauliString& p) { return {p.x_words()[0], p.z_words()[0]}; }

bool anticommute(Masks a, Masks b) { return std::popcount((a.x & b.z) ^ (a.z & b.x)) & 1; }

std::size_t gf2_rank(std::vector<std::vector<std::uint8_t>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c]) {
        for (std::size_t j = 0; j < cols; ++j) rows[r][j] ^= rows[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Syndrome syndrome(const PauliString& error, const StabilizerCode& code) {
  if (error.num_qubits() != code.n) {
    throw DimensionError("syndrome of a " + std::to_string(error.num_qubits()) +
                         "-qubit error on a " + std::to_string(code.n) + "-qubit code");
  }
  Syndrome out(code.stabilizers.size(), 0);
  for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
    out[i] = commutes(error, code.stabilizers[i]) ? 0 : 1;
  }
  return out;
}

std::vector<std::size_t> noncommuting_set(const std::vector<PauliString>& stabilizers,
                                          const std::vector<std::size_t>& z_support) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < stabilizers.size(); ++i) {
    const bool hit = std::any_of(z_support.begin(), z_support.end(),
                                 [&](std::size_t q) { return stabilizers[i].x(q); });
    if (hit) out.push_back(i);
  }
  return out;
}

StabilizerCode phase_flip_code(int d) {
  require_odd(d, "phase-flip");
  const auto n = static_cast<std::size_t>(d);
  StabilizerCode code;
  code.name = "phase-flip";
  code.n = n;
  code.k = 1;
  code.d = n;
  code.distance_kind = DistanceKind::z_only;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    PauliString s(n);
    s.set(i, 'X');
    s.set(i + 1, 'X');
    code.stabilizers.push_back(s);
  }
  PauliString zl(n);
  for (std::size_t q = 0; q < n; ++q) zl.set(q, 'Z');
  code.logical_z = {zl};
  code.logical_x = {PauliString::single(n, 0, 'X')};
  code.multiplicities = {d, 0, 2};
  finish(code);
  return code;
}

StabilizerCode rotated_surface_code(int d) {
  require_odd(d, "surface");
  const auto dd = static_cast<std::size_t>(d);
  const std::size_t n = dd * dd;
  StabilizerCode code;
  code.name = "surface";
  code.n = n;
  code.k = 1;
  code.d = dd;

  auto plaquette = [&](std::size_t i, std::size_t j) {
    const char type = (i + j) % 2 == 0 ? 'X' : 'Z';
    PauliString s(n);
    for (std::size_t r = (i == 0 ? 0 : i - 1); r <= std::min(i, dd - 1); ++r) {
      for (std::size_t c = (j == 0 ? 0 : j - 1); c <= std::min(j, dd - 1); ++c) {
        s.set(r * dd + c, type);
      }
    }
    code.stabilizers.push_back(s);
  };
  for (std::size_t i = 0; i <= dd; ++i) {
    for (std::size_t j = 0; j <= dd; ++j) {
      const bool even = (i + j) % 2 == 0;
      const bool bulk = i >= 1 && i <= dd - 1 && j >= 1 && j <= dd - 1;
      const bool top_bottom = (i == 0 || i == dd) && j >= 1 && j <= dd - 1;
      const bool left_right = (j == 0 || j == dd) && i >= 1 && i <= dd - 1;
      if (bulk || (top_bottom && even) || (left_right && !even)) plaquette(i, j);
    }
  }

  PauliString zl(n);
  PauliString xl(n);
  for (std::size_t r = 0; r < dd; ++r) {
    zl.set(r * dd + r, 'Z');
    xl.set(r * dd, 'X');
  }
  code.logical_z = {zl};
  code.logical_x = {xl};
  code.multiplicities = {d, 2, 2};
  finish(code);
  return code;
}

StabilizerCode four_qubit_code() {
  StabilizerCode code;
  code.name = "four-qubit";
  code.n = 4;
  code.k = 2;
  code.d = 2;
  code.stabilizers = parse_all({"ZZZZ", "XXXX"});
  code.logical_z = parse_all({"ZZII", "IZZI"});
  code.logical_x = parse_all({"IXXI", "XXII"});
  code.multiplicities = {2, 0, 2};
  finish(code);
  return code;
}

StabilizerCode perfect_code_weight3() {
  StabilizerCode code;
  code.name = "perfect";
  code.n = 5;
  code.k = 1;
  code.d = 3;
  code.stabilizers = parse_all({"YYIZZ", "IXXXZ", "YXZIX", "XYZXI"});
  code.logical_z = parse_all({"ZZZII"});
  code.logical_x = parse_all({"YYXXX"});
  code.multiplicities = {3, 0, 1};
  finish(code);
  return code;
}

const std::vector<std::string>& code_families() {
  static const std::vector<std::string> kNames = {"phase-flip", "surface", "four-qubit",
                                                  "perfect"};
  return kNames;
}

StabilizerCode make_code(std::string_view family, int d) {
  if (family == "phase-flip") return phase_flip_code(d);
  if (family == "surface") return rotated_surface_code(d);
  if (family == "four-qubit") return four_qubit_code();
  if (family == "perfect") return perfect_code_weight3();
  throw UnsupportedParameter("unknown code family '" + std::string(family) + "'");
}

ErrorMultiplicities enumerate_multiplicities(const StabilizerCode& code) {
  auto trivial = [&](const PauliString& p) {
    const Syndrome s = syndrome(p, code);
    if (!std::all_of(s.begin(), s.end(), [](std::uint8_t b) { return b == 0; })) return false;
    auto commutes_with = [&](const PauliString& l) { return commutes(p, l); };
    return std::all_of(code.logical_z.begin(), code.logical_z.end(), commutes_with) &&
           std::all_of(code.logical_x.begin(), code.logical_x.end(), commutes_with);
  };
  ErrorMultiplicities out;
  for (std::size_t q = 0; q < code.n; ++q) {
    const bool on_support =
        std::find(code.z_support.begin(), code.z_support.end(), q) != code.z_support.end();
    for (char p : {'X', 'Y', 'Z'}) {
      const PauliString e = PauliString::single(code.n, q, p);
      const bool hit = std::any_of(code.z_support.begin(), code.z_support.end(), [&](auto j) {
        return trivial(e * PauliString::single(code.n, j, 'Z'));
      });
      if (hit) ++(on_support ? out.flip_projection : out.secondary_flip);
    }
  }
  for (std::size_t j : code.z_support) {
    const Syndrome s = syndrome(PauliString::single(code.n, j, 'Z'), code);
    if (std::count(s.begin(), s.end(), 1) == 1) ++out.readout_combos;
  }
  return out;
}

DistanceReport brute_force_distance(const StabilizerCode& code) {
  if (code.n > 12) {
    throw UnsupportedParameter("brute-force distance limited to n <= 12");
  }
  std::vector<Masks> stabs;
  std::vector<Masks> logicals;
  for (const auto& s : code.stabilizers) stabs.push_back(masks_of(s));
  for (const auto& l : code.logical_z) logicals.push_back(masks_of(l));
  for (const auto& l : code.logical_x) logicals.push_back(masks_of(l));

  DistanceReport out;
  auto improve = [](std::optional<std::size_t>& slot, std::size_t w) {
    if (!slot || w < *slot) slot = w;
  };
  const std::uint64_t limit = std::uint64_t{1} << code.n;
  for (std::uint64_t x = 0; x < limit; ++x) {
    for (std::uint64_t z = 0; z < limit; ++z) {
      const Masks p{x, z};
      const bool in_normalizer =
          std::none_of(stabs.begin(), stabs.end(), [&](Masks s) { return anticommute(p, s); });
      if (!in_normalizer) continue;
      const bool nontrivial =
          std::any_of(logicals.begin(), logicals.end(), [&](Masks l) { return anticommute(p, l); });
      if (!nontrivial) continue;
      const auto w = static_cast<std::size_t>(std::popcount(x | z));
      improve(out.full, w);
      if (x == 0) improve(out.z_only, w);
      if (z == 0) improve(out.x_only, w);
    }
  }
  return out;
}

ValidationReport validate(const StabilizerCode& code) {
  ValidationReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
  };
  auto all_ops = [&] {
    std::vector<const PauliString*> v;
    for (const auto& s : code.stabilizers) v.push_back(&s);
    for (const auto& l : code.logical_z) v.push_back(&l);
    for (const auto& l : code.logical_x) v.push_back(&l);
    return v;
  }();
  for (const PauliString* p : all_ops) {
    if (p->num_qubits() != code.n) {
      fail("operator " + p->label() + " has " + std::to_string(p->num_qubits()) +
           " qubits, code has " + std::to_string(code.n));
    }
  }
  if (!rep.ok) return rep;

  if (code.stabilizers.size() + code.k != code.n) {
    fail("expected " + std::to_string(code.n - code.k) + " generators, found " +
         std::to_string(code.stabilizers.size()));
  }
  if (code.logical_z.size() != code.k || code.logical_x.size() != code.k) {
    fail("expected " + std::to_string(code.k) + " logical Z and X operators");
  }

  std::vector<std::vector<std::uint8_t>> rows;
  for (const auto& s : code.stabilizers) {
    std::vector<std::uint8_t> row(2 * code.n);
    for (std::size_t q = 0; q < code.n; ++q) {
      row[q] = s.x(q);
      row[code.n + q] = s.z(q);
    }
    rows.push_back(std::move(row));
  }
  if (gf2_rank(rows) != code.stabilizers.size()) fail("stabilizer generators are dependent");

  for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
    for (std::size_t j = i + 1; j < code.stabilizers.size(); ++j) {
      if (!commutes(code.stabilizers[i], code.stabilizers[j])) {
        fail("generators " + std::to_string(i) + " (" + code.stabilizers[i].label() + ") and " +
             std::to_string(j) + " (" + code.stabilizers[j].label() + ") anticommute");
      }
    }
  }
  auto check_logical = [&](const PauliString& l, const std::string& name) {
    for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
      if (!commutes(l, code.stabilizers[i])) {
        fail(name + " (" + l.label() + ") anticommutes with generator " + std::to_string(i) +
             " (" + code.stabilizers[i].label() + ")");
      }
    }
  };
  for (std::size_t j = 0; j < code.logical_z.size(); ++j) {
    check_logical(code.logical_z[j], "logical_z[" + std::to_string(j) + "]");
  }
  for (std::size_t j = 0; j < code.logical_x.size(); ++j) {
    check_logical(code.logical_x[j], "logical_x[" + std::to_string(j) + "]");
  }
  const std::size_t kk = std::min(code.logical_z.size(), code.logical_x.size());
  for (std::size_t a = 0; a < kk; ++a) {
    for (std::size_t b = 0; b < kk; ++b) {
      const bool anti = !commutes(code.logical_z[a], code.logical_x[b]);
      if (anti != (a == b)) {
        fail("logical_z[" + std::to_string(a) + "] and logical_x[" + std::to_string(b) + "] " +
             (anti ? "anticommute" : "commute"));
      }
      if (a < b && !commutes(code.logical_z[a], code.logical_z[b])) {
        fail("logical_z[" + std::to_string(a) + "] and logical_z[" + std::to_string(b) +
             "] anticommute");
      }
      if (a < b && !commutes(code.logical_x[a], code.logical_x[b])) {
        fail("logical_x[" + std::to_string(a) + "] and logical_x[" + std::to_string(b) +
             "] anticommute");
      }
    }
  }

  if (!code.logical_z.empty()) {
    if (code.z_support != support_of(code.logical_z.front())) {
      fail("z_support does not match the support of logical_z[0]");
    }
    for (std::size_t q : code.z_support) {
      if (code.logical_z.front().pauli(q) != 'Z') fail("logical_z[0] is not Z-type on its support");
    }
  }
  if (code.noncommuting != noncommuting_set(code.stabilizers, code.z_support)) {
    fail("noncommuting set does not match the generators with X or Y on z_support");
  }

  if (rep.ok && code.n <= 9) {
    rep.distance_checked = true;
    rep.distance = brute_force_distance(code);
    const auto& found =
        code.distance_kind == DistanceKind::z_only ? rep.distance.z_only : rep.distance.full;
    if (!found || *found != code.d) {
      fail("declared distance " + std::to_string(code.d) + " but brute force found " +
           (found ? std::to_string(*found) : std::string("none")));
    }
  }
  return rep;
}

}  // namespace ftrot
