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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ftrot/pauli.hpp"

namespace ftrot {

/// Counts d' of the leading undetected-error pathways.
struct ErrorMultiplicities {
  int flip_projection = 0;
  int secondary_flip = 0;
  int readout_combos = 0;

  friend bool operator==(const ErrorMultiplicities&, const ErrorMultiplicities&) = default;
};

/// Which brute-forced distance the declared d refers to.
enum class DistanceKind {
  full,    ///< minimum weight over all nontrivial logicals
  z_only,  ///< minimum weight over Z-type nontrivial logicals (phase-flip code)
};

struct StabilizerCode {
  std::string name;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  DistanceKind distance_kind = DistanceKind::full;
  std::vector<PauliString> stabilizers;
  std::vector<PauliString> logical_z;
  std::vector<PauliString> logical_x;
  /// Qubits of logical_z[0], ascending.
  std::vector<std::size_t> z_support;
  /// Indices into stabilizers of the generators that do not commute with the rotation layer.
  std::vector<std::size_t> noncommuting;
  ErrorMultiplicities multiplicities;
};

/// One bit per generator, 1 = anticommutes.
using Syndrome = std::vector<std::uint8_t>;

Syndrome syndrome(const PauliString& error, const StabilizerCode& code);

/// Generators carrying an X or Y on some support qubit, i.e. those that fail to commute
/// with some Z^b and hence with the product of physical Z rotations.
std::vector<std::size_t> noncommuting_set(const std::vector<PauliString>& stabilizers,
                                          const std::vector<std::size_t>& z_support);

/// Repetition code against phase flips: X_i X_{i+1}, Z_L = Z^d, X_L = X on qubit 0.
StabilizerCode phase_flip_code(int d);

/// Rotated surface code on a row-major d x d grid, data qubit (r, c) at index r*d + c.
///
/// Plaquette (i, j), 0 <= i, j <= d, covers the data qubits (i-1, j-1), (i-1, j), (i, j-1),
/// (i, j) that exist. It is X-type when i + j is even. Bulk plaquettes have 1 <= i, j <= d-1;
/// weight-2 X plaquettes sit on the top and bottom rows and weight-2 Z plaquettes on the
/// left and right columns. Z_L runs down the main diagonal (r, r), X_L down column 0.
/// The bulk X plaquettes (i, i) form the noncommuting set.
StabilizerCode rotated_surface_code(int d);

/// [[4,2,2]] code with Z_L = (ZZII, IZZI), X_L = (IXXI, XXII).
StabilizerCode four_qubit_code();

/// [[5,1,3]] code in the basis where Z_L = ZZZII has weight 3.
StabilizerCode perfect_code_weight3();

/// Registry: "phase-flip", "surface", "four-qubit", "perfect". d is ignored by the fixed codes.
StabilizerCode make_code(std::string_view family, int d);
const std::vector<std::string>& code_families();

/// Counts single-qubit Pauli errors that, combined with a weight-1 branch Z^b, give a
/// stabilizer (split by whether the error sits on the support), and weight-1 branches whose
/// syndrome has weight 1 (masked by one readout flip per round).
ErrorMultiplicities enumerate_multiplicities(const StabilizerCode& code);

struct DistanceReport {
  std::optional<std::size_t> full;
  std::optional<std::size_t> z_only;
  std::optional<std::size_t> x_only;
};

/// Exhaustive search over all 4^n Paulis. Requires n <= 12.
DistanceReport brute_force_distance(const StabilizerCode& code);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;
  bool distance_checked = false;
  DistanceReport distance;
};

ValidationReport validate(const StabilizerCode& code);

}  // namespace ftrot
