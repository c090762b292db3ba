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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ftrot {

/// An n-qubit Pauli operator i^phase * P_0 ⊗ ... ⊗ P_{n-1} in binary symplectic form.
///
/// Qubit j carries the Hermitian label selected by (x_j, z_j): (0,0)=I, (1,0)=X,
/// (1,1)=Y, (0,1)=Z. The phase is an exponent of i kept mod 4 and is never
/// normalized away; callers that only care about the Pauli pattern compare
/// labels.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t num_qubits);

  /// Parses "XYZI", "+iXZ", "-YY" or "_X_" ('_' and 'I' both mean identity).
  static PauliString from_label(std::string_view label);
  static PauliString single(std::size_t num_qubits, std::size_t qubit, char pauli);

  std::size_t num_qubits() const { return num_qubits_; }
  bool x(std::size_t qubit) const;
  bool z(std::size_t qubit) const;
  char pauli(std::size_t qubit) const;
  void set(std::size_t qubit, char pauli);

  /// Exponent k of the global factor i^k, in [0, 4).
  int phase() const { return phase_; }
  void set_phase(int k) { phase_ = ((k % 4) + 4) % 4; }

  std::size_t weight() const;
  bool is_identity_pattern() const;

  /// Label without phase, e.g. "YYIZZ".
  std::string label() const;
  /// Label with phase prefix: "+", "-", "+i" or "-i".
  std::string str() const;

  std::span<const std::uint64_t> x_words() const { return xs_; }
  std::span<const std::uint64_t> z_words() const { return zs_; }

  PauliString& operator*=(const PauliString& rhs);
  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::size_t num_qubits_ = 0;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
  int phase_ = 0;
};

/// Group product p*q with exact phase. Throws DimensionError on a size mismatch.
PauliString multiply(const PauliString& p, const PauliString& q);
inline PauliString operator*(const PauliString& p, const PauliString& q) { return multiply(p, q); }

/// True iff the symplectic inner product of p and q vanishes.
bool commutes(const PauliString& p, const PauliString& q);

/// Product of Z over the listed qubits where bits has a 1 (the branch operator Z^b).
PauliString z_pattern(std::size_t num_qubits, std::span<const std::size_t> support,
                      std::uint64_t bits);

}  // namespace ftrot
