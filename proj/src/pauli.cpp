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

#include "ftrot/pauli.hpp"

#include <bit>

#include "ftrot/errors.hpp"

namespace ftrot {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

void check_qubit(std::size_t qubit, std::size_t n) {
  if (qubit >= n) {
    throw DimensionError("qubit index " + std::to_string(qubit) + " out of range for " +
                         std::to_string(n) + " qubits");
  }
}

}  // namespace

PauliString::PauliString(std::size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {}

PauliString PauliString::from_label(std::string_view label) {
  int phase = 0;
  if (!label.empty() && (label.front() == '+' || label.front() == '-')) {
    phase = label.front() == '-' ? 2 : 0;
    label.remove_prefix(1);
  }
  if (!label.empty() && label.front() == 'i') {
    phase += 1;
    label.remove_prefix(1);
  }
  PauliString out(label.size());
  for (std::size_t q = 0; q < label.size(); ++q) {
    out.set(q, label[q]);
  }
  out.set_phase(phase);
  return out;
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit, char pauli) {
  PauliString out(num_qubits);
  out.set(qubit, pauli);
  return out;
}

bool PauliString::x(std::size_t qubit) const {
  check_qubit(qubit, num_qubits_);
  return (xs_[qubit / kWordBits] >> (qubit % kWordBits)) & 1U;
}

bool PauliString::z(std::size_t qubit) const {
  check_qubit(qubit, num_qubits_);
  return (zs_[qubit / kWordBits] >> (qubit % kWordBits)) & 1U;
}

char PauliString::pauli(std::size_t qubit) const {
  static constexpr char kLabels[4] = {'I', 'X', 'Z', 'Y'};
  return kLabels[static_cast<int>(x(qubit)) | (static_cast<int>(z(qubit)) << 1)];
}

void PauliString::set(std::size_t qubit, char pauli) {
  check_qubit(qubit, num_qubits_);
  bool xb = false;
  bool zb = false;
  switch (pauli) {
    case 'I':
    case '_':
      break;
    case 'X':
      xb = true;
      break;
    case 'Y':
      xb = zb = true;
      break;
    case 'Z':
      zb = true;
      break;
    default:
      throw std::invalid_argument(std::string("not a Pauli label: '") + pauli + "'");
  }
  const std::uint64_t mask = std::uint64_t{1} << (qubit % kWordBits);
  auto& xw = xs_[qubit / kWordBits];
  auto& zw = zs_[qubit / kWordBits];
  xw = xb ? (xw | mask) : (xw & ~mask);
  zw = zb ? (zw | mask) : (zw & ~mask);
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    w += static_cast<std::size_t>(std::popcount(xs_[i] | zs_[i]));
  }
  return w;
}

bool PauliString::is_identity_pattern() const { return weight() == 0; }

std::string PauliString::label() const {
  std::string out(num_qubits_, 'I');
  for (std::size_t q = 0; q < num_qubits_; ++q) {
    out[q] = pauli(q);
  }
  return out;
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  return kPrefix[phase_] + label();
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  if (rhs.num_qubits_ != num_qubits_) {
    throw DimensionError("Pauli product of " + std::to_string(num_qubits_) + "- and " +
                         std::to_string(rhs.num_qubits_) + "-qubit operators");
  }
  // Per-qubit sigma_a * sigma_b = i^{+1} for the cyclic order X->Y->Z->X, i^{-1} otherwise.
  int up = 0;
  int down = 0;
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    const std::uint64_t x1 = xs_[i], z1 = zs_[i], x2 = rhs.xs_[i], z2 = rhs.zs_[i];
    const std::uint64_t lx = x1 & ~z1, ly = x1 & z1, lz = ~x1 & z1;
    const std::uint64_t rx = x2 & ~z2, ry = x2 & z2, rz = ~x2 & z2;
    up += std::popcount((lx & ry) | (ly & rz) | (lz & rx));
    down += std::popcount((lx & rz) | (ly & rx) | (lz & ry));
    xs_[i] = x1 ^ x2;
    zs_[i] = z1 ^ z2;
  }
  set_phase(phase_ + rhs.phase_ + up - down);
  return *this;
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  PauliString out = p;
  out *= q;
  return out;
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionError("commutation check of " + std::to_string(p.num_qubits()) + "- and " +
                         std::to_string(q.num_qubits()) + "-qubit operators");
  }
  const auto px = p.x_words(), pz = p.z_words(), qx = q.x_words(), qz = q.z_words();
  int parity = 0;
  for (std::size_t i = 0; i < px.size(); ++i) {
    parity ^= std::popcount((px[i] & qz[i]) ^ (pz[i] & qx[i])) & 1;
  }
  return parity == 0;
}

PauliString z_pattern(std::size_t num_qubits, std::span<const std::size_t> support,
                      std::uint64_t bits) {
  PauliString out(num_qubits);
  for (std::size_t j = 0; j < support.size(); ++j) {
    if ((bits >> j) & 1U) {
      out.set(support[j], 'Z');
    }
  }
  return out;
}

}  // namespace ftrot
