// Copyright 2026 The qecbound Authors
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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/dynamic_bitset.hpp>

namespace qecbound {

using BitVector = boost::dynamic_bitset<>;

/// An element of {+1, +i, -1, -i}, stored as the exponent of i modulo 4.
class Phase {
 public:
  constexpr Phase() = default;

  static constexpr Phase from_exponent(int e) { return Phase(static_cast<std::uint8_t>(((e % 4) + 4) % 4)); }
  static constexpr Phase one() { return Phase(0); }
  static constexpr Phase i() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_i() { return Phase(3); }

  constexpr int exponent() const { return exponent_; }
  std::complex<double> value() const;

  constexpr Phase operator*(Phase other) const { return from_exponent(exponent_ + other.exponent_); }
  constexpr bool operator==(const Phase&) const = default;

  /// "+", "+i", "-", "-i".
  std::string_view prefix() const;

 private:
  constexpr explicit Phase(std::uint8_t e) : exponent_(e) {}
  std::uint8_t exponent_ = 0;
};

/// Pauli letter on a single qubit. Y is stored as x = z = 1.
enum class PauliLetter : std::uint8_t { I, X, Y, Z };

/// n-qubit Pauli operator `phase * P_1 (x) ... (x) P_n` in symplectic form.
class PauliString {
 public:
  /// Identity on `n` qubits.
  explicit PauliString(std::size_t n);
  PauliString(BitVector x_bits, BitVector z_bits, Phase phase = Phase::one());

  /// Parses strings like "XZZXI", "+iY", "-X_Z". '_' and 'I' both mean identity.
  static PauliString from_str(std::string_view text);
  static PauliString single(std::size_t n, std::size_t qubit, PauliLetter letter);

  std::size_t num_qubits() const { return x_.size(); }
  const BitVector& x_bits() const { return x_; }
  const BitVector& z_bits() const { return z_; }
  Phase phase() const { return phase_; }

  PauliLetter letter(std::size_t qubit) const;
  /// Number of qubits with a non-identity letter.
  std::size_t weight() const;
  bool is_identity_up_to_phase() const { return x_.none() && z_.none(); }

  PauliString& operator*=(const PauliString& rhs);
  PauliString with_phase(Phase phase) const;

  bool operator==(const PauliString& other) const = default;
  bool equal_up_to_phase(const PauliString& other) const { return x_ == other.x_ && z_ == other.z_; }

  std::string str() const;

 private:
  BitVector x_;
  BitVector z_;
  Phase phase_;
};

/// Operator product p * q with exact phase tracking.
PauliString multiply(const PauliString& p, const PauliString& q);
inline PauliString operator*(const PauliString& p, const PauliString& q) { return multiply(p, q); }

/// Symplectic inner product test; ignores phases.
bool commutes(const PauliString& p, const PauliString& q);

std::ostream& operator<<(std::ostream& out, const PauliString& p);

char to_char(PauliLetter letter);

}  // namespace qecbound
