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

#include "qecbound/pauli.hpp"

#include <ostream>

#include "qecbound/errors.hpp"

namespace qecbound {
namespace {

void require_same_size(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionError("Pauli operands act on " + std::to_string(p.num_qubits()) + " and " +
                         std::to_string(q.num_qubits()) + " qubits");
  }
}

// Exponent of i picked up by P(x1,z1) * P(x2,z2) on one qubit.
int product_exponent(bool x1, bool z1, bool x2, bool z2) {
  if (x1 && z1) return int(z2) - int(x2);
  if (x1) return z2 ? (x2 ? 1 : -1) : 0;
  if (z1) return x2 ? (z2 ? -1 : 1) : 0;
  return 0;
}

}  // namespace

std::complex<double> Phase::value() const {
  switch (exponent_) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::string_view Phase::prefix() const {
  static constexpr std::string_view prefixes[] = {"+", "+i", "-", "-i"};
  return prefixes[exponent_];
}

PauliString::PauliString(std::size_t n) : x_(n), z_(n) {
  if (n == 0) throw DimensionError("a Pauli string needs at least one qubit");
}

PauliString::PauliString(BitVector x_bits, BitVector z_bits, Phase phase)
    : x_(std::move(x_bits)), z_(std::move(z_bits)), phase_(phase) {
  if (x_.size() != z_.size()) throw DimensionError("x and z bit vectors differ in length");
  if (x_.empty()) throw DimensionError("a Pauli string needs at least one qubit");
}

PauliString PauliString::from_str(std::string_view text) {
  Phase phase = Phase::one();
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') phase = Phase::minus_one();
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    phase = phase * Phase::i();
    text.remove_prefix(1);
  }
  PauliString result(text.size());
  result.phase_ = phase;
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I':
      case '_': break;
      case 'X': result.x_.set(q); break;
      case 'Z': result.z_.set(q); break;
      case 'Y':
        result.x_.set(q);
        result.z_.set(q);
        break;
      default: throw std::invalid_argument("unrecognized Pauli letter '" + std::string(1, text[q]) + "'");
    }
  }
  return result;
}

PauliString PauliString::single(std::size_t n, std::size_t qubit, PauliLetter letter) {
  if (qubit >= n) throw DimensionError("qubit index out of range");
  PauliString result(n);
  result.x_[qubit] = letter == PauliLetter::X || letter == PauliLetter::Y;
  result.z_[qubit] = letter == PauliLetter::Z || letter == PauliLetter::Y;
  return result;
}

PauliLetter PauliString::letter(std::size_t qubit) const {
  const bool x = x_[qubit];
  const bool z = z_[qubit];
  if (x && z) return PauliLetter::Y;
  if (x) return PauliLetter::X;
  if (z) return PauliLetter::Z;
  return PauliLetter::I;
}

std::size_t PauliString::weight() const { return (x_ | z_).count(); }

PauliString& PauliString::operator*=(const PauliString& rhs) {
  require_same_size(*this, rhs);
  int exponent = phase_.exponent() + rhs.phase_.exponent();
  for (std::size_t q = 0; q < x_.size(); ++q) {
    exponent += product_exponent(x_[q], z_[q], rhs.x_[q], rhs.z_[q]);
  }
  x_ ^= rhs.x_;
  z_ ^= rhs.z_;
  phase_ = Phase::from_exponent(exponent);
  return *this;
}

PauliString PauliString::with_phase(Phase phase) const {
  PauliString result = *this;
  result.phase_ = phase;
  return result;
}

std::string PauliString::str() const {
  std::string out(phase_.prefix());
  for (std::size_t q = 0; q < num_qubits(); ++q) out.push_back(to_char(letter(q)));
  return out;
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  PauliString result = p;
  result *= q;
  return result;
}

bool commutes(const PauliString& p, const PauliString& q) {
  require_same_size(p, q);
  const std::size_t parity = ((p.x_bits() & q.z_bits()).count() + (p.z_bits() & q.x_bits()).count()) % 2;
  return parity == 0;
}

std::ostream& operator<<(std::ostream& out, const PauliString& p) { return out << p.str(); }

char to_char(PauliLetter letter) {
  switch (letter) {
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
    case PauliLetter::Z: return 'Z';
    default: return 'I';
  }
}

}  // namespace qecbound
