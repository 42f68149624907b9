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

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qecbound/pauli.hpp"

namespace qecbound {

/// Bit g is set iff the error anticommutes with generator g.
struct Syndrome {
  BitVector bits;

  bool is_trivial() const { return bits.none(); }
  std::size_t size() const { return bits.size(); }
  /// Generator order, e.g. "0001".
  std::string str() const;
  bool operator==(const Syndrome&) const = default;
};

enum class ErrorClass { StabilizerEquivalent, LogicalX, LogicalY, LogicalZ, Detectable };

std::string_view to_string(ErrorClass c);
inline bool is_logical(ErrorClass c) {
  return c == ErrorClass::LogicalX || c == ErrorClass::LogicalY || c == ErrorClass::LogicalZ;
}

/// Outcome of the algebraic consistency checks on a code.
struct CodeInvariantReport {
  bool generators_commute = false;
  bool generators_independent = false;
  bool logicals_commute_with_generators = false;
  bool logical_pairs_anticommute = false;
  bool logicals_mutually_commute = false;

  bool ok() const {
    return generators_commute && generators_independent && logicals_commute_with_generators &&
           logical_pairs_anticommute && logicals_mutually_commute;
  }
};

/// [[n, k, d]] stabilizer code. Construction validates every invariant and
/// throws ConfigError if one fails.
class StabilizerCode {
 public:
  StabilizerCode(std::size_t n, std::vector<PauliString> generators, std::vector<PauliString> logical_x,
                 std::vector<PauliString> logical_z, std::size_t distance);

  std::size_t num_physical() const { return n_; }
  std::size_t num_logical() const { return logical_x_.size(); }
  std::size_t distance() const { return distance_; }
  const std::vector<PauliString>& generators() const { return generators_; }
  const std::vector<PauliString>& logical_x() const { return logical_x_; }
  const std::vector<PauliString>& logical_z() const { return logical_z_; }

 private:
  std::size_t n_;
  std::vector<PauliString> generators_;
  std::vector<PauliString> logical_x_;
  std::vector<PauliString> logical_z_;
  std::size_t distance_;
};

/// Runs the invariant checks without throwing.
CodeInvariantReport check_invariants(std::size_t n, const std::vector<PauliString>& generators,
                                     const std::vector<PauliString>& logical_x,
                                     const std::vector<PauliString>& logical_z);
CodeInvariantReport check_invariants(const StabilizerCode& code);

/// Rank over GF(2) of the symplectic vectors (x | z) of `paulis`.
std::size_t symplectic_rank(const std::vector<PauliString>& paulis);

/// The [[5,1,3]] code.
///
/// Generators are the cyclic family XZZXI, IXZZX, XIXZZ, ZXIXZ (syndrome bit g
/// belongs to the g-th string), qubits are numbered 1..5 left to right, and
/// the logical operators are XXXXX and ZZZZZ. With this convention the
/// trivial-syndrome weight-3 logicals come out as X_i Z_{i-1} Z_{i+1} and
/// Z_i X_{i+2} X_{i+3} (indices mod 5).
StabilizerCode five_qubit_code();

/// One qubit, no generators, logical X and Z. Distance 1.
StabilizerCode trivial_code();

Syndrome syndrome(const StabilizerCode& code, const PauliString& e);

/// Coset label of `e`. Requires a single logical qubit.
ErrorClass classify(const StabilizerCode& code, const PauliString& e);

/// All 2^(n-k) products of generators, ordered by the binary index of the
/// generator subset.
std::vector<PauliString> stabilizer_group(const StabilizerCode& code);

/// Largest n accepted by the brute-force enumerations.
inline constexpr std::size_t kMaxBruteForceQubits = 12;

/// Calls `visit` on every weight-`w` Pauli on `n` qubits. Qubit subsets are
/// visited in lexicographic order; within a subset the letters run through
/// X, Y, Z with the last qubit varying fastest.
void for_each_pauli_of_weight(std::size_t n, std::size_t w, const std::function<void(const PauliString&)>& visit);

/// Every Pauli of weight 0..max_weight, ordered by weight and then as in
/// for_each_pauli_of_weight. Phases are +1.
std::vector<PauliString> enumerate_paulis(std::size_t n, std::size_t max_weight);

/// True iff no Pauli of weight < d is a logical operator and at least one of
/// weight d is. Brute force; n must not exceed kMaxBruteForceQubits.
bool verify_distance(const StabilizerCode& code, std::size_t d);

}  // namespace qecbound
