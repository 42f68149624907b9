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
#include <iosfwd>
#include <string>
#include <vector>

#include "qecbound/axis.hpp"
#include "qecbound/stabilizer_code.hpp"

namespace qecbound {

/// One nonzero third-order coefficient: sigma^alpha_i sigma^beta_j sigma^beta_k
/// has trivial syndrome and acts as `logical`. Qubit indices are 1-based and
/// j < k.
struct EtaEntry {
  Axis alpha;
  Axis beta;
  std::size_t i;
  std::size_t j;
  std::size_t k;
  ErrorClass logical;

  bool operator==(const EtaEntry&) const = default;
};

/// The nonzero coefficients of the trivial-syndrome third-order expansion.
/// Entries are ordered by (alpha, beta) with (x, z) before (z, x), then by i.
struct EtaTable {
  std::size_t num_qubits = 0;
  std::vector<EtaEntry> entries;

  std::size_t count(Axis alpha, Axis beta) const;
  /// The Pauli operator an entry stands for.
  PauliString operator_of(const EtaEntry& e) const;
};

/// Enumerates every sigma^alpha_i sigma^beta_j sigma^beta_k with distinct
/// i, j, k and alpha, beta in {x, z}, keeping the trivial-syndrome logical
/// ones. The code must have distance 3 (checked by brute force) and at most
/// kMaxBruteForceQubits qubits.
EtaTable enumerate_eta(const StabilizerCode& code);

/// Whitespace-aligned table with columns alpha beta i j k logical_type.
void write_eta_text(std::ostream& out, const EtaTable& table);

}  // namespace qecbound
