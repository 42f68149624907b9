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

#include "qecbound/eta_table.hpp"

#include <algorithm>
#include <ostream>

#include <fmt/format.h>

#include "qecbound/errors.hpp"

namespace qecbound {
namespace {

// (x, z) first, then (z, x), then the same-axis pairs.
int pair_rank(Axis alpha, Axis beta) {
  if (alpha == Axis::X && beta == Axis::Z) return 0;
  if (alpha == Axis::Z && beta == Axis::X) return 1;
  return alpha == Axis::X ? 2 : 3;
}

}  // namespace

std::size_t EtaTable::count(Axis alpha, Axis beta) const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [&](const EtaEntry& e) {
    return e.alpha == alpha && e.beta == beta;
  }));
}

PauliString EtaTable::operator_of(const EtaEntry& e) const {
  PauliString p = PauliString::single(num_qubits, e.i - 1, to_letter(e.alpha));
  p *= PauliString::single(num_qubits, e.j - 1, to_letter(e.beta));
  p *= PauliString::single(num_qubits, e.k - 1, to_letter(e.beta));
  return p;
}

EtaTable enumerate_eta(const StabilizerCode& code) {
  const std::size_t n = code.num_physical();
  if (n > kMaxBruteForceQubits) {
    throw CapabilityError("eta enumeration limited to n <= " + std::to_string(kMaxBruteForceQubits));
  }
  if (n < 3 || !verify_distance(code, 3)) {
    throw CapabilityError("eta enumeration covers third order only; the code must have distance 3");
  }
  EtaTable table{n, {}};
  for (Axis alpha : kAxes) {
    for (Axis beta : kAxes) {
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          for (std::size_t k = j + 1; k <= n; ++k) {
            if (i == j || i == k) continue;
            EtaEntry entry{alpha, beta, i, j, k, ErrorClass::Detectable};
            const ErrorClass c = classify(code, table.operator_of(entry));
            if (!is_logical(c)) continue;
            entry.logical = c;
            table.entries.push_back(entry);
          }
        }
      }
    }
  }
  std::stable_sort(table.entries.begin(), table.entries.end(), [](const EtaEntry& a, const EtaEntry& b) {
    return pair_rank(a.alpha, a.beta) < pair_rank(b.alpha, b.beta);
  });
  return table;
}

void write_eta_text(std::ostream& out, const EtaTable& table) {
  out << fmt::format("{:<6}{:<6}{:>3}{:>3}{:>3}  {}\n", "alpha", "beta", "i", "j", "k", "logical_type");
  for (const auto& e : table.entries) {
    out << fmt::format("{:<6}{:<6}{:>3}{:>3}{:>3}  {}\n", to_string(e.alpha), to_string(e.beta), e.i, e.j, e.k,
                       to_string(e.logical));
  }
}

}  // namespace qecbound
