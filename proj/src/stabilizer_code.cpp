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

#include "qecbound/stabilizer_code.hpp"

#include <algorithm>
#include <numeric>

#include "qecbound/errors.hpp"

namespace qecbound {
namespace {

void require_size(const StabilizerCode& code, const PauliString& e) {
  if (e.num_qubits() != code.num_physical()) {
    throw DimensionError("error acts on " + std::to_string(e.num_qubits()) + " qubits, code has " +
                         std::to_string(code.num_physical()));
  }
}

bool all_pairs_commute(const std::vector<PauliString>& a, const std::vector<PauliString>& b) {
  return std::all_of(a.begin(), a.end(), [&](const PauliString& p) {
    return std::all_of(b.begin(), b.end(), [&](const PauliString& q) { return commutes(p, q); });
  });
}

}  // namespace

std::string Syndrome::str() const {
  std::string out;
  out.reserve(bits.size());
  for (std::size_t g = 0; g < bits.size(); ++g) out.push_back(bits[g] ? '1' : '0');
  return out;
}

std::string_view to_string(ErrorClass c) {
  switch (c) {
    case ErrorClass::StabilizerEquivalent: return "StabilizerEquivalent";
    case ErrorClass::LogicalX: return "LogicalX";
    case ErrorClass::LogicalY: return "LogicalY";
    case ErrorClass::LogicalZ: return "LogicalZ";
    case ErrorClass::Detectable: return "Detectable";
  }
  return "?";
}

std::size_t symplectic_rank(const std::vector<PauliString>& paulis) {
  if (paulis.empty()) return 0;
  const std::size_t n = paulis.front().num_qubits();
  std::vector<BitVector> rows;
  rows.reserve(paulis.size());
  for (const auto& p : paulis) {
    BitVector row(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
      row[q] = p.x_bits()[q];
      row[n + q] = p.z_bits()[q];
    }
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 2 * n && rank < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [col](const BitVector& r) { return r[col]; });
    if (pivot == rows.end()) continue;
    std::swap(*pivot, rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][col]) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

CodeInvariantReport check_invariants(std::size_t n, const std::vector<PauliString>& generators,
                                     const std::vector<PauliString>& logical_x,
                                     const std::vector<PauliString>& logical_z) {
  CodeInvariantReport report;
  report.generators_commute = all_pairs_commute(generators, generators);
  report.generators_independent = symplectic_rank(generators) == generators.size() && generators.size() <= n;
  report.logicals_commute_with_generators =
      all_pairs_commute(logical_x, generators) && all_pairs_commute(logical_z, generators);

  bool pairs = logical_x.size() == logical_z.size();
  bool mutual = pairs;
  for (std::size_t a = 0; pairs && a < logical_x.size(); ++a) {
    for (std::size_t b = 0; b < logical_z.size(); ++b) {
      const bool c = commutes(logical_x[a], logical_z[b]);
      if (a == b && c) pairs = false;
      if (a != b && !c) mutual = false;
    }
  }
  mutual = mutual && all_pairs_commute(logical_x, logical_x) && all_pairs_commute(logical_z, logical_z);
  report.logical_pairs_anticommute = pairs;
  report.logicals_mutually_commute = mutual;
  return report;
}

CodeInvariantReport check_invariants(const StabilizerCode& code) {
  return check_invariants(code.num_physical(), code.generators(), code.logical_x(), code.logical_z());
}

StabilizerCode::StabilizerCode(std::size_t n, std::vector<PauliString> generators, std::vector<PauliString> logical_x,
                               std::vector<PauliString> logical_z, std::size_t distance)
    : n_(n),
      generators_(std::move(generators)),
      logical_x_(std::move(logical_x)),
      logical_z_(std::move(logical_z)),
      distance_(distance) {
  if (n_ == 0) throw ConfigError("a code needs at least one physical qubit");
  if (distance_ == 0) throw ConfigError("code distance must be positive");
  auto check_sizes = [this](const std::vector<PauliString>& ps, const char* what) {
    for (const auto& p : ps) {
      if (p.num_qubits() != n_) throw DimensionError(std::string(what) + " acts on the wrong number of qubits");
    }
  };
  check_sizes(generators_, "generator");
  check_sizes(logical_x_, "logical X");
  check_sizes(logical_z_, "logical Z");
  for (const auto& g : generators_) {
    if (g.phase() != Phase::one()) throw ConfigError("generator " + g.str() + " must have phase +1");
  }
  if (logical_x_.size() != logical_z_.size()) throw ConfigError("logical X and Z counts differ");
  if (generators_.size() + logical_x_.size() != n_) {
    throw ConfigError("expected n - k = " + std::to_string(n_ - logical_x_.size()) + " generators");
  }
  const auto report = check_invariants(*this);
  if (!report.generators_commute) throw ConfigError("stabilizer generators do not commute");
  if (!report.generators_independent) throw ConfigError("stabilizer generators are not independent");
  if (!report.logicals_commute_with_generators) throw ConfigError("a logical operator anticommutes with a generator");
  if (!report.logical_pairs_anticommute || !report.logicals_mutually_commute) {
    throw ConfigError("logical operators do not form conjugate pairs");
  }
}

StabilizerCode five_qubit_code() {
  std::vector<PauliString> generators;
  for (const char* g : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) generators.push_back(PauliString::from_str(g));
  return StabilizerCode(5, std::move(generators), {PauliString::from_str("XXXXX")},
                        {PauliString::from_str("ZZZZZ")}, 3);
}

StabilizerCode trivial_code() {
  return StabilizerCode(1, {}, {PauliString::from_str("X")}, {PauliString::from_str("Z")}, 1);
}

Syndrome syndrome(const StabilizerCode& code, const PauliString& e) {
  require_size(code, e);
  Syndrome s{BitVector(code.generators().size())};
  for (std::size_t g = 0; g < code.generators().size(); ++g) s.bits[g] = !commutes(e, code.generators()[g]);
  return s;
}

ErrorClass classify(const StabilizerCode& code, const PauliString& e) {
  require_size(code, e);
  if (code.num_logical() != 1) throw CapabilityError("classify supports codes with exactly one logical qubit");
  if (!syndrome(code, e).is_trivial()) return ErrorClass::Detectable;
  const bool anti_x = !commutes(e, code.logical_x().front());
  const bool anti_z = !commutes(e, code.logical_z().front());
  if (anti_x && anti_z) return ErrorClass::LogicalY;
  if (anti_z) return ErrorClass::LogicalX;
  if (anti_x) return ErrorClass::LogicalZ;
  return ErrorClass::StabilizerEquivalent;
}

std::vector<PauliString> stabilizer_group(const StabilizerCode& code) {
  const auto& gens = code.generators();
  if (gens.size() >= 8 * sizeof(std::size_t)) throw CapabilityError("stabilizer group too large to list");
  std::vector<PauliString> group;
  group.reserve(std::size_t{1} << gens.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
    PauliString s(code.num_physical());
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if ((mask >> g) & 1U) s *= gens[g];
    }
    group.push_back(std::move(s));
  }
  return group;
}

void for_each_pauli_of_weight(std::size_t n, std::size_t w, const std::function<void(const PauliString&)>& visit) {
  if (w > n) return;
  if (w == 0) {
    visit(PauliString(n));
    return;
  }
  static constexpr PauliLetter kLetters[] = {PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
  std::vector<std::size_t> support(w);
  std::iota(support.begin(), support.end(), std::size_t{0});
  std::vector<std::size_t> letters(w);
  while (true) {
    std::fill(letters.begin(), letters.end(), 0);
    while (true) {
      BitVector x(n);
      BitVector z(n);
      for (std::size_t t = 0; t < w; ++t) {
        const PauliLetter l = kLetters[letters[t]];
        x[support[t]] = l != PauliLetter::Z;
        z[support[t]] = l != PauliLetter::X;
      }
      visit(PauliString(std::move(x), std::move(z)));
      std::size_t t = w;
      while (t > 0 && letters[t - 1] == 2) letters[--t] = 0;
      if (t == 0) break;
      ++letters[t - 1];
    }
    // Next subset in lexicographic order.
    std::size_t t = w;
    while (t > 0 && support[t - 1] == n - w + t - 1) --t;
    if (t == 0) return;
    ++support[t - 1];
    for (std::size_t u = t; u < w; ++u) support[u] = support[u - 1] + 1;
  }
}

std::vector<PauliString> enumerate_paulis(std::size_t n, std::size_t max_weight) {
  if (n > kMaxBruteForceQubits) {
    throw CapabilityError("brute-force enumeration limited to n <= " + std::to_string(kMaxBruteForceQubits));
  }
  std::vector<PauliString> out;
  for (std::size_t w = 0; w <= std::min(n, max_weight); ++w) {
    for_each_pauli_of_weight(n, w, [&out](const PauliString& p) { out.push_back(p); });
  }
  return out;
}

bool verify_distance(const StabilizerCode& code, std::size_t d) {
  if (d == 0) throw std::invalid_argument("distance to verify must be at least 1");
  if (code.num_physical() > kMaxBruteForceQubits) {
    throw CapabilityError("verify_distance brute force limited to n <= " + std::to_string(kMaxBruteForceQubits) +
                          ", code has n = " + std::to_string(code.num_physical()));
  }
  bool found_at_d = false;
  for (std::size_t w = 1; w <= std::min(d, code.num_physical()); ++w) {
    bool found = false;
    for_each_pauli_of_weight(code.num_physical(), w, [&](const PauliString& p) {
      if (!found && is_logical(classify(code, p))) found = true;
    });
    if (found && w < d) return false;
    if (found && w == d) found_at_d = true;
  }
  return found_at_d;
}

}  // namespace qecbound
