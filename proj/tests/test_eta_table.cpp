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


#include <array>
#include <set>
#include <sstream>
#include <tuple>

#include <gtest/gtest.h>

#include "qecbound/errors.hpp"
#include "qecbound/eta_table.hpp"

namespace qecbound {
namespace {

using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;

std::set<Triple> triples(const EtaTable& t, Axis alpha, Axis beta) {
  std::set<Triple> out;
  for (const auto& e : t.entries) {
    if (e.alpha == alpha && e.beta == beta) out.insert({e.i, e.j, e.k});
  }
  return out;
}

TEST(EtaTable, FiveQubitCodeHasTenEntries) {
  const auto table = enumerate_eta(five_qubit_code());
  EXPECT_EQ(table.entries.size(), 10u);
  EXPECT_EQ(table.count(Axis::X, Axis::Z), 5u);
  EXPECT_EQ(table.count(Axis::Z, Axis::X), 5u);
  EXPECT_EQ(table.count(Axis::X, Axis::X), 0u);
  EXPECT_EQ(table.count(Axis::Z, Axis::Z), 0u);
}

TEST(EtaTable, MatchesKnownIndexSets) {
  const auto table = enumerate_eta(five_qubit_code());
  const std::set<Triple> xz{{1, 2, 5}, {2, 1, 3}, {3, 2, 4}, {4, 3, 5}, {5, 1, 4}};
  const std::set<Triple> zx{{1, 3, 4}, {2, 4, 5}, {3, 1, 5}, {4, 1, 2}, {5, 2, 3}};
  EXPECT_EQ(triples(table, Axis::X, Axis::Z), xz);
  EXPECT_EQ(triples(table, Axis::Z, Axis::X), zx);
  for (const auto& e : table.entries) {
    EXPECT_EQ(e.logical, e.alpha == Axis::X ? ErrorClass::LogicalX : ErrorClass::LogicalZ);
    EXPECT_LT(e.j, e.k);
  }
}

TEST(EtaTable, IsClosedUnderCyclicShift) {
  const auto table = enumerate_eta(five_qubit_code());
  const auto shift = [](std::size_t q) { return q % 5 + 1; };
  for (const auto& e : table.entries) {
    auto j = shift(e.j);
    auto k = shift(e.k);
    if (j > k) std::swap(j, k);
    EXPECT_EQ(triples(table, e.alpha, e.beta).count({shift(e.i), j, k}), 1u);
  }
}

TEST(EtaTable, AgreesWithBruteForceOverAllWeightThreePaulis) {
  const auto code = five_qubit_code();
  const auto table = enumerate_eta(code);
  std::set<std::tuple<Axis, Axis, std::size_t, std::size_t, std::size_t>> expected;
  for (const auto alpha : kAxes) {
    for (const auto beta : kAxes) {
      for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
          for (std::size_t k = j + 1; k < 5; ++k) {
            if (i == j || i == k) continue;
            const auto la = alpha == Axis::X ? PauliLetter::X : PauliLetter::Z;
            const auto lb = beta == Axis::X ? PauliLetter::X : PauliLetter::Z;
            const auto p = PauliString::single(5, i, la) * PauliString::single(5, j, lb) *
                           PauliString::single(5, k, lb);
            if (is_logical(classify(code, p))) expected.insert({alpha, beta, i + 1, j + 1, k + 1});
          }
        }
      }
    }
  }
  std::set<std::tuple<Axis, Axis, std::size_t, std::size_t, std::size_t>> got;
  for (const auto& e : table.entries) got.insert({e.alpha, e.beta, e.i, e.j, e.k});
  EXPECT_EQ(got, expected);
}

TEST(EtaTable, LogicalTypeIsInvariantUnderStabilizerMultiplication) {
  const auto code = five_qubit_code();
  const auto table = enumerate_eta(code);
  for (const auto& e : table.entries) {
    const auto op = table.operator_of(e);
    EXPECT_TRUE(syndrome(code, op).is_trivial());
    for (const auto& g : stabilizer_group(code)) EXPECT_EQ(classify(code, op * g), e.logical);
  }
}

TEST(EtaTable, RequiresDistanceThree) {
  EXPECT_THROW(enumerate_eta(trivial_code()), CapabilityError);
}

TEST(EtaTable, TextExportHasHeaderAndOneLinePerEntry) {
  const auto table = enumerate_eta(five_qubit_code());
  std::ostringstream out;
  write_eta_text(out, table);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_NE(line.find("alpha"), std::string::npos);
  EXPECT_NE(line.find("logical_type"), std::string::npos);
  int rows = 0;
  while (std::getline(in, line)) rows += line.empty() ? 0 : 1;
  EXPECT_EQ(rows, 10);
}

}  // namespace
}  // namespace qecbound
