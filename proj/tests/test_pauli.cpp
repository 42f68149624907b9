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


#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qecbound/errors.hpp"
#include "qecbound/pauli.hpp"

namespace qecbound {
namespace {

using testing::dense_matrix;
using testing::random_pauli;

TEST(PauliString, ParsesPrefixesAndLetters) {
  const auto p = PauliString::from_str("-iXY_Z");
  EXPECT_EQ(p.num_qubits(), 4u);
  EXPECT_EQ(p.phase(), Phase::minus_i());
  EXPECT_EQ(p.letter(0), PauliLetter::X);
  EXPECT_EQ(p.letter(1), PauliLetter::Y);
  EXPECT_EQ(p.letter(2), PauliLetter::I);
  EXPECT_EQ(p.letter(3), PauliLetter::Z);
  EXPECT_EQ(p.weight(), 3u);
  EXPECT_EQ(p.str(), "-iXYIZ");
  EXPECT_THROW(PauliString::from_str("XQ"), std::invalid_argument);
}

TEST(PauliString, SingleQubitProducts) {
  const auto x = PauliString::from_str("X");
  const auto y = PauliString::from_str("Y");
  const auto z = PauliString::from_str("Z");
  EXPECT_EQ(x * z, PauliString::from_str("-iY"));
  EXPECT_EQ(z * x, PauliString::from_str("iY"));
  EXPECT_EQ(x * y, PauliString::from_str("iZ"));
  EXPECT_EQ(y * z, PauliString::from_str("iX"));
  EXPECT_EQ(y * y, PauliString::from_str("I"));
}

TEST(PauliString, CommutationExamples) {
  EXPECT_FALSE(commutes(PauliString::from_str("XI"), PauliString::from_str("ZI")));
  EXPECT_TRUE(commutes(PauliString::from_str("XX"), PauliString::from_str("ZZ")));
  EXPECT_TRUE(commutes(PauliString::from_str("XZZXI"), PauliString::from_str("IXZZX")));
}

TEST(PauliString, SingleRejectsOutOfRangeQubit) {
  EXPECT_THROW(PauliString::single(3, 3, PauliLetter::X), DimensionError);
  EXPECT_EQ(PauliString::single(3, 1, PauliLetter::Y).str(), "+IYI");
}

TEST(PauliString, MismatchedLengthsAreRejected) {
  EXPECT_THROW(multiply(PauliString(2), PauliString(3)), DimensionError);
}

TEST(PauliProperty, ProductMatchesDenseMatrices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto p = random_pauli(rng, n);
    const auto q = random_pauli(rng, n);
    const Eigen::MatrixXcd expected = dense_matrix(p) * dense_matrix(q);
    ASSERT_TRUE(dense_matrix(p * q).isApprox(expected, 1e-12)) << p << " * " << q;
  }
}

TEST(PauliProperty, CommutesMatchesDenseCommutator) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto p = random_pauli(rng, n);
    const auto q = random_pauli(rng, n);
    const Eigen::MatrixXcd pq = dense_matrix(p) * dense_matrix(q);
    const Eigen::MatrixXcd qp = dense_matrix(q) * dense_matrix(p);
    ASSERT_EQ(commutes(p, q), pq.isApprox(qp, 1e-12)) << p << " , " << q;
  }
}

TEST(PauliProperty, ProductIsAssociativeAndSquaresToIdentity) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const auto a = random_pauli(rng, n);
    const auto b = random_pauli(rng, n);
    const auto c = random_pauli(rng, n);
    ASSERT_EQ((a * b) * c, a * (b * c));
    const auto unsigned_a = a.with_phase(Phase::one());
    ASSERT_EQ(unsigned_a * unsigned_a, PauliString(n));
    // pq = +-qp with the sign fixed by commutation.
    const auto pq = a * b;
    const auto qp = b * a;
    ASSERT_TRUE(pq.equal_up_to_phase(qp));
    ASSERT_EQ(pq.phase() == qp.phase(), commutes(a, b));
  }
}

}  // namespace
}  // namespace qecbound
