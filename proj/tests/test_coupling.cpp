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


#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include <gtest/gtest.h>

#include "qecbound/coupling.hpp"
#include "qecbound/errors.hpp"
#include "qecbound/eta_table.hpp"
#include "qecbound/layout.hpp"

namespace qecbound {
namespace {

constexpr double kPi = std::numbers::pi;
using Positions = Eigen::Matrix<double, 3, Eigen::Dynamic>;
using Matrix = Eigen::MatrixXd;

BathChannel make_channel(Axis axis, double lambda, double s = 0.25) {
  BathChannel c;
  c.axis = axis;
  c.z_exp = 1.0;
  c.s_exp = s;
  c.lambda = lambda;
  return c;
}

ModeGrid<double> test_grid(double s = 0.25) {
  BathGeometry g;
  g.dimension = 1;
  g.length = 2 * kPi * 200;
  return build_mode_grid<double>(g, make_channel(Axis::Z, 1.0, s));
}

AMatrix<double> uniform(Axis axis, double a0) {
  return AMatrix<double>{axis, Matrix::Constant(5, 5, a0), 0.0};
}

TEST(AMatrix, CoincidentQubitsGiveTheOnSiteSum) {
  const auto grid = test_grid();
  const Positions offsets = Positions::Zero(3, 5);
  const auto a = a_matrix(grid, offsets, make_channel(Axis::Z, 0.1), 2.0);
  double onsite = 0;
  grid.for_each_mode([&](Eigen::Index shell, const auto&) { onsite += grid.u2()(shell); });
  onsite *= (0.1 * 2.0) * (0.1 * 2.0) * grid.prefactor();
  EXPECT_NEAR(a.values(0, 0), onsite, 1e-12 * onsite);
  EXPECT_NEAR(a.values.maxCoeff(), onsite, 1e-12 * onsite);
  EXPECT_NEAR(a.values.minCoeff(), onsite, 1e-12 * onsite);
}

TEST(AMatrix, ZeroCouplingGivesZero) {
  const auto layout = make_layout<double>(1, 1, 1, 0.1, 100.0);
  const auto a = a_matrix(test_grid(), layout.physical_offsets, make_channel(Axis::X, 0.0), 1.0);
  EXPECT_TRUE(a.values.isZero(0.0));
}

TEST(AMatrix, SingleModeIsACosine) {
  const double k = 0.5;
  const ModeGrid<double> grid(1, 2 * kPi / k, 10.0, 1.0, 0.0, {1}, {2});
  Positions offsets = Positions::Zero(3, 5);
  for (int q = 0; q < 5; ++q) offsets(0, q) = 0.7 * q;
  const auto a = a_matrix(grid, offsets, make_channel(Axis::Z, 1.0, 0.0), 1.0);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      EXPECT_NEAR(a.values(i, j), k * 2 * std::cos(k * 0.7 * (i - j)), 1e-14);
    }
  }
}

TEST(AMatrixProperty, SymmetricRealAndDiagonallyDominant) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> pos(-3.0, 3.0);
  std::uniform_real_distribution<double> sexp(-0.5, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto grid = test_grid(sexp(rng));
    Positions offsets = Positions::Zero(3, 5);
    for (int q = 0; q < 5; ++q) offsets(0, q) = pos(rng);
    const auto a = a_matrix(grid, offsets, make_channel(Axis::Z, 0.3), 1.5);
    ASSERT_TRUE(a.values.isApprox(a.values.transpose(), 1e-14));
    ASSERT_LT(a.max_imaginary, 1e-12 * a.values(0, 0));
    for (int i = 0; i < 5; ++i) {
      ASSERT_NEAR(a.values(i, i), a.values(0, 0), 1e-12 * a.values(0, 0));
      for (int j = 0; j < 5; ++j) ASSERT_LE(std::abs(a.values(i, j)), a.values(i, i) * (1 + 1e-12));
    }
  }
}

TEST(AMatrix, DoublingThePeriodQuadruplesEntries) {
  const auto grid = test_grid();
  const auto layout = make_layout<double>(1, 1, 1, 0.1, 100.0);
  const auto a1 = a_matrix(grid, layout.physical_offsets, make_channel(Axis::Z, 0.2), 1.0);
  const auto a2 = a_matrix(grid, layout.physical_offsets, make_channel(Axis::Z, 0.2), 2.0);
  EXPECT_TRUE((a2.values - 4 * a1.values).isZero(1e-13 * a1.values(0, 0)));
}

TEST(LambdaStar, UniformAmplitudeCountsTableEntries) {
  const auto eta = enumerate_eta(five_qubit_code());
  const PerAxis<std::optional<AMatrix<double>>> a{uniform(Axis::X, 0.02), uniform(Axis::Z, 0.03)};
  const auto ls = lambda_star(PerAxis<double>{0.1, 0.2}, eta, a);
  EXPECT_NEAR(ls[index_of(Axis::X)], 5 * 0.1 * 0.03, 1e-15);
  EXPECT_NEAR(ls[index_of(Axis::Z)], 5 * 0.2 * 0.02, 1e-15);
}

TEST(LambdaStar, VanishesWithTheAmplitudes) {
  const auto eta = enumerate_eta(five_qubit_code());
  const PerAxis<std::optional<AMatrix<double>>> a{AMatrix<double>::zero(Axis::X, 5), AMatrix<double>::zero(Axis::Z, 5)};
  const auto ls = lambda_star(PerAxis<double>{0.1, 0.2}, eta, a);
  EXPECT_EQ(ls[0], 0.0);
  EXPECT_EQ(ls[1], 0.0);
}

TEST(LambdaStar, RejectsMissingOrMismatchedChannels) {
  const auto eta = enumerate_eta(five_qubit_code());
  const PerAxis<std::optional<AMatrix<double>>> missing{uniform(Axis::X, 0.02), std::nullopt};
  EXPECT_THROW(lambda_star(PerAxis<double>{0.1, 0.2}, eta, missing), ConfigError);
  const PerAxis<std::optional<AMatrix<double>>> swapped{uniform(Axis::Z, 0.02), uniform(Axis::X, 0.02)};
  EXPECT_THROW(lambda_star(PerAxis<double>{0.1, 0.2}, eta, swapped), ConfigError);
  const PerAxis<std::optional<AMatrix<double>>> small{AMatrix<double>::zero(Axis::X, 3), AMatrix<double>::zero(Axis::Z, 3)};
  EXPECT_THROW(lambda_star(PerAxis<double>{0.1, 0.2}, eta, small), ConfigError);
}

TEST(LambdaStarProperty, LinearInOwnCouplingQuadraticInPartner) {
  const auto eta = enumerate_eta(five_qubit_code());
  const auto grid = test_grid();
  const auto layout = make_layout<double>(1, 1, 1, 0.1, 100.0);
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> coupling(0.01, 0.5);
  std::uniform_real_distribution<double> factor(0.2, 5.0);
  auto compute = [&](double lx, double lz) {
    const PerAxis<std::optional<AMatrix<double>>> a{
        a_matrix(grid, layout.physical_offsets, make_channel(Axis::X, lx), 1.0),
        a_matrix(grid, layout.physical_offsets, make_channel(Axis::Z, lz), 1.0)};
    return lambda_star(PerAxis<double>{lx, lz}, eta, a);
  };
  for (int trial = 0; trial < 50; ++trial) {
    const double lx = coupling(rng);
    const double lz = coupling(rng);
    const double c = factor(rng);
    const auto base = compute(lx, lz);
    // lambda*_x = lambda_x * (terms in a_z ~ lambda_z^2).
    const auto scaled_x = compute(c * lx, lz);
    const auto scaled_z = compute(lx, c * lz);
    ASSERT_NEAR(scaled_z[index_of(Axis::X)], c * c * base[index_of(Axis::X)], 1e-12 * std::abs(base[0]) * c * c);
    ASSERT_NEAR(scaled_z[index_of(Axis::Z)], c * base[index_of(Axis::Z)], 1e-12 * std::abs(base[1]) * c);
    ASSERT_NEAR(scaled_x[index_of(Axis::X)], c * base[index_of(Axis::X)], 1e-12 * std::abs(base[0]) * c);
  }
}

TEST(Layout, PlacesLogicalAndPhysicalQubits) {
  const auto layout = make_layout<double>(4, 1, 3, 0.1, 100.0);
  EXPECT_EQ(layout.num_logical(), 4);
  EXPECT_DOUBLE_EQ(layout.logical(0, 3), 300.0);
  EXPECT_NEAR(layout.physical_offsets.rowwise().mean().norm(), 0.0, 1e-15);
  EXPECT_NEAR(layout.physical_offsets(0, 1) - layout.physical_offsets(0, 0), 0.1, 1e-15);
  EXPECT_TRUE(layout.well_separated());
  EXPECT_FALSE(make_layout<double>(2, 1, 1, 20.0, 100.0).well_separated());
  EXPECT_THROW(make_layout<double>(2, 2, 1, 0.1, 100.0), ConfigError);
  EXPECT_THROW(make_layout<double>(2, 0, 1, 0.1, 100.0), ConfigError);
}

}  // namespace
}  // namespace qecbound
