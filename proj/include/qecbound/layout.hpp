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

#include <algorithm>
#include <cmath>
#include <cstddef>

#include <Eigen/Core>

#include "qecbound/errors.hpp"

namespace qecbound {

/// Positions of logical qubits and of the physical qubits inside each one.
/// Positions are columns of 3-row matrices; components beyond the bath
/// dimension are zero.
template <typename Scalar>
struct QubitLayout {
  using Positions = Eigen::Matrix<Scalar, 3, Eigen::Dynamic>;

  Positions logical;
  /// Offsets of the physical qubits from their logical qubit's position.
  Positions physical_offsets;
  Scalar xi = Scalar(0);
  Scalar Xi = Scalar(0);
  int array_dimension = 1;

  Eigen::Index num_logical() const { return logical.cols(); }

  /// False when the intra-logical spacing is not small against the
  /// inter-logical one (xi > Xi / 10).
  bool well_separated() const {
    if (num_logical() <= 1 || !std::isfinite(static_cast<double>(Xi))) return true;
    return xi * Scalar(10) <= Xi;
  }
};

namespace internal {

// First `count` sites of a hypercubic block of side ceil(count^(1/dim)),
// filled with the first axis varying fastest, spacing 1.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, Eigen::Dynamic> block_sites(Eigen::Index count, int dim) {
  Eigen::Matrix<Scalar, 3, Eigen::Dynamic> sites = Eigen::Matrix<Scalar, 3, Eigen::Dynamic>::Zero(3, count);
  if (dim == 0) return sites;
  auto side = static_cast<Eigen::Index>(std::ceil(std::pow(static_cast<double>(count), 1.0 / dim) - 1e-9));
  while (static_cast<double>(std::pow(static_cast<double>(side), dim)) < static_cast<double>(count)) ++side;
  for (Eigen::Index s = 0; s < count; ++s) {
    Eigen::Index rest = s;
    for (int d = 0; d < dim; ++d) {
      sites(d, s) = Scalar(rest % side);
      rest /= side;
    }
  }
  return sites;
}

}  // namespace internal

/// Logical qubits on a regular `array_dimension`-dimensional array with
/// spacing Xi starting at the origin; inside each, `physical_per_logical`
/// qubits on a regular array with spacing xi centred on the logical position.
/// The physical arrangement uses max(array_dimension, 1) axes.
template <typename Scalar = double>
QubitLayout<Scalar> make_layout(Eigen::Index num_logical, int array_dimension, int bath_dimension, Scalar xi, Scalar Xi,
                                Eigen::Index physical_per_logical = 5) {
  if (num_logical < 1) throw ConfigError("at least one logical qubit is required", "N");
  if (array_dimension < 0 || array_dimension > bath_dimension) {
    throw ConfigError("array dimension exceeds the bath dimension", "D_x");
  }
  if (array_dimension == 0 && num_logical > 1) {
    throw ConfigError("a zero-dimensional array holds a single logical qubit", "D_x");
  }
  if (!(xi >= Scalar(0))) throw ConfigError("xi must be non-negative", "xi");
  if (!(Xi > Scalar(0))) throw ConfigError("Xi must be positive", "Xi");

  QubitLayout<Scalar> layout;
  layout.xi = xi;
  layout.Xi = Xi;
  layout.array_dimension = array_dimension;
  layout.logical = Xi * internal::block_sites<Scalar>(num_logical, array_dimension);
  auto offsets = internal::block_sites<Scalar>(physical_per_logical, std::max(array_dimension, 1));
  const Eigen::Matrix<Scalar, 3, 1> centroid = offsets.rowwise().mean();
  offsets.colwise() -= centroid;
  layout.physical_offsets = xi * offsets;
  return layout;
}

}  // namespace qecbound
