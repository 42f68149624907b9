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
#include <optional>
#include <string>

#include <Eigen/Core>

#include "qecbound/axis.hpp"
#include "qecbound/bath.hpp"
#include "qecbound/errors.hpp"
#include "qecbound/eta_table.hpp"

namespace qecbound {

/// Dimensionless amplitudes a_{ij} between the physical qubits of one
/// logical qubit for one channel. Symmetric and real.
template <typename Scalar>
struct AMatrix {
  Axis channel = Axis::Z;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> values;
  /// Largest |imaginary part| left over from the mode sum; zero up to
  /// rounding because the lattice pairs k with -k.
  Scalar max_imaginary = Scalar(0);

  static AMatrix zero(Axis channel, Eigen::Index n) {
    return AMatrix{channel, Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n), Scalar(0)};
  }
};

/// a_{ij} = (lambda Delta)^2 (2 pi / L)^D sum_{k != 0} |u_k|^2 e^{-i k.(x_i - x_j)}
/// for the physical qubit offsets (columns of `offsets`).
template <typename Scalar>
AMatrix<Scalar> a_matrix(const ModeGrid<Scalar>& grid, const Eigen::Matrix<Scalar, 3, Eigen::Dynamic>& offsets,
                         const BathChannel& channel, Scalar delta) {
  if (grid.empty()) throw ConfigError("a_matrix: empty mode grid");
  if (!(delta > Scalar(0))) throw ConfigError("a_matrix: QEC period must be positive", "Delta");
  const Eigen::Index n = offsets.cols();
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix re = Matrix::Zero(n, n);
  Matrix im = Matrix::Zero(n, n);
  Eigen::Array<Scalar, 1, Eigen::Dynamic> phase(n);
  grid.for_each_mode([&](Eigen::Index shell, const auto& k) {
    const Scalar u2 = grid.u2()(shell);
    phase = (k.transpose() * offsets).array();
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i; j < n; ++j) {
        const Scalar arg = phase(i) - phase(j);
        re(i, j) += u2 * std::cos(arg);
        im(i, j) -= u2 * std::sin(arg);
      }
    }
  });
  const Scalar scale = Scalar(channel.lambda) * delta * Scalar(channel.lambda) * delta * grid.prefactor();
  AMatrix<Scalar> a{channel.axis, Matrix(n, n), Scalar(0)};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      a.values(i, j) = a.values(j, i) = scale * re(i, j);
      a.max_imaginary = std::max(a.max_imaginary, std::abs(scale * im(i, j)));
    }
  }
  return a;
}

/// lambda*_alpha = lambda_alpha sum_{beta,i,j,k} eta^{alpha beta}_{ijk} a_{beta jk},
/// one term per table entry. A channel absent from `a` is an error when the
/// table references it.
template <typename Scalar>
PerAxis<Scalar> lambda_star(const PerAxis<Scalar>& lambda, const EtaTable& eta,
                            const PerAxis<std::optional<AMatrix<Scalar>>>& a) {
  PerAxis<Scalar> result{Scalar(0), Scalar(0)};
  for (const auto& e : eta.entries) {
    const auto& m = a[index_of(e.beta)];
    if (!m) throw ConfigError("eta table references channel " + std::string(to_string(e.beta)) + " with no a-matrix");
    if (m->channel != e.beta) throw ConfigError("a-matrix channel does not match its slot");
    if (m->values.rows() != static_cast<Eigen::Index>(eta.num_qubits)) {
      throw ConfigError("a-matrix size does not match the code");
    }
    result[index_of(e.alpha)] += m->values(static_cast<Eigen::Index>(e.j - 1), static_cast<Eigen::Index>(e.k - 1));
  }
  for (Axis ax : kAxes) result[index_of(ax)] *= lambda[index_of(ax)];
  return result;
}

}  // namespace qecbound
