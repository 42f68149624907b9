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

#include <cmath>
#include <complex>
#include <optional>

#include <Eigen/Core>

#include "qecbound/axis.hpp"
#include "qecbound/bath.hpp"
#include "qecbound/errors.hpp"
#include "qecbound/summation.hpp"

namespace qecbound {

/// Decoherence function
///   gamma(T) = (2 pi / L)^D lambda*^2 sum_k (|u_k|^2 / omega_k^2) (1 - cos omega_k T).
/// 1 - cos x is evaluated as 2 sin^2(x / 2).
template <typename Scalar>
Scalar gamma(const ModeGrid<Scalar>& grid, Scalar lambda_star, Scalar T) {
  if (T < Scalar(0)) throw DomainError("gamma: time must be non-negative");
  const auto half_phase_sin = (grid.omega() * (T / Scalar(2))).sin();
  const Scalar sum = pairwise_sum(grid.multiplicity() * grid.weight() * Scalar(2) * half_phase_sin.square());
  return grid.prefactor() * lambda_star * lambda_star * sum;
}

/// (2 pi / L)^D sum_k |u_k|^2 / omega_k^2, the time-independent part of
/// gamma per unit lambda*^2.
template <typename Scalar>
Scalar static_sum(const ModeGrid<Scalar>& grid) {
  return grid.prefactor() * pairwise_sum(grid.multiplicity() * grid.weight());
}

/// Distance between the dephased and the ideal single-qubit state,
/// |<sigma+>| (1 - exp(-4 gamma)).
template <typename Scalar>
Scalar trace_distance_single(Scalar gamma_value, Scalar sigma_plus_abs) {
  if (gamma_value < Scalar(0)) throw DomainError("trace distance: gamma must be non-negative");
  return -sigma_plus_abs * std::expm1(Scalar(-4) * gamma_value);
}

/// Long-time distance for a saturating bath. The oscillating cos term of
/// gamma is replaced by its long-time mean (zero), i.e. gamma_inf is
/// lambda*^2 times static_sum.
template <typename Scalar>
Scalar d_sat(const ModeGrid<Scalar>& grid, Scalar lambda_star, Scalar sigma_plus_abs) {
  return trace_distance_single(lambda_star * lambda_star * static_sum(grid), sigma_plus_abs);
}

namespace internal {

template <typename Scalar>
std::complex<Scalar> phase_sum(const ModeGrid<Scalar>& grid, const Eigen::Array<Scalar, Eigen::Dynamic, 1>& spatial,
                               Scalar T) {
  using Array = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
  const Array phase = grid.omega() * T;
  const Array half_sin = (phase / Scalar(2)).sin();
  const Array base = grid.weight() * spatial;
  // 1 - exp(-i w T) = 2 sin^2(w T / 2) + i sin(w T)
  const Scalar re = pairwise_sum(base * Scalar(2) * half_sin.square());
  const Scalar im = pairwise_sum(base * phase.sin());
  return grid.prefactor() * std::complex<Scalar>(re, im);
}

}  // namespace internal

/// W_{x,y}(T) = (2 pi / L)^D sum_k (|u_k|^2 / omega_k^2) e^{-i k.(x-y)} (1 - e^{-i omega_k T}).
/// The lattice is symmetric under k -> -k, so only cos(k.(x-y)) survives.
template <typename Scalar, typename DerivedX, typename DerivedY>
std::complex<Scalar> w_pair(const ModeGrid<Scalar>& grid, const Eigen::MatrixBase<DerivedX>& x,
                            const Eigen::MatrixBase<DerivedY>& y, Scalar T) {
  if (T < Scalar(0)) throw DomainError("w_pair: time must be non-negative");
  const Eigen::Matrix<Scalar, 3, 1> d = x - y;
  Eigen::Array<Scalar, Eigen::Dynamic, 1> spatial = Eigen::Array<Scalar, Eigen::Dynamic, 1>::Zero(grid.shell_count());
  grid.for_each_mode([&](Eigen::Index shell, const auto& k) { spatial(shell) += std::cos(k.dot(d)); });
  return internal::phase_sum(grid, spatial, T);
}

/// sum_{x,y} W_{x,y}(T) over a fixed set of positions (all ordered pairs,
/// x = y included). The spatial part sum_{x,y} e^{-i k.(x-y)} = |rho_k|^2
/// with rho_k = sum_x e^{-i k.x} is accumulated per shell once; each time
/// point then costs one pass over the shells.
template <typename Scalar>
class PairSum {
 public:
  using Positions = Eigen::Matrix<Scalar, 3, Eigen::Dynamic>;

  PairSum(const ModeGrid<Scalar>& grid, const Positions& positions)
      : grid_(&grid), structure_(Eigen::Array<Scalar, Eigen::Dynamic, 1>::Zero(grid.shell_count())) {
    Eigen::Array<Scalar, 1, Eigen::Dynamic> phase(positions.cols());
    grid.for_each_mode([&](Eigen::Index shell, const auto& k) {
      phase = (k.transpose() * positions).array();
      const Scalar c = phase.cos().sum();
      const Scalar s = phase.sin().sum();
      structure_(shell) += c * c + s * s;
    });
  }

  std::complex<Scalar> operator()(Scalar T) const {
    if (T < Scalar(0)) throw DomainError("pair sum: time must be non-negative");
    return internal::phase_sum(*grid_, structure_, T);
  }

  /// sum over the shell's modes of |rho_k|^2.
  const Eigen::Array<Scalar, Eigen::Dynamic, 1>& structure_factor() const { return structure_; }

 private:
  const ModeGrid<Scalar>* grid_;
  Eigen::Array<Scalar, Eigen::Dynamic, 1> structure_;
};

template <typename Scalar>
std::complex<Scalar> w_sum(const ModeGrid<Scalar>& grid, const Eigen::Matrix<Scalar, 3, Eigen::Dynamic>& positions,
                           Scalar T) {
  return PairSum<Scalar>(grid, positions)(T);
}

/// Hilbert-Schmidt distance estimate
///   proportionality * sqrt(sum_alpha lambda*_alpha^2 |sum_{x,y} W^alpha_{x,y}(T)|^2)
/// for a series of times. A channel whose grid pointer is null contributes
/// nothing.
template <typename Scalar>
class HsDistance {
 public:
  using Positions = Eigen::Matrix<Scalar, 3, Eigen::Dynamic>;

  HsDistance(const PerAxis<const ModeGrid<Scalar>*>& grids, const PerAxis<Scalar>& lambda_star,
             const Positions& positions, Scalar proportionality)
      : lambda_star_(lambda_star), proportionality_(proportionality) {
    for (Axis a : kAxes) {
      const auto i = index_of(a);
      if (grids[i] != nullptr && lambda_star[i] != Scalar(0)) sums_[i].emplace(*grids[i], positions);
    }
  }

  Scalar operator()(Scalar T) const {
    if (T < Scalar(0)) throw DomainError("hs_distance: time must be non-negative");
    Scalar total(0);
    for (Axis a : kAxes) {
      const auto i = index_of(a);
      if (!sums_[i]) continue;
      total += lambda_star_[i] * lambda_star_[i] * std::norm((*sums_[i])(T));
    }
    return proportionality_ * std::sqrt(total);
  }

 private:
  PerAxis<Scalar> lambda_star_;
  Scalar proportionality_;
  PerAxis<std::optional<PairSum<Scalar>>> sums_;
};

template <typename Scalar>
Scalar hs_distance(const PerAxis<const ModeGrid<Scalar>*>& grids, const PerAxis<Scalar>& lambda_star,
                   const Eigen::Matrix<Scalar, 3, Eigen::Dynamic>& positions, Scalar T, Scalar proportionality) {
  return HsDistance<Scalar>(grids, lambda_star, positions, proportionality)(T);
}

/// The perturbative expansion behind the distance estimates needs
/// lambda*^2 N << 1; this flags max(lambda*)^2 N > 0.1.
template <typename Scalar>
bool perturbative_regime_ok(const PerAxis<Scalar>& lambda_star, Eigen::Index num_logical) {
  const Scalar lmax = std::max(std::abs(lambda_star[0]), std::abs(lambda_star[1]));
  return lmax * lmax * Scalar(num_logical) <= Scalar(0.1);
}

}  // namespace qecbound
