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
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <fmt/format.h>

#include "qecbound/axis.hpp"
#include "qecbound/errors.hpp"

namespace qecbound {

// Units throughout: omega_0 = k_0 = kappa_0 = 1, so times are in 1/omega_0
// and lengths in 1/k_0.

/// Bosonic bath coupled to one Pauli axis: omega_k = |k|^z_exp and
/// |u_k|^2 = |k|^(2 s_exp).
struct BathChannel {
  Axis axis = Axis::Z;
  double z_exp = 1.0;
  double s_exp = 0.0;
  double lambda = 0.0;

  void validate() const {
    if (!(z_exp > 0.0)) throw ConfigError("z_exp must be positive", "z_exp");
    if (!(lambda >= 0.0)) throw ConfigError("lambda must be non-negative", "lambda");
  }
};

struct BathGeometry {
  int dimension = 1;
  /// Linear size of the periodic box; the smallest momentum is 2 pi / length.
  double length = 2.0 * std::numbers::pi * 1.0e4;
  /// Sharp frequency cutoff.
  double omega_cutoff = 1.0;

  void validate() const {
    if (dimension < 1 || dimension > 3) throw ConfigError("dimension must be 1, 2 or 3", "D");
    if (!(length > 0.0)) throw ConfigError("length must be positive", "L");
    if (!(omega_cutoff > 0.0)) throw ConfigError("omega_c must be positive", "omega_c");
  }
};

inline constexpr std::int64_t kDefaultModeBudget = 10'000'000;

/// Momentum lattice k = (2 pi / L) n, n != 0, truncated at omega_k <= omega_c.
///
/// Modes are grouped into shells of equal |n|^2: every quantity that depends
/// on |k| only is stored once per shell together with the shell's
/// multiplicity. Individual vectors are produced on demand by for_each_mode.
/// The lattice is closed under k -> -k.
template <typename Scalar>
class ModeGrid {
 public:
  using Array = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
  using Vector = Eigen::Matrix<Scalar, 3, 1>;

  ModeGrid(int dimension, Scalar length, Scalar omega_cutoff, Scalar z_exp, Scalar s_exp,
           std::vector<std::int64_t> shell_norm2, std::vector<std::int64_t> multiplicity)
      : dimension_(dimension),
        length_(length),
        omega_cutoff_(omega_cutoff),
        k_unit_(Scalar(2) * std::numbers::pi_v<Scalar> / length),
        prefactor_(std::pow(k_unit_, Scalar(dimension))),
        norm2_(std::move(shell_norm2)) {
    const auto shells = static_cast<Eigen::Index>(norm2_.size());
    multiplicity_.resize(shells);
    k_.resize(shells);
    for (Eigen::Index s = 0; s < shells; ++s) {
      multiplicity_(s) = Scalar(multiplicity[static_cast<std::size_t>(s)]);
      k_(s) = k_unit_ * std::sqrt(Scalar(norm2_[static_cast<std::size_t>(s)]));
      mode_count_ += multiplicity[static_cast<std::size_t>(s)];
    }
    omega_ = k_.pow(z_exp);
    u2_ = k_.pow(Scalar(2) * s_exp);
    weight_ = u2_ / omega_.square();
  }

  int dimension() const { return dimension_; }
  Scalar length() const { return length_; }
  Scalar omega_cutoff() const { return omega_cutoff_; }
  /// (2 pi / L)^D.
  Scalar prefactor() const { return prefactor_; }
  Scalar k_unit() const { return k_unit_; }

  Eigen::Index shell_count() const { return k_.size(); }
  std::int64_t mode_count() const { return mode_count_; }
  bool empty() const { return mode_count_ == 0; }

  const std::vector<std::int64_t>& shell_norm2() const { return norm2_; }
  const Array& multiplicity() const { return multiplicity_; }
  const Array& k() const { return k_; }
  const Array& omega() const { return omega_; }
  const Array& u2() const { return u2_; }
  /// |u_k|^2 / omega_k^2 per mode of the shell.
  const Array& weight() const { return weight_; }

  Eigen::Index shell_of(std::int64_t norm2) const {
    const auto it = std::lower_bound(norm2_.begin(), norm2_.end(), norm2);
    if (it == norm2_.end() || *it != norm2) return -1;
    return static_cast<Eigen::Index>(it - norm2_.begin());
  }

  /// Calls visit(shell_index, k) for every lattice vector, n in lexicographic
  /// order. Unused components of k are zero.
  template <typename Visit>
  void for_each_mode(Visit&& visit) const {
    if (norm2_.empty()) return;
    const std::int64_t max_norm2 = norm2_.back();
    const auto radius = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(max_norm2)))) + 1;
    Vector k = Vector::Zero();
    auto emit = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
      const std::int64_t m = a * a + b * b + c * c;
      if (m == 0 || m > max_norm2) return;
      const Eigen::Index shell = shell_of(m);
      if (shell < 0) return;
      k << k_unit_ * Scalar(a), k_unit_ * Scalar(b), k_unit_ * Scalar(c);
      visit(shell, static_cast<const Vector&>(k));
    };
    for (std::int64_t a = -radius; a <= radius; ++a) {
      if (dimension_ == 1) {
        emit(a, 0, 0);
        continue;
      }
      const std::int64_t rest_a = max_norm2 - a * a;
      if (rest_a < 0) continue;
      const auto rb = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(rest_a))));
      for (std::int64_t b = -rb; b <= rb; ++b) {
        if (dimension_ == 2) {
          emit(a, b, 0);
          continue;
        }
        const std::int64_t rest_b = rest_a - b * b;
        const auto rc = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(rest_b))));
        for (std::int64_t c = -rc; c <= rc; ++c) emit(a, b, c);
      }
    }
  }

 private:
  int dimension_;
  Scalar length_;
  Scalar omega_cutoff_;
  Scalar k_unit_;
  Scalar prefactor_;
  std::int64_t mode_count_ = 0;
  std::vector<std::int64_t> norm2_;
  Array multiplicity_;
  Array k_;
  Array omega_;
  Array u2_;
  Array weight_;
};

/// Enumerates the momentum lattice for one channel. Throws CapabilityError
/// when the number of modes would exceed `max_modes`, and ConfigError when
/// the cutoff admits no mode at all.
template <typename Scalar = double>
ModeGrid<Scalar> build_mode_grid(const BathGeometry& geom, const BathChannel& ch,
                                 std::int64_t max_modes = kDefaultModeBudget) {
  geom.validate();
  ch.validate();
  const double k_unit = 2.0 * std::numbers::pi / geom.length;
  const double k_cut = std::pow(geom.omega_cutoff, 1.0 / ch.z_exp);
  const double r_cut = k_cut / k_unit * (1.0 + 1e-12);
  const double r2_cut = r_cut * r_cut;
  const auto radius = static_cast<std::int64_t>(std::floor(r_cut));

  auto budget_error = [&](double modes) {
    return CapabilityError(fmt::format("mode budget exceeded: L = {:.6g}, omega_c = {:.6g} gives ~{:.3g} modes, budget {}",
                                       geom.length, geom.omega_cutoff, modes, max_modes));
  };
  constexpr double kBallVolume[] = {0.0, 2.0, std::numbers::pi, 4.0 * std::numbers::pi / 3.0};
  const double estimate = kBallVolume[geom.dimension] * std::pow(static_cast<double>(radius), geom.dimension);
  if (estimate > 2.0 * static_cast<double>(max_modes) + 64.0) throw budget_error(estimate);

  std::vector<std::int64_t> norm2;
  std::vector<std::int64_t> multiplicity;
  if (geom.dimension == 1) {
    norm2.reserve(static_cast<std::size_t>(radius));
    for (std::int64_t n = 1; n <= radius; ++n) {
      if (static_cast<double>(n * n) > r2_cut) break;
      norm2.push_back(n * n);
      multiplicity.push_back(2);
    }
  } else {
    // Integer norms up to floor(r_cut^2), which can exceed radius^2.
    const auto max_norm2 = static_cast<std::int64_t>(std::floor(r2_cut));
    std::vector<std::int64_t> histogram(static_cast<std::size_t>(max_norm2) + 1, 0);
    for (std::int64_t a = -radius; a <= radius; ++a) {
      for (std::int64_t b = -radius; b <= radius; ++b) {
        const std::int64_t ab = a * a + b * b;
        if (ab > max_norm2) continue;
        if (geom.dimension == 2) {
          ++histogram[static_cast<std::size_t>(ab)];
          continue;
        }
        for (std::int64_t c = -radius; c <= radius; ++c) {
          const std::int64_t m = ab + c * c;
          if (m <= max_norm2) ++histogram[static_cast<std::size_t>(m)];
        }
      }
    }
    for (std::int64_t m = 1; m <= max_norm2; ++m) {
      if (histogram[static_cast<std::size_t>(m)] == 0 || static_cast<double>(m) > r2_cut) continue;
      norm2.push_back(m);
      multiplicity.push_back(histogram[static_cast<std::size_t>(m)]);
    }
  }
  std::int64_t total = 0;
  for (auto c : multiplicity) total += c;
  if (total > max_modes) throw budget_error(static_cast<double>(total));
  if (total == 0) {
    throw ConfigError(fmt::format("omega_c = {:.6g} lies below the lowest mode frequency {:.6g} for L = {:.6g}",
                                  geom.omega_cutoff, std::pow(k_unit, ch.z_exp), geom.length),
                      "omega_c");
  }
  return ModeGrid<Scalar>(geom.dimension, Scalar(geom.length), Scalar(geom.omega_cutoff), Scalar(ch.z_exp),
                          Scalar(ch.s_exp), std::move(norm2), std::move(multiplicity));
}

}  // namespace qecbound
