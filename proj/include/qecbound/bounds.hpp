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

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "qecbound/bath.hpp"
#include "qecbound/regime.hpp"

namespace qecbound {

/// Success criterion and bookkeeping constants shared by the step bounds.
/// The calibration constants stand for the order-one prefactors that the
/// scaling laws leave open; both default to 1.
struct BoundInput {
  double d_crit = 0.01;
  double sigma_plus_abs = 0.5;
  std::int64_t num_logical = 1;
  /// QEC period in units of 1/omega_0.
  double delta = 1.0;
  double c_cal = 1.0;
  double b_cal = 1.0;

  void validate() const;
};

/// Maximum number of QEC steps: a non-negative integer or infinity.
class StepBound {
 public:
  static StepBound infinite() { return StepBound(std::numeric_limits<double>::infinity()); }
  /// Floor of a non-negative real bound; +inf and overflow stay infinite.
  static StepBound floor_of(double real_bound);
  static StepBound exact(std::int64_t steps) { return StepBound(static_cast<double>(steps)); }

  bool is_infinite() const { return steps_ == std::numeric_limits<double>::infinity(); }
  double steps() const { return steps_; }
  /// "inf" or the integer value.
  std::string str() const;

  auto operator<=>(const StepBound&) const = default;

 private:
  explicit StepBound(double steps) : steps_(steps) {}
  double steps_;
};

/// Long-time form of gamma(M Delta) for the report's regime, scaled by
/// inputs.c_cal:
///   SuperOhmic  lambda*^2 Delta^(-zeta/z)
///   Ohmic       lambda*^2 ln M
///   SubOhmic    lambda*^2 (Delta M)^(zeta/z)
///   StrongIR    (lambda* Delta)^2 (L / 2 pi)^(zeta - 2z) M^2
double gamma_asymptotic(const RegimeReport& report, const BoundInput& inputs, double lambda_star,
                        const BathGeometry& geom, double M);

/// Isolated logical qubit, closed-form bound:
///   SuperOhmic  inf
///   Ohmic       exp(c_cal D_crit / lambda*^2)
///   SubOhmic    c_cal D_crit^(z/zeta) lambda*^(-2z/zeta) / Delta
///   StrongIR    c_cal (2 pi / L)^(zeta - 2z) sqrt(D_crit) / (lambda* Delta)
/// floored. When `d_sat` is supplied for a super-Ohmic bath it must lie below
/// D_crit, otherwise a DomainError is thrown.
StepBound mmax_single_asymptotic(const RegimeReport& report, const BoundInput& inputs, double lambda_star,
                                 const BathGeometry& geom, std::optional<double> d_sat = std::nullopt);

/// Isolated logical qubit, brute force: the last M before
/// trace_distance_single(gamma(M Delta)) first exceeds D_crit, located by
/// doubling and then bisection (the distance is taken to grow until the first
/// crossing). Infinite when the distance provably stays below D_crit
/// (super-Ohmic with D_sat < D_crit, or even 2 gamma_inf not enough), or when
/// no crossing shows up before 2^52 steps.
StepBound mmax_single_numeric(const ModeGrid<double>& grid, const RegimeReport& report, const BoundInput& inputs,
                              double lambda_star);

/// Long-time form of |sum_{x,y} W_{x,y}(M Delta)| (prefactor 1):
///   SuperOhmic  N Delta^(-zeta/z)
///   Ohmic       N ln M
///   SubOhmic    N (Delta M)^(zeta/z)
///   StrongIR    N Delta (L / 2 pi)^(zeta - z) M
double w_sum_asymptotic(const RegimeReport& report, std::int64_t num_logical, const BathGeometry& geom, double delta,
                        double M);

/// Bound for N logical qubits from one environment channel:
///   SuperOhmic  inf
///   Ohmic       exp(b_cal D_crit / (N lambda*))
///   SubOhmic    Delta^-1 (D_crit / (N lambda*))^(z/zeta)
///   StrongIR    (2 pi / L)^(zeta - z) D_crit / (N lambda* Delta)
/// floored. Combine channels with std::min.
StepBound mmax_multi(const RegimeReport& report, const BoundInput& inputs, double lambda_star,
                     const BathGeometry& geom);

/// c_cal that makes gamma_asymptotic reproduce `measured` at M.
double calibrate_gamma(const RegimeReport& report, const BoundInput& inputs, double lambda_star,
                       const BathGeometry& geom, double M, double measured);

/// c_cal that makes the unfloored mmax_single_asymptotic equal `m_numeric`.
/// Only finite regimes (Ohmic, SubOhmic, StrongIR) can be calibrated.
double calibrate_mmax_single(const RegimeReport& report, const BoundInput& inputs, double lambda_star,
                             const BathGeometry& geom, double m_numeric);

}  // namespace qecbound
