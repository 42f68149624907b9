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

#include "qecbound/bounds.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "qecbound/errors.hpp"
#include "qecbound/spectral.hpp"

namespace qecbound {
namespace {

double box_ratio(const BathGeometry& geom) { return geom.length / (2.0 * std::numbers::pi); }

// Unfloored single-qubit bound with unit calibration; Ohmic returns the
// exponent instead of its exponential.
double single_bound_core(const RegimeReport& r, const BoundInput& in, double lambda_star, const BathGeometry& geom) {
  switch (r.regime) {
    case Regime::Ohmic: return in.d_crit / (lambda_star * lambda_star);
    case Regime::SubOhmic:
      return std::pow(in.d_crit, r.z_exp / r.zeta) * std::pow(lambda_star, -2.0 * r.z_exp / r.zeta) / in.delta;
    case Regime::StrongIR:
      return std::pow(box_ratio(geom), -(r.zeta - r.boundary)) * std::sqrt(in.d_crit) / (lambda_star * in.delta);
    case Regime::SuperOhmic: break;
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace

void BoundInput::validate() const {
  if (!(d_crit > 0.0 && d_crit < 1.0)) throw ConfigError("D_crit must lie in (0, 1)", "D_crit");
  if (!(sigma_plus_abs >= 0.0 && sigma_plus_abs <= 0.5)) {
    throw ConfigError("sigma_plus_abs must lie in [0, 1/2]", "sigma_plus_abs");
  }
  if (!(delta > 0.0)) throw ConfigError("Delta must be positive", "Delta");
  if (num_logical < 1) throw ConfigError("N must be at least 1", "N");
}

StepBound StepBound::floor_of(double real_bound) {
  if (std::isnan(real_bound) || real_bound < 0.0) throw DomainError("step bound must be a non-negative number");
  if (std::isinf(real_bound)) return infinite();
  return StepBound(std::floor(real_bound));
}

std::string StepBound::str() const {
  if (is_infinite()) return "inf";
  if (steps_ < 9.0e15) return fmt::format("{}", static_cast<std::int64_t>(steps_));
  return fmt::format("{:.12g}", steps_);
}

double gamma_asymptotic(const RegimeReport& r, const BoundInput& in, double lambda_star, const BathGeometry& geom,
                        double M) {
  if (!(M >= 1.0)) throw DomainError("gamma_asymptotic: M must be at least 1");
  const double lam2 = lambda_star * lambda_star;
  const double ratio = r.zeta / r.z_exp;
  double value = 0.0;
  switch (r.regime) {
    case Regime::SuperOhmic: value = lam2 * std::pow(in.delta, -ratio); break;
    case Regime::Ohmic: value = lam2 * std::log(M); break;
    case Regime::SubOhmic: value = lam2 * std::pow(in.delta * M, ratio); break;
    case Regime::StrongIR:
      value = lam2 * in.delta * in.delta * std::pow(box_ratio(geom), r.zeta - r.boundary) * M * M;
      break;
  }
  return in.c_cal * value;
}

StepBound mmax_single_asymptotic(const RegimeReport& r, const BoundInput& in, double lambda_star,
                                 const BathGeometry& geom, std::optional<double> d_sat) {
  in.validate();
  if (r.regime == Regime::SuperOhmic) {
    if (d_sat && !(in.d_crit > *d_sat)) {
      throw DomainError(fmt::format("D_crit = {:.6g} does not exceed D_sat = {:.6g}", in.d_crit, *d_sat));
    }
    return StepBound::infinite();
  }
  if (lambda_star == 0.0) return StepBound::infinite();
  const double core = single_bound_core(r, in, lambda_star, geom);
  if (r.regime == Regime::Ohmic) return StepBound::floor_of(std::exp(in.c_cal * core));
  return StepBound::floor_of(in.c_cal * core);
}

StepBound mmax_single_numeric(const ModeGrid<double>& grid, const RegimeReport& r, const BoundInput& in,
                              double lambda_star) {
  in.validate();
  if (!(in.d_crit < in.sigma_plus_abs)) {
    throw CriterionUnreachableError(fmt::format("D_crit = {:.6g} is not below |<sigma+>| = {:.6g}; the distance can "
                                                "never exceed it",
                                                in.d_crit, in.sigma_plus_abs));
  }
  if (lambda_star == 0.0) return StepBound::infinite();
  if (r.regime == Regime::SuperOhmic && d_sat(grid, lambda_star, in.sigma_plus_abs) < in.d_crit) {
    return StepBound::infinite();
  }
  const double gamma_max = 2.0 * lambda_star * lambda_star * static_sum(grid);
  if (trace_distance_single(gamma_max, in.sigma_plus_abs) <= in.d_crit) return StepBound::infinite();

  auto exceeds = [&](std::int64_t M) {
    const double g = gamma(grid, lambda_star, static_cast<double>(M) * in.delta);
    return trace_distance_single(g, in.sigma_plus_abs) > in.d_crit;
  };
  constexpr std::int64_t kHorizon = std::int64_t{1} << 52;
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  while (!exceeds(hi)) {
    lo = hi;
    if (hi >= kHorizon) return StepBound::infinite();
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (exceeds(mid) ? hi : lo) = mid;
  }
  return StepBound::exact(hi - 1);
}

double w_sum_asymptotic(const RegimeReport& r, std::int64_t num_logical, const BathGeometry& geom, double delta,
                        double M) {
  if (!(M >= 1.0)) throw DomainError("w_sum_asymptotic: M must be at least 1");
  const auto n = static_cast<double>(num_logical);
  const double ratio = r.zeta / r.z_exp;
  switch (r.regime) {
    case Regime::SuperOhmic: return n * std::pow(delta, -ratio);
    case Regime::Ohmic: return n * std::log(M);
    case Regime::SubOhmic: return n * std::pow(delta * M, ratio);
    case Regime::StrongIR: return n * delta * std::pow(box_ratio(geom), r.zeta - r.boundary) * M;
  }
  return 0.0;
}

StepBound mmax_multi(const RegimeReport& r, const BoundInput& in, double lambda_star, const BathGeometry& geom) {
  if (in.num_logical < 1) throw ConfigError("mmax_multi needs at least one logical qubit", "N");
  in.validate();
  if (r.regime == Regime::SuperOhmic || lambda_star == 0.0) return StepBound::infinite();
  const double per_qubit = in.d_crit / (static_cast<double>(in.num_logical) * lambda_star);
  switch (r.regime) {
    case Regime::Ohmic: return StepBound::floor_of(std::exp(in.b_cal * per_qubit));
    case Regime::SubOhmic: return StepBound::floor_of(std::pow(per_qubit, r.z_exp / r.zeta) / in.delta);
    case Regime::StrongIR:
      return StepBound::floor_of(std::pow(box_ratio(geom), -(r.zeta - r.boundary)) * per_qubit / in.delta);
    case Regime::SuperOhmic: break;
  }
  return StepBound::infinite();
}

double calibrate_gamma(const RegimeReport& r, const BoundInput& in, double lambda_star, const BathGeometry& geom,
                       double M, double measured) {
  BoundInput unit = in;
  unit.c_cal = 1.0;
  const double reference = gamma_asymptotic(r, unit, lambda_star, geom, M);
  if (!(reference > 0.0)) throw DomainError("gamma calibration point has a vanishing asymptotic value");
  return measured / reference;
}

double calibrate_mmax_single(const RegimeReport& r, const BoundInput& in, double lambda_star,
                             const BathGeometry& geom, double m_numeric) {
  if (r.regime == Regime::SuperOhmic) throw DomainError("a super-Ohmic bound is infinite and has no prefactor");
  if (!(m_numeric >= 1.0)) throw DomainError("calibration needs a numeric bound of at least one step");
  if (lambda_star == 0.0) throw DomainError("calibration needs a nonzero coupling");
  const double core = single_bound_core(r, in, lambda_star, geom);
  if (r.regime == Regime::Ohmic) return std::log(m_numeric) / core;
  return m_numeric / core;
}

}  // namespace qecbound
