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

#include "qecbound/fit.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "qecbound/errors.hpp"

namespace qecbound {

SlopeFit fit_loglog_slope(std::span<const std::pair<double, double>> series) {
  constexpr std::size_t kMinPoints = 8;
  if (series.size() < kMinPoints) throw std::invalid_argument("log-log fit needs at least 8 points");
  const auto n = static_cast<Eigen::Index>(series.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto [m, value] = series[static_cast<std::size_t>(i)];
    if (!(m > 0.0)) throw DomainError("log-log fit: M must be positive");
    if (i > 0 && !(m > series[static_cast<std::size_t>(i - 1)].first)) {
      throw std::invalid_argument("log-log fit: M must be strictly increasing");
    }
    if (!(value > 0.0)) throw DomainError("log-log fit: non-positive value at M = " + std::to_string(m));
    design(i, 0) = 1.0;
    design(i, 1) = std::log(m);
    rhs(i) = std::log(value);
  }
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(rhs);
  SlopeFit fit;
  fit.intercept = coef(0);
  fit.slope = coef(1);
  fit.max_abs_residual = (design * coef - rhs).cwiseAbs().maxCoeff();
  return fit;
}

}  // namespace qecbound
