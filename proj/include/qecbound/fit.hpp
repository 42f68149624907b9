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

#include <span>
#include <utility>

namespace qecbound {

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// Largest |ln value - (intercept + slope ln M)| over the series.
  double max_abs_residual = 0.0;
};

/// Least-squares line through (ln M, ln value). Needs at least 8 points with
/// M strictly increasing and positive; a non-positive value raises
/// DomainError (typically a saturated or wrongly classified series).
SlopeFit fit_loglog_slope(std::span<const std::pair<double, double>> series);

}  // namespace qecbound
