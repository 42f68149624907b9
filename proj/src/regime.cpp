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

#include "qecbound/regime.hpp"

#include <cmath>

#include "qecbound/errors.hpp"

namespace qecbound {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::SuperOhmic: return "SuperOhmic";
    case Regime::Ohmic: return "Ohmic";
    case Regime::SubOhmic: return "SubOhmic";
    case Regime::StrongIR: return "StrongIR";
  }
  return "?";
}

std::string_view to_string(SumKind k) {
  switch (k) {
    case SumKind::SingleDephasing: return "single_dephasing";
    case SumKind::WSelf: return "w_self";
    case SumKind::WCorrelated: return "w_correlated";
  }
  return "?";
}

RegimeReport zeta_and_regime(const BathChannel& ch, const BathGeometry& geom, SumKind kind, int array_dimension) {
  ch.validate();
  if (kind == SumKind::WCorrelated && (array_dimension < 0 || array_dimension > geom.dimension)) {
    throw ConfigError("array dimension must lie in [0, D] for correlation sums", "D_x");
  }
  RegimeReport report;
  report.kind = kind;
  report.z_exp = ch.z_exp;
  report.zeta = 2.0 * (ch.z_exp - ch.s_exp) - geom.dimension;
  if (kind == SumKind::WCorrelated) report.zeta += array_dimension;
  report.boundary = kind == SumKind::SingleDephasing ? 2.0 * ch.z_exp : ch.z_exp;

  if (std::abs(report.zeta) <= kOhmicTolerance) {
    report.regime = Regime::Ohmic;
  } else if (report.zeta < 0.0) {
    report.regime = Regime::SuperOhmic;
  } else if (report.zeta < report.boundary - kOhmicTolerance) {
    report.regime = Regime::SubOhmic;
  } else {
    report.regime = Regime::StrongIR;
  }
  return report;
}

}  // namespace qecbound
