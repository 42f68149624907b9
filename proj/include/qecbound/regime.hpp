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

#include <string_view>

#include "qecbound/bath.hpp"

namespace qecbound {

enum class Regime { SuperOhmic, Ohmic, SubOhmic, StrongIR };

/// Which spectral sum is being classified. Single-qubit dephasing has its
/// upper boundary at 2z; the W sums at z. Correlation terms between logical
/// qubits pick up the array dimension.
enum class SumKind { SingleDephasing, WSelf, WCorrelated };

std::string_view to_string(Regime r);
std::string_view to_string(SumKind k);

struct RegimeReport {
  SumKind kind = SumKind::SingleDephasing;
  double zeta = 0.0;
  double z_exp = 1.0;
  double boundary = 2.0;
  Regime regime = Regime::SubOhmic;
};

/// |zeta| below this counts as exactly Ohmic.
inline constexpr double kOhmicTolerance = 1e-12;

/// zeta = 2(z - s) - D, plus D_x for correlation sums. zeta at or above the
/// boundary (within kOhmicTolerance) is StrongIR.
RegimeReport zeta_and_regime(const BathChannel& ch, const BathGeometry& geom, SumKind kind, int array_dimension = 0);

}  // namespace qecbound
