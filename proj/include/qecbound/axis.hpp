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

#include <array>
#include <string_view>

#include "qecbound/pauli.hpp"

namespace qecbound {

/// Environment channel; selects which Pauli operator the bath couples to.
enum class Axis { X, Z };

inline constexpr std::array<Axis, 2> kAxes = {Axis::X, Axis::Z};

inline constexpr std::string_view to_string(Axis a) { return a == Axis::X ? "x" : "z"; }
inline constexpr PauliLetter to_letter(Axis a) { return a == Axis::X ? PauliLetter::X : PauliLetter::Z; }
inline constexpr std::size_t index_of(Axis a) { return a == Axis::X ? 0 : 1; }

/// One value per channel.
template <typename T>
using PerAxis = std::array<T, 2>;

}  // namespace qecbound
