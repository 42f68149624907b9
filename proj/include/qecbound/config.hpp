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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qecbound/bath.hpp"
#include "qecbound/bounds.hpp"

namespace qecbound {

/// Fully validated run parameters. See docs/config.md for the file schema.
struct RunConfig {
  struct Layout {
    double xi = 0.1;
    double Xi = 100.0;
    int D_x = 1;
    std::int64_t N = 1;
  };
  struct Calibration {
    double c_cal = 1.0;
    double b_cal = 1.0;
    double proportionality = 1.0;
  };

  std::vector<BathChannel> channels;
  /// omega_cutoff already resolved (default 1 / Delta).
  BathGeometry geometry;
  std::string code_name = "five_qubit";
  Layout layout;
  double delta = 1.0;
  double d_crit = 0.01;
  double sigma_plus_abs = 0.5;
  Calibration calibration;
  std::int64_t max_modes = kDefaultModeBudget;

  /// The document as written (unknown keys already rejected).
  nlohmann::json source;
  /// Every field with defaults filled in; the basis of config_hash().
  nlohmann::json resolved;

  const BathChannel* channel(Axis axis) const;
  BoundInput bound_input() const;
  /// 64-bit FNV-1a of the canonical resolved document, as 16 hex digits.
  std::string config_hash() const;
};

/// Validates a parsed document. Errors are ConfigError with the offending
/// key path, e.g. "bath.channels[0].lambda".
RunConfig parse_config(const nlohmann::json& doc);
/// Parses JSON text; syntax errors carry line and column.
RunConfig parse_config_text(std::string_view text, std::string_view origin = "<config>");
RunConfig load_config(const std::filesystem::path& path);

/// Copy of `cfg` with one scalar key (dotted path, e.g. "qec.Delta" or
/// "bath.channels[1].s_exp") set to `value`, re-validated.
RunConfig with_override(const RunConfig& cfg, std::string_view key_path, double value);

}  // namespace qecbound
