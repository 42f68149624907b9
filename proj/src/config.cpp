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

#include "qecbound/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "qecbound/errors.hpp"

namespace qecbound {
namespace {

using nlohmann::json;

void reject_unknown(const json& node, const std::string& path, std::initializer_list<std::string_view> allowed) {
  if (!node.is_object()) throw ConfigError(fmt::format("{} must be an object", path.empty() ? "<root>" : path), path);
  const std::set<std::string_view> keys(allowed);
  for (const auto& [key, value] : node.items()) {
    if (!keys.contains(key)) {
      const std::string full = path.empty() ? key : path + "." + key;
      throw ConfigError(fmt::format("unknown key \"{}\"", full), full);
    }
  }
}

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

double read_number(const json& node, const std::string& path, std::string_view key, double fallback) {
  if (!node.contains(key)) return fallback;
  const json& v = node.at(std::string(key));
  if (!v.is_number()) throw ConfigError(fmt::format("{} must be a number", join(path, key)), join(path, key));
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(fmt::format("{} must be finite", join(path, key)), join(path, key));
  return d;
}

std::int64_t read_integer(const json& node, const std::string& path, std::string_view key, std::int64_t fallback) {
  if (!node.contains(key)) return fallback;
  const json& v = node.at(std::string(key));
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::floor(d) == d && std::abs(d) < 9.0e15) return static_cast<std::int64_t>(d);
  }
  throw ConfigError(fmt::format("{} must be an integer", join(path, key)), join(path, key));
}

[[noreturn]] void fail(const std::string& key, const std::string& constraint) {
  throw ConfigError(fmt::format("{} {}", key, constraint), key);
}

Axis parse_axis(const json& node, const std::string& path) {
  const std::string key = join(path, "axis");
  if (!node.contains("axis") || !node.at("axis").is_string()) fail(key, "must be \"x\" or \"z\"");
  const auto s = node.at("axis").get<std::string>();
  if (s == "x") return Axis::X;
  if (s == "z") return Axis::Z;
  fail(key, "must be \"x\" or \"z\"");
}

std::string hex64(std::uint64_t v) { return fmt::format("{:016x}", v); }

}  // namespace

const BathChannel* RunConfig::channel(Axis axis) const {
  for (const auto& ch : channels) {
    if (ch.axis == axis) return &ch;
  }
  return nullptr;
}

BoundInput RunConfig::bound_input() const {
  BoundInput in;
  in.d_crit = d_crit;
  in.sigma_plus_abs = sigma_plus_abs;
  in.num_logical = layout.N;
  in.delta = delta;
  in.c_cal = calibration.c_cal;
  in.b_cal = calibration.b_cal;
  return in;
}

std::string RunConfig::config_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : resolved.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return hex64(h);
}

RunConfig parse_config(const json& doc) {
  reject_unknown(doc, "", {"bath", "code", "layout", "qec", "criteria", "calibration", "budget"});
  RunConfig cfg;
  cfg.source = doc;

  const json empty = json::object();
  auto section = [&](std::string_view name) -> const json& {
    return doc.contains(name) ? doc.at(std::string(name)) : empty;
  };

  // qec first: the cutoff default depends on Delta.
  const json& qec = section("qec");
  reject_unknown(qec, "qec", {"Delta"});
  cfg.delta = read_number(qec, "qec", "Delta", 1.0);
  if (!(cfg.delta > 0.0)) fail("qec.Delta", "must be positive");

  if (!doc.contains("bath")) fail("bath", "is required");
  const json& bath = doc.at("bath");
  reject_unknown(bath, "bath", {"channels", "D", "L", "omega_c"});
  if (!bath.contains("D")) fail("bath.D", "is required");
  const std::int64_t dim = read_integer(bath, "bath", "D", 1);
  if (dim < 1 || dim > 3) fail("bath.D", "must be 1, 2 or 3");
  cfg.geometry.dimension = static_cast<int>(dim);
  cfg.geometry.length = read_number(bath, "bath", "L", cfg.geometry.length);
  if (!(cfg.geometry.length > 0.0)) fail("bath.L", "must be positive");
  cfg.geometry.omega_cutoff = read_number(bath, "bath", "omega_c", 1.0 / cfg.delta);
  if (!(cfg.geometry.omega_cutoff > 0.0)) fail("bath.omega_c", "must be positive");

  if (!bath.contains("channels") || !bath.at("channels").is_array() || bath.at("channels").empty()) {
    fail("bath.channels", "must be a non-empty array");
  }
  const json& channels = bath.at("channels");
  if (channels.size() > 2) fail("bath.channels", "may hold at most two channels");
  for (std::size_t c = 0; c < channels.size(); ++c) {
    const std::string path = fmt::format("bath.channels[{}]", c);
    const json& node = channels.at(c);
    reject_unknown(node, path, {"axis", "z_exp", "s_exp", "lambda"});
    BathChannel ch;
    ch.axis = parse_axis(node, path);
    ch.z_exp = read_number(node, path, "z_exp", 1.0);
    ch.s_exp = read_number(node, path, "s_exp", 0.0);
    ch.lambda = read_number(node, path, "lambda", 0.0);
    if (!(ch.z_exp > 0.0)) fail(path + ".z_exp", "must be positive");
    if (!(ch.lambda >= 0.0)) fail(path + ".lambda", "must be non-negative");
    if (cfg.channel(ch.axis) != nullptr) fail(path + ".axis", "duplicates an earlier channel");
    cfg.channels.push_back(ch);
    // omega_c must admit at least the lowest lattice momentum.
    const double lowest = std::pow(2.0 * std::numbers::pi / cfg.geometry.length, ch.z_exp);
    if (!(cfg.geometry.omega_cutoff > lowest * (1.0 - 1e-12))) {
      fail("bath.omega_c", fmt::format("must exceed the lowest mode frequency {:.6g} of {}", lowest, path));
    }
  }

  const json& code = section("code");
  reject_unknown(code, "code", {"name"});
  if (code.contains("name")) {
    if (!code.at("name").is_string()) fail("code.name", "must be a string");
    cfg.code_name = code.at("name").get<std::string>();
  }
  if (cfg.code_name != "five_qubit") fail("code.name", "must be \"five_qubit\"");

  const json& layout = section("layout");
  reject_unknown(layout, "layout", {"xi", "Xi", "D_x", "N"});
  cfg.layout.xi = read_number(layout, "layout", "xi", cfg.layout.xi);
  cfg.layout.Xi = read_number(layout, "layout", "Xi", cfg.layout.Xi);
  const std::int64_t dx = read_integer(layout, "layout", "D_x", cfg.layout.D_x);
  cfg.layout.N = read_integer(layout, "layout", "N", cfg.layout.N);
  if (!(cfg.layout.xi >= 0.0)) fail("layout.xi", "must be non-negative");
  if (!(cfg.layout.Xi > 0.0)) fail("layout.Xi", "must be positive");
  if (dx < 0) fail("layout.D_x", "must be non-negative");
  if (dx > dim) throw ConfigError("layout.D_x exceeds bath.D", "layout.D_x");
  cfg.layout.D_x = static_cast<int>(dx);
  if (cfg.layout.N < 1) fail("layout.N", "must be at least 1");
  if (cfg.layout.D_x == 0 && cfg.layout.N > 1) fail("layout.N", "must be 1 when layout.D_x is 0");

  const json& criteria = section("criteria");
  reject_unknown(criteria, "criteria", {"D_crit", "sigma_plus_abs"});
  cfg.d_crit = read_number(criteria, "criteria", "D_crit", cfg.d_crit);
  cfg.sigma_plus_abs = read_number(criteria, "criteria", "sigma_plus_abs", cfg.sigma_plus_abs);
  if (!(cfg.d_crit > 0.0 && cfg.d_crit < 1.0)) fail("criteria.D_crit", "must lie in (0, 1)");
  if (!(cfg.sigma_plus_abs >= 0.0 && cfg.sigma_plus_abs <= 0.5)) fail("criteria.sigma_plus_abs", "must lie in [0, 0.5]");

  const json& cal = section("calibration");
  reject_unknown(cal, "calibration", {"c_cal", "b_cal", "proportionality"});
  cfg.calibration.c_cal = read_number(cal, "calibration", "c_cal", 1.0);
  cfg.calibration.b_cal = read_number(cal, "calibration", "b_cal", 1.0);
  cfg.calibration.proportionality = read_number(cal, "calibration", "proportionality", 1.0);
  if (!(cfg.calibration.c_cal > 0.0)) fail("calibration.c_cal", "must be positive");
  if (!(cfg.calibration.b_cal > 0.0)) fail("calibration.b_cal", "must be positive");
  if (!(cfg.calibration.proportionality > 0.0)) fail("calibration.proportionality", "must be positive");

  const json& budget = section("budget");
  reject_unknown(budget, "budget", {"max_modes"});
  cfg.max_modes = read_integer(budget, "budget", "max_modes", cfg.max_modes);
  if (cfg.max_modes < 1) fail("budget.max_modes", "must be positive");

  json resolved_channels = json::array();
  for (const auto& ch : cfg.channels) {
    resolved_channels.push_back(
        {{"axis", std::string(to_string(ch.axis))}, {"z_exp", ch.z_exp}, {"s_exp", ch.s_exp}, {"lambda", ch.lambda}});
  }
  cfg.resolved = {
      {"bath",
       {{"channels", resolved_channels},
        {"D", cfg.geometry.dimension},
        {"L", cfg.geometry.length},
        {"omega_c", cfg.geometry.omega_cutoff}}},
      {"code", {{"name", cfg.code_name}}},
      {"layout", {{"xi", cfg.layout.xi}, {"Xi", cfg.layout.Xi}, {"D_x", cfg.layout.D_x}, {"N", cfg.layout.N}}},
      {"qec", {{"Delta", cfg.delta}}},
      {"criteria", {{"D_crit", cfg.d_crit}, {"sigma_plus_abs", cfg.sigma_plus_abs}}},
      {"calibration",
       {{"c_cal", cfg.calibration.c_cal},
        {"b_cal", cfg.calibration.b_cal},
        {"proportionality", cfg.calibration.proportionality}}},
      {"budget", {{"max_modes", cfg.max_modes}}},
  };
  return cfg;
}

RunConfig parse_config_text(std::string_view text, std::string_view origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("{}: {}", origin, e.what()));
  }
  return parse_config(doc);
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config file {}", path.string()));
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str(), path.string());
}

RunConfig with_override(const RunConfig& cfg, std::string_view key_path, double value) {
  // "bath.channels[1].s_exp" -> /bath/channels/1/s_exp
  std::string pointer;
  std::string segment;
  auto flush = [&] {
    if (segment.empty()) throw ConfigError(fmt::format("malformed key path \"{}\"", key_path));
    pointer += "/" + segment;
    segment.clear();
  };
  for (std::size_t i = 0; i < key_path.size(); ++i) {
    const char c = key_path[i];
    if (c == '.') {
      if (!segment.empty()) flush();
    } else if (c == '[') {
      if (!segment.empty()) flush();
      const auto close = key_path.find(']', i);
      if (close == std::string_view::npos) throw ConfigError(fmt::format("malformed key path \"{}\"", key_path));
      segment = std::string(key_path.substr(i + 1, close - i - 1));
      flush();
      i = close;
    } else {
      segment.push_back(c);
    }
  }
  if (!segment.empty()) flush();

  json doc = cfg.source;
  const json::json_pointer ptr(pointer);
  if (!doc.contains(ptr.parent_pointer())) {
    if (pointer.find("/channels/") != std::string::npos) {
      throw ConfigError(fmt::format("key \"{}\" does not exist", key_path), std::string(key_path));
    }
  }
  if (doc.contains(ptr) && !doc.at(ptr).is_number()) {
    throw ConfigError(fmt::format("key \"{}\" is not a scalar number", key_path), std::string(key_path));
  }
  static const std::set<std::string> kIntegerKeys = {"/bath/D", "/layout/D_x", "/layout/N", "/budget/max_modes"};
  if (kIntegerKeys.contains(pointer)) {
    if (std::floor(value) != value) {
      throw ConfigError(fmt::format("key \"{}\" takes integers, got {}", key_path, value), std::string(key_path));
    }
    doc[ptr] = static_cast<std::int64_t>(value);
  } else {
    doc[ptr] = value;
  }
  return parse_config(doc);
}

}  // namespace qecbound
