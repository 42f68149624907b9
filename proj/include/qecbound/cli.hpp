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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qecbound/bath.hpp"
#include "qecbound/config.hpp"
#include "qecbound/coupling.hpp"
#include "qecbound/eta_table.hpp"
#include "qecbound/layout.hpp"
#include "qecbound/stabilizer_code.hpp"

namespace qecbound::cli {

/// Rows of pre-formatted cells plus `#` comment lines written after the
/// standard header.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
};

/// Options shared by the subcommands; each subcommand reads the ones it
/// accepts.
struct Flags {
  double t_max = 10.0;
  int steps = 11;
  double t = 1.0;
  std::string mode = "asymptotic";
};

/// Everything derived from a RunConfig: the code, its eta table, the qubit
/// layout, one mode grid per configured channel and the effective couplings.
class Model {
 public:
  explicit Model(const RunConfig& cfg);

  const RunConfig& config() const { return cfg_; }
  const StabilizerCode& code() const { return code_; }
  const EtaTable& eta() const { return eta_; }
  const QubitLayout<double>& layout() const { return layout_; }
  /// Null when the channel is not configured.
  const ModeGrid<double>* grid(Axis axis) const;
  const std::optional<AMatrix<double>>& a(Axis axis) const { return a_[index_of(axis)]; }
  const PerAxis<double>& lambda_star() const { return lambda_star_; }

 private:
  RunConfig cfg_;
  StabilizerCode code_;
  EtaTable eta_;
  QubitLayout<double> layout_;
  PerAxis<std::optional<ModeGrid<double>>> grids_;
  PerAxis<std::optional<AMatrix<double>>> a_;
  PerAxis<double> lambda_star_{0.0, 0.0};
};

std::string format_number(double v);
StabilizerCode code_for(const RunConfig& cfg);

Table eta_table(const RunConfig& cfg);
/// Second element is false when any check failed.
std::pair<Table, bool> code_check(const RunConfig& cfg);
Table lambda_star_table(const Model& model);
Table gamma_table(const Model& model, const Flags& flags);
Table distance_table(const Model& model, const Flags& flags);
Table regimes_table(const RunConfig& cfg);
Table mmax_table(const Model& model, const Flags& flags);
Table hs_table(const Model& model, const Flags& flags);

/// Runs one of eta, code-check, lambda-star, gamma, distance, regimes, mmax,
/// hs for `cfg`. `ok` is cleared when a check-type subcommand fails.
Table run_target(const std::string& name, const RunConfig& cfg, const Flags& flags, bool& ok);

void write_csv(const std::filesystem::path& path, const RunConfig& cfg, const std::string& command,
               const Table& table);

/// Entry point of the qecbound executable. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qecbound::cli
