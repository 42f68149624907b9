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

#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qecbound/cli.hpp"
#include "qecbound/errors.hpp"
#include "qecbound/version.hpp"

namespace qecbound::cli {
namespace {

void write_rows(std::ostream& out, const Table& table) {
  for (const auto& note : table.notes) out << "# " << note << '\n';
  out << fmt::format("{}\n", fmt::join(table.columns, ","));
  for (const auto& row : table.rows) out << fmt::format("{}\n", fmt::join(row, ","));
}

std::string describe(const std::string& name, const Flags& f) {
  if (name == "gamma" || name == "hs") return fmt::format("{} --t-max {} --steps {}", name, format_number(f.t_max), f.steps);
  if (name == "distance") return fmt::format("{} --t {}", name, format_number(f.t));
  if (name == "mmax") return fmt::format("{} --mode {}", name, f.mode);
  return name;
}

const std::vector<std::string> kTargets = {"eta",     "code-check", "lambda-star", "gamma",
                                           "distance", "regimes",    "mmax",        "hs"};

}  // namespace

void write_csv(const std::filesystem::path& path, const RunConfig& cfg, const std::string& command,
               const Table& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# qecbound " << kVersion << '\n';
  out << "# config_hash " << cfg.config_hash() << '\n';
  out << "# command " << command << '\n';
  write_rows(out, table);
  if (!out) throw std::runtime_error("error while writing " + path.string());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Step bounds for a QEC-protected register in a bosonic environment", "qecbound"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  app.add_option("--config", config_path, "Run configuration (JSON)")->required();
  app.add_option("--out", out_dir, "Output directory");

  Flags flags;
  std::string sweep_param;
  std::string sweep_target = "mmax";
  double sweep_from = 0.0;
  double sweep_to = 0.0;
  int sweep_points = 2;

  auto add_series = [&](CLI::App* sub) {
    sub->add_option("--t-max", flags.t_max, "Last time point (units of 1/omega_0)")->capture_default_str();
    sub->add_option("--steps", flags.steps, "Number of time points")->capture_default_str();
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", flags.mode, "numeric or asymptotic")
        ->check(CLI::IsMember({"numeric", "asymptotic"}))
        ->capture_default_str();
  };
  auto add_t = [&](CLI::App* sub) { sub->add_option("--t", flags.t, "Evaluation time")->capture_default_str(); };

  app.add_subcommand("eta", "Trivial-syndrome third-order logical error table");
  app.add_subcommand("code-check", "Brute-force code invariants and distance");
  app.add_subcommand("lambda-star", "Effective logical couplings");
  add_series(app.add_subcommand("gamma", "Decoherence function and single-qubit distance series"));
  add_t(app.add_subcommand("distance", "Distances at one time point"));
  app.add_subcommand("regimes", "zeta and regime labels per channel and sum kind");
  add_mode(app.add_subcommand("mmax", "Maximum number of QEC steps"));
  add_series(app.add_subcommand("hs", "Hilbert-Schmidt distance series"));
  CLI::App* sweep = app.add_subcommand("sweep", "Vary one scalar config key and rerun a subcommand");
  sweep->add_option("--param", sweep_param, "Dotted key path, e.g. qec.Delta")->required();
  sweep->add_option("--from", sweep_from, "First value")->required();
  sweep->add_option("--to", sweep_to, "Last value")->required();
  sweep->add_option("--points", sweep_points, "Number of values")->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--target", sweep_target, "Subcommand to rerun")
      ->check(CLI::IsMember(kTargets))
      ->capture_default_str();
  add_series(sweep);
  add_mode(sweep);
  add_t(sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    const RunConfig cfg = load_config(config_path);
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    const std::string name = app.get_subcommands().front()->get_name();
    bool ok = true;

    if (name == "sweep") {
      Table combined;
      for (int p = 0; p < sweep_points; ++p) {
        const double value =
            sweep_points == 1 ? sweep_from : sweep_from + (sweep_to - sweep_from) * p / (sweep_points - 1);
        const RunConfig point = with_override(cfg, sweep_param, value);
        Table t = run_target(sweep_target, point, flags, ok);
        if (combined.columns.empty()) {
          combined.columns.push_back(sweep_param);
          combined.columns.insert(combined.columns.end(), t.columns.begin(), t.columns.end());
        }
        for (auto& row : t.rows) {
          row.insert(row.begin(), format_number(value));
          combined.rows.push_back(std::move(row));
        }
        for (const auto& note : t.notes) combined.notes.push_back(fmt::format("{} = {}: {}", sweep_param, format_number(value), note));
      }
      const std::string command = fmt::format("sweep --param {} --from {} --to {} --points {} --target {}", sweep_param,
                                              format_number(sweep_from), format_number(sweep_to), sweep_points,
                                              describe(sweep_target, flags));
      write_csv(dir / "sweep.csv", cfg, command, combined);
    } else {
      const Table t = run_target(name, cfg, flags, ok);
      write_csv(dir / (name + ".csv"), cfg, describe(name, flags), t);
      if (name == "eta") {
        std::ofstream txt(dir / "eta.txt", std::ios::binary);
        txt << "# qecbound " << kVersion << '\n' << "# config_hash " << cfg.config_hash() << '\n';
        write_eta_text(txt, enumerate_eta(code_for(cfg)));
      }
    }
    if (!ok) {
      err << "qecbound: one or more checks failed\n";
      return 1;
    }
    return 0;
  } catch (const ConfigError& e) {
    err << "qecbound: configuration error: " << e.what() << '\n';
  } catch (const CapabilityError& e) {
    err << "qecbound: capability limit: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "qecbound: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace qecbound::cli
