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

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "qecbound/bounds.hpp"
#include "qecbound/cli.hpp"
#include "qecbound/errors.hpp"
#include "qecbound/regime.hpp"
#include "qecbound/spectral.hpp"

namespace qecbound::cli {
namespace {

std::vector<double> time_points(const Flags& flags) {
  if (flags.steps < 1) throw ConfigError("--steps must be at least 1");
  if (!(flags.t_max >= 0.0)) throw ConfigError("--t-max must be non-negative");
  if (flags.steps == 1) return {flags.t_max};
  std::vector<double> ts(static_cast<std::size_t>(flags.steps));
  for (int i = 0; i < flags.steps; ++i) ts[static_cast<std::size_t>(i)] = flags.t_max * i / (flags.steps - 1);
  return ts;
}

std::vector<std::string> model_notes(const Model& model) {
  std::vector<std::string> notes;
  const auto& cfg = model.config();
  if (!perturbative_regime_ok(model.lambda_star(), cfg.layout.N)) {
    const double lmax = std::max(model.lambda_star()[0], model.lambda_star()[1]);
    notes.push_back(fmt::format("warning: lambda*^2 N = {} exceeds 0.1; the perturbative bound is unreliable",
                                format_number(lmax * lmax * static_cast<double>(cfg.layout.N))));
  }
  if (!model.layout().well_separated()) notes.push_back("warning: xi is not small against Xi");
  return notes;
}

// Bound from one channel over the W-sum kinds present in the layout: the
// slower-decaying (smaller) one controls.
StepBound multi_bound(const Model& model, Axis axis) {
  const auto& cfg = model.config();
  const BathChannel* ch = cfg.channel(axis);
  if (ch == nullptr) return StepBound::infinite();
  const double ls = model.lambda_star()[index_of(axis)];
  StepBound bound = mmax_multi(zeta_and_regime(*ch, cfg.geometry, SumKind::WSelf), cfg.bound_input(), ls, cfg.geometry);
  if (cfg.layout.N > 1) {
    const auto corr = zeta_and_regime(*ch, cfg.geometry, SumKind::WCorrelated, cfg.layout.D_x);
    bound = std::min(bound, mmax_multi(corr, cfg.bound_input(), ls, cfg.geometry));
  }
  return bound;
}

const ModeGrid<double>& require_z_grid(const Model& model) {
  const auto* grid = model.grid(Axis::Z);
  if (grid == nullptr) throw ConfigError("this subcommand needs a z channel", "bath.channels");
  return *grid;
}

}  // namespace

StabilizerCode code_for(const RunConfig& cfg) {
  if (cfg.code_name == "five_qubit") return five_qubit_code();
  throw ConfigError("unsupported code \"" + cfg.code_name + "\"", "code.name");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  return fmt::format("{:.12g}", v);
}

Model::Model(const RunConfig& cfg)
    : cfg_(cfg),
      code_(code_for(cfg)),
      eta_(enumerate_eta(code_)),
      layout_(make_layout<double>(cfg.layout.N, cfg.layout.D_x, cfg.geometry.dimension, cfg.layout.xi, cfg.layout.Xi,
                                  static_cast<Eigen::Index>(code_.num_physical()))) {
  PerAxis<double> lambda{0.0, 0.0};
  for (const auto& ch : cfg_.channels) {
    const auto i = index_of(ch.axis);
    lambda[i] = ch.lambda;
    grids_[i].emplace(build_mode_grid<double>(cfg_.geometry, ch, cfg_.max_modes));
    a_[i] = a_matrix(*grids_[i], layout_.physical_offsets, ch, cfg_.delta);
  }
  // An absent channel has no bath and contributes zero amplitudes.
  PerAxis<std::optional<AMatrix<double>>> a_all = a_;
  for (Axis ax : kAxes) {
    if (!a_all[index_of(ax)]) {
      a_all[index_of(ax)] = AMatrix<double>::zero(ax, static_cast<Eigen::Index>(code_.num_physical()));
    }
  }
  lambda_star_ = qecbound::lambda_star(lambda, eta_, a_all);
}

const ModeGrid<double>* Model::grid(Axis axis) const {
  const auto& g = grids_[index_of(axis)];
  return g ? &*g : nullptr;
}

Table eta_table(const RunConfig& cfg) {
  const EtaTable eta = enumerate_eta(code_for(cfg));
  Table t{{"alpha", "beta", "i", "j", "k", "logical_type"}, {}, {}};
  for (const auto& e : eta.entries) {
    t.rows.push_back({std::string(to_string(e.alpha)), std::string(to_string(e.beta)), std::to_string(e.i),
                      std::to_string(e.j), std::to_string(e.k), std::string(to_string(e.logical))});
  }
  return t;
}

std::pair<Table, bool> code_check(const RunConfig& cfg) {
  const StabilizerCode code = code_for(cfg);
  const std::size_t n = code.num_physical();
  Table t{{"check", "result"}, {}, {}};
  bool all_ok = true;
  auto record = [&](const char* name, bool ok) {
    t.rows.push_back({name, ok ? "pass" : "fail"});
    all_ok = all_ok && ok;
  };

  const auto inv = check_invariants(code);
  record("generators_commute", inv.generators_commute);
  record("generators_independent", inv.generators_independent);
  record("logicals_commute_with_generators", inv.logicals_commute_with_generators);
  record("logical_pairs_anticommute", inv.logical_pairs_anticommute);

  const auto group = stabilizer_group(code);
  record("stabilizer_group_trivial_syndrome", std::all_of(group.begin(), group.end(), [&](const PauliString& s) {
           return syndrome(code, s).is_trivial() && classify(code, s) == ErrorClass::StabilizerEquivalent;
         }));

  bool weight1 = true;
  for_each_pauli_of_weight(n, 1, [&](const PauliString& p) { weight1 = weight1 && !syndrome(code, p).is_trivial(); });
  record("weight1_detectable", code.distance() < 2 || weight1);

  bool cosets = true;
  for (const auto& p : enumerate_paulis(n, n)) {
    const ErrorClass c = classify(code, p);
    for (const auto& s : group) cosets = cosets && classify(code, p * s) == c;
  }
  record("coset_constancy", cosets);
  record("distance_verified", verify_distance(code, code.distance()));
  record("distance_not_exceeded", !verify_distance(code, code.distance() + 1));
  return {t, all_ok};
}

Table lambda_star_table(const Model& model) {
  Table t{{"axis", "lambda", "lambda_star", "a_onsite", "a_max_imaginary"}, {}, model_notes(model)};
  for (Axis ax : kAxes) {
    const BathChannel* ch = model.config().channel(ax);
    const auto& a = model.a(ax);
    t.rows.push_back({std::string(to_string(ax)), format_number(ch ? ch->lambda : 0.0),
                      format_number(model.lambda_star()[index_of(ax)]), format_number(a ? a->values(0, 0) : 0.0),
                      format_number(a ? a->max_imaginary : 0.0)});
  }
  return t;
}

Table gamma_table(const Model& model, const Flags& flags) {
  const auto& grid = require_z_grid(model);
  const double ls = model.lambda_star()[index_of(Axis::Z)];
  Table t{{"T", "gamma", "trace_distance"}, {}, model_notes(model)};
  for (double T : time_points(flags)) {
    const double g = gamma(grid, ls, T);
    t.rows.push_back(
        {format_number(T), format_number(g), format_number(trace_distance_single(g, model.config().sigma_plus_abs))});
  }
  return t;
}

Table distance_table(const Model& model, const Flags& flags) {
  if (!(flags.t >= 0.0)) throw ConfigError("--t must be non-negative");
  const auto& cfg = model.config();
  const auto& grid = require_z_grid(model);
  const double ls = model.lambda_star()[index_of(Axis::Z)];
  const double g = gamma(grid, ls, flags.t);
  const double hs = hs_distance<double>({model.grid(Axis::X), model.grid(Axis::Z)}, model.lambda_star(),
                                        model.layout().logical, flags.t, cfg.calibration.proportionality);
  Table t{{"T", "gamma", "trace_distance", "d_sat", "hs_distance"}, {}, model_notes(model)};
  t.rows.push_back({format_number(flags.t), format_number(g), format_number(trace_distance_single(g, cfg.sigma_plus_abs)),
                    format_number(d_sat(grid, ls, cfg.sigma_plus_abs)), format_number(hs)});
  return t;
}

Table regimes_table(const RunConfig& cfg) {
  Table t{{"axis", "kind", "zeta", "boundary", "regime"}, {}, {}};
  for (const auto& ch : cfg.channels) {
    for (SumKind kind : {SumKind::SingleDephasing, SumKind::WSelf, SumKind::WCorrelated}) {
      const auto r = zeta_and_regime(ch, cfg.geometry, kind, cfg.layout.D_x);
      t.rows.push_back({std::string(to_string(ch.axis)), std::string(to_string(kind)), format_number(r.zeta),
                        format_number(r.boundary), std::string(to_string(r.regime))});
    }
  }
  return t;
}

Table mmax_table(const Model& model, const Flags& flags) {
  if (flags.mode != "asymptotic" && flags.mode != "numeric") {
    throw ConfigError("--mode must be numeric or asymptotic");
  }
  const auto& cfg = model.config();
  const BoundInput in = cfg.bound_input();
  const double ls_z = model.lambda_star()[index_of(Axis::Z)];

  StepBound single = StepBound::infinite();
  if (const BathChannel* z = cfg.channel(Axis::Z)) {
    const auto report = zeta_and_regime(*z, cfg.geometry, SumKind::SingleDephasing);
    if (flags.mode == "numeric") {
      single = mmax_single_numeric(*model.grid(Axis::Z), report, in, ls_z);
    } else {
      const std::optional<double> dsat =
          report.regime == Regime::SuperOhmic ? std::optional(d_sat(*model.grid(Axis::Z), ls_z, in.sigma_plus_abs))
                                              : std::nullopt;
      single = mmax_single_asymptotic(report, in, ls_z, cfg.geometry, dsat);
    }
  }
  const StepBound multi_x = multi_bound(model, Axis::X);
  const StepBound multi_z = multi_bound(model, Axis::Z);
  Table t{{"mode", "lambda_star_x", "lambda_star_z", "mmax_single_z", "mmax_multi_x", "mmax_multi_z", "mmax_overall"},
          {},
          model_notes(model)};
  t.rows.push_back({flags.mode, format_number(model.lambda_star()[0]), format_number(ls_z), single.str(),
                    multi_x.str(), multi_z.str(), std::min(multi_x, multi_z).str()});
  return t;
}

Table hs_table(const Model& model, const Flags& flags) {
  const auto& cfg = model.config();
  const HsDistance<double> hs({model.grid(Axis::X), model.grid(Axis::Z)}, model.lambda_star(), model.layout().logical,
                              cfg.calibration.proportionality);
  Table t{{"T", "hs_distance"}, {}, model_notes(model)};
  for (double T : time_points(flags)) t.rows.push_back({format_number(T), format_number(hs(T))});
  return t;
}

Table run_target(const std::string& name, const RunConfig& cfg, const Flags& flags, bool& ok) {
  if (name == "eta") return eta_table(cfg);
  if (name == "code-check") {
    auto [table, passed] = code_check(cfg);
    ok = ok && passed;
    return table;
  }
  if (name == "regimes") return regimes_table(cfg);
  const Model model(cfg);
  if (name == "lambda-star") return lambda_star_table(model);
  if (name == "gamma") return gamma_table(model, flags);
  if (name == "distance") return distance_table(model, flags);
  if (name == "mmax") return mmax_table(model, flags);
  if (name == "hs") return hs_table(model, flags);
  throw ConfigError("unknown subcommand \"" + name + "\"");
}

}  // namespace qecbound::cli
