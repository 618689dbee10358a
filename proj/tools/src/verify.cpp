#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "thermoqubit/cli/commands.hpp"
#include "thermoqubit/cli/output.hpp"
#include "thermoqubit/cli/report.hpp"
#include "thermoqubit/gate_encoding.hpp"
#include "thermoqubit/observables.hpp"
#include "thermoqubit/tfd.hpp"
#include "thermoqubit/wigner.hpp"

namespace thermoqubit::cli {

namespace {

const double kTemperatures[] = {0.0, 0.1, 0.3, 1.0, 10.0};
const double kGateTemperatures[] = {0.0, 0.2, 0.5};
const double kAuditTemperatures[] = {0.0, 0.1, 0.3, 1.0};
const double kWignerNormTemperatures[] = {0.1, 10.0};
constexpr int kGateCutoff = 40;
constexpr std::uint64_t kSeed = 20240611;
constexpr double kDeepTailTol = 1e-14;

double logical_distance(const LogicalState& a, const LogicalState& b) {
  return std::max({std::abs(a.xp - b.xp), std::abs(a.yp - b.yp), std::abs(a.zp - b.zp),
                   std::abs(a.wp - b.wp)});
}

void density_checks(const SweepConfig& cfg, double n_bar, std::vector<Check>& out) {
  const ThermalParams p = ThermalParams::from_n_bar(n_bar);
  const int cutoff = resolve_state_cutoff(cfg.amps, p, cfg.cutoff, cfg.tail_tol);
  const FockMatrix expansion = thermal_state_density_expansion(cfg.amps, p, cutoff, cfg.tail_tol);
  const FockMatrix op = thermal_state_density_operator(cfg.amps, p, cutoff, cfg.tail_tol);
  const FockMatrix doubled =
      reduced_density(thermal_state_vector(cfg.amps, p, cutoff, cfg.tail_tol), Mode::original);

  out.push_back(make_check("density_expansion_vs_operator", n_bar,
                           max_abs_difference(expansion, op), "<", 1e-9));
  out.push_back(make_check("density_expansion_vs_doubled_space", n_bar,
                           max_abs_difference(expansion, doubled), "<", 1e-9));
  double herm = 0.0;
  double trace = 0.0;
  double min_eig = 1.0;
  for (const FockMatrix* r : {&expansion, &op, &doubled}) {
    herm = std::max(herm, hermiticity_defect(*r));
    trace = std::max(trace, std::abs(r->trace().real() - 1.0));
    min_eig = std::min(min_eig, min_eigenvalue(*r));
  }
  out.push_back(make_check("density_hermiticity_defect", n_bar, herm, "<", 1e-12));
  out.push_back(make_check("density_trace_defect", n_bar, trace, "<", 1e-9));
  out.push_back(make_check("density_min_eigenvalue", n_bar, min_eig, ">=", -1e-9));

  // Origin value of W against the parity of ρ.
  double parity = 0.0;
  for (int n = 0; n <= expansion.cutoff(); ++n) {
    parity += (n % 2 == 0 ? 1.0 : -1.0) * expansion(n, n).real();
  }
  const WignerGrid origin =
      wigner_from_density(expansion, GridSpec{-1.0, 1.0, 3, -1.0, 1.0, 3, 1.0}, cfg.threads);
  out.push_back(make_check("wigner_origin_parity", n_bar,
                           std::abs(origin.values(1, 1) - parity / std::numbers::pi), "<", 1e-10));

  if (n_bar == 0.0) {
    out.push_back(make_check("fidelity_zero_temperature", n_bar,
                             std::abs(fidelity_numeric(cfg.amps, p, cfg.cutoff, cfg.tail_tol) - 1.0),
                             "<", 1e-12));
  }
}

void thermal_vacuum_checks(double n_bar, const SweepConfig& cfg, std::vector<Check>& out) {
  // The truncated unitary pushes the discarded tail weight (~tail_tol) back
  // into the kept coefficients, so these run with a tail well below the
  // check tolerance.
  const ThermalParams p = ThermalParams::from_n_bar(n_bar);
  const FockVector vac = thermal_vacuum_state(p, kAutoCutoff, kDeepTailTol);
  const FockMatrix reduced = reduced_density(vac, Mode::original);
  const FockMatrix geometric = thermal_vacuum_density(p, vac.cutoff(), kDeepTailTol);
  out.push_back(make_check("bogoliubov_reduction_vs_geometric", n_bar,
                           max_abs_difference(reduced, geometric), "<", 1e-10));

  const FockVector& deep = vac;
  const FockVector n_deep = apply(number_operator(deep.cutoff()), deep, Mode::original);
  out.push_back(make_check("thermal_vacuum_mean_occupation", n_bar,
                           std::abs(deep.data().dot(n_deep.data()).real() - n_bar), "<", 1e-10));

  const PhysicalAmplitudes vacuum{1.0, 0.0, 0.0, 0.0};
  if (n_bar > 0.0) {
    out.push_back(make_check("mandel_thermal_identity", n_bar,
                             std::abs(mandel_numeric(vacuum, p, kAutoCutoff, cfg.tail_tol) - n_bar),
                             "<", 1e-9));
  } else {
    bool threw = false;
    try {
      mandel_numeric(vacuum, p, kAutoCutoff, cfg.tail_tol);
    } catch (const UndefinedMandelError&) {
      threw = true;
    }
    out.push_back(make_check("mandel_undefined_for_vacuum", n_bar, threw ? 1.0 : 0.0, "==", 1.0));
  }
}

void gate_checks(const SweepConfig& cfg, std::vector<Check>& out) {
  const FockMatrix gate = half_period_gate_matrix(kGateCutoff);
  for (const double n_bar : kGateTemperatures) {
    out.push_back(make_check(
        "gate_thermalization_residual", n_bar,
        gate_thermalization_residual(gate, cfg.amps, ThermalParams::from_n_bar(n_bar),
                                     cfg.tail_tol),
        "<", 1e-8, "half-period parity gate, cutoff 40"));
  }

  const LogicalState rows[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  double table = 0.0;
  for (const auto& s : rows) {
    table = std::max(table,
                     logical_distance(decode(evolve_half_period(encode(s))), cnot_logical(s)));
  }
  out.push_back(make_check("cnot_truth_table", std::nullopt, table, "<", 1e-12));

  std::mt19937_64 rng(kSeed);
  std::normal_distribution<double> g(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    LogicalState s{{g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}};
    const double n = std::sqrt(s.norm_squared());
    s = {s.xp / n, s.yp / n, s.zp / n, s.wp / n};
    worst = std::max(worst,
                     logical_distance(decode(evolve_half_period(encode(s))), cnot_logical(s)));
  }
  out.push_back(make_check("cnot_random_states", std::nullopt, worst, "<", 1e-12,
                           "100 random logical states"));
}

void observable_checks(const SweepConfig& cfg, std::vector<Check>& out) {
  // Decay is a property of the reference state, not of arbitrary amplitudes.
  double rise = 0.0;
  double last = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double f = fidelity_numeric(PhysicalAmplitudes::reference(),
                                      ThermalParams::from_n_bar(2.0 * i / 99.0), cfg.cutoff,
                                      cfg.tail_tol);
    if (i > 0) rise = std::max(rise, f - last);
    last = f;
  }
  out.push_back(make_check("fidelity_monotone_nonincreasing", std::nullopt, rise, "<=", 1e-10,
                           "reference amplitudes; largest step increase over n_bar in [0, 2], 100 points"));

  const ThermalParams zero = ThermalParams::from_n_bar(0.0);
  try {
    const double q_num = mandel_numeric(cfg.amps, zero, cfg.cutoff, cfg.tail_tol);
    const double q_cf = mandel_closed_form_value(cfg.amps, zero);
    out.push_back(make_check("mandel_closed_form_zero_temperature", 0.0, std::abs(q_num - q_cf),
                             "<", 1e-9));
  } catch (const UndefinedMandelError&) {
    out.push_back(make_check("mandel_closed_form_zero_temperature", 0.0, 0.0, "<", 1e-9,
                             "Q undefined for these amplitudes; nothing to compare"));
  }

  for (const double n_bar : kWignerNormTemperatures) {
    const ThermalParams p = ThermalParams::from_n_bar(n_bar);
    const FockMatrix rho = thermal_state_density_expansion(cfg.amps, p, cfg.cutoff, cfg.tail_tol);
    const WignerGrid w = wigner_normalized(rho, cfg.grid, 1e-6, cfg.threads);
    out.push_back(make_check("wigner_normalization", n_bar, std::abs(wigner_integral(w) - 1.0),
                             "<", 1e-6));
  }
}

nlohmann::json audit(const SweepConfig& cfg) {
  nlohmann::json entries = nlohmann::json::array();
  const GridSpec grid{-6.0, 6.0, 121, -6.0, 6.0, 121, cfg.grid.length_scale};
  for (const double n_bar : kAuditTemperatures) {
    const ThermalParams p = ThermalParams::from_n_bar(n_bar);
    const ObservableReport f = fidelity_closed_form(cfg.amps, p, cfg.cutoff, cfg.tail_tol);
    entries.push_back({{"quantity", "fidelity"},
                       {"n_bar", n_bar},
                       {"numeric", json_number(f.value_numeric)},
                       {"closed_form", json_number(f.value_closed_form.value_or(NAN))},
                       {"discrepancy", json_number(f.abs_discrepancy.value_or(NAN))}});

    nlohmann::json m = {{"quantity", "mandel_q"}, {"n_bar", n_bar}};
    try {
      const ObservableReport r = mandel_closed_form(cfg.amps, p, cfg.cutoff, cfg.tail_tol);
      m["numeric"] = json_number(r.value_numeric);
      m["closed_form"] = json_number(r.value_closed_form.value_or(NAN));
      m["discrepancy"] = json_number(r.abs_discrepancy.value_or(NAN));
      for (const auto& [k, v] : r.details) m[k] = json_number(v);
    } catch (const UndefinedMandelError& e) {
      m["numeric"] = nullptr;
      m["closed_form"] = nullptr;
      m["discrepancy"] = nullptr;
      m["note"] = e.what();
    }
    entries.push_back(m);

    nlohmann::json w = {{"quantity", "wigner"}, {"n_bar", n_bar}};
    if (cfg.amps.is_real()) {
      const WignerComparison c =
          wigner_closed_form(cfg.amps, p, grid, cfg.cutoff, cfg.tail_tol, cfg.threads);
      w["discrepancy"] = json_number(c.max_abs_discrepancy);
      w["integrated_abs_discrepancy"] = json_number(c.integrated_abs_discrepancy);
      w["numeric_integral"] = json_number(c.numeric_integral);
      w["closed_form_integral"] = json_number(c.closed_form_integral);
    } else {
      w["discrepancy"] = nullptr;
      w["note"] = "closed form is defined for real amplitudes only";
    }
    entries.push_back(w);
  }
  return entries;
}

}  // namespace

CommandResult cmd_verify(const SweepConfig& cfg) {
  std::vector<Check> checks;
  for (const double n_bar : kTemperatures) {
    density_checks(cfg, n_bar, checks);
    thermal_vacuum_checks(n_bar, cfg, checks);
  }
  gate_checks(cfg, checks);
  observable_checks(cfg, checks);

  CommandResult result;
  nlohmann::json doc;
  doc["config"] = config_json(cfg);
  doc["checks"] = nlohmann::json::array();
  bool all = true;
  for (const Check& c : checks) {
    doc["checks"].push_back(check_json(c));
    if (!c.passed) {
      all = false;
      std::string where = c.n_bar ? " at n_bar=" + nbar_label(*c.n_bar) : "";
      result.messages.push_back("FAILED " + c.name + where + ": measured " +
                                format_number(c.measured) + ", required " + c.relation + " " +
                                format_number(c.threshold));
    }
  }
  doc["closed_form_audit"] = audit(cfg);
  doc["all_passed"] = all;
  doc["check_count"] = checks.size();

  const std::string path = cfg.output_path.value_or("verify_report.json");
  write_file(path, dump_json(doc));
  result.files_written.push_back(path);
  result.exit_code = all ? 0 : 1;
  return result;
}

}  // namespace thermoqubit::cli
