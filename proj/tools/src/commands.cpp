#include "thermoqubit/cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "thermoqubit/cli/output.hpp"
#include "thermoqubit/cli/report.hpp"
#include "thermoqubit/observables.hpp"
#include "thermoqubit/parallel.hpp"
#include "thermoqubit/tfd.hpp"
#include "thermoqubit/wigner.hpp"

namespace thermoqubit::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPoissonBand = 1e-9;
constexpr double kWignerGridTol = 1e-6;

std::string output_or(const SweepConfig& cfg, const std::string& stem) {
  if (cfg.output_path) return *cfg.output_path;
  return stem + (cfg.format == OutputFormat::json ? ".json" : ".csv");
}

struct Row {
  double n_bar = 0.0;
  double numeric = kNaN;
  double closed_form = kNaN;
  double discrepancy = kNaN;
};

double difference(double a, double b) {
  return std::isfinite(a) && std::isfinite(b) ? std::abs(a - b) : kNaN;
}

std::string render_rows(const SweepConfig& cfg, const std::vector<Row>& rows,
                        const std::vector<std::string>& header, bool with_regime) {
  if (cfg.format == OutputFormat::csv) {
    CsvTable table(header);
    for (const Row& r : rows) {
      std::vector<std::string> cells = {format_number(r.n_bar), format_number(r.numeric),
                                        format_number(r.closed_form),
                                        format_number(r.discrepancy)};
      if (with_regime) cells.push_back(mandel_regime(r.numeric));
      table.add_row(std::move(cells));
    }
    return table.str();
  }
  nlohmann::json doc;
  doc["config"] = config_json(cfg);
  doc["columns"] = header;
  doc["rows"] = nlohmann::json::array();
  for (const Row& r : rows) {
    nlohmann::json row;
    row[header[0]] = json_number(r.n_bar);
    row[header[1]] = json_number(r.numeric);
    row[header[2]] = json_number(r.closed_form);
    row[header[3]] = json_number(r.discrepancy);
    if (with_regime) row[header[4]] = mandel_regime(r.numeric);
    doc["rows"].push_back(row);
  }
  return dump_json(doc);
}

}  // namespace

std::string mandel_regime(double q) {
  if (!std::isfinite(q)) return "undefined";
  if (std::abs(q) < kPoissonBand) return "poisson";
  return q < 0.0 ? "sub" : "super";
}

std::string nbar_label(double n_bar) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, n_bar);
  return std::string(buf, end);
}

CommandResult cmd_sweep_fidelity(const SweepConfig& cfg) {
  const auto points = cfg.sweep_points();
  std::vector<Row> rows(points.size());
  parallel_for(points.size(), cfg.threads, [&](std::size_t i) {
    const ObservableReport r =
        fidelity_closed_form(cfg.amps, ThermalParams::from_n_bar(points[i]), cfg.cutoff, cfg.tail_tol);
    rows[i] = {points[i], r.value_numeric, r.value_closed_form.value_or(kNaN),
               r.abs_discrepancy.value_or(kNaN)};
  });
  CommandResult result;
  const std::string path = output_or(cfg, "fidelity_sweep");
  write_file(path, render_rows(cfg, rows,
                               {"n_bar", "fidelity_numeric", "fidelity_closed_form", "discrepancy"},
                               false));
  result.files_written.push_back(path);
  return result;
}

CommandResult cmd_sweep_mandel(const SweepConfig& cfg) {
  const auto points = cfg.sweep_points();
  std::vector<Row> rows(points.size());
  parallel_for(points.size(), cfg.threads, [&](std::size_t i) {
    const ThermalParams params = ThermalParams::from_n_bar(points[i]);
    Row row{points[i]};
    try {
      row.numeric = mandel_numeric(cfg.amps, params, cfg.cutoff, cfg.tail_tol);
    } catch (const UndefinedMandelError&) {
    }
    try {
      row.closed_form = mandel_closed_form_value(cfg.amps, params);
    } catch (const UndefinedMandelError&) {
    }
    row.discrepancy = difference(row.numeric, row.closed_form);
    rows[i] = row;
  });
  CommandResult result;
  const std::string path = output_or(cfg, "mandel_sweep");
  write_file(path, render_rows(cfg, rows,
                               {"n_bar", "q_numeric", "q_closed_form", "discrepancy", "regime"},
                               true));
  result.files_written.push_back(path);
  return result;
}

CommandResult cmd_wigner_grid(const SweepConfig& cfg) {
  CommandResult result;
  const bool several = cfg.n_bar_points.size() > 1;
  for (const double n_bar : cfg.n_bar_points) {
    const ThermalParams params = ThermalParams::from_n_bar(n_bar);
    const int cutoff = resolve_state_cutoff(cfg.amps, params, cfg.cutoff, cfg.tail_tol);
    const FockMatrix rho =
        thermal_state_density_expansion(cfg.amps, params, cutoff, cfg.tail_tol);
    const WignerGrid numeric = wigner_normalized(rho, cfg.grid, kWignerGridTol, cfg.threads);
    const GridSpec spec = numeric.spec();

    const bool have_closed_form = cfg.amps.is_real();
    Eigen::MatrixXd closed = Eigen::MatrixXd::Constant(spec.nq, spec.np, kNaN);
    nlohmann::json meta;
    if (have_closed_form) {
      const WignerGrid cf = wigner_closed_form_grid(cfg.amps, params, spec, cutoff, cfg.threads);
      closed = cf.values;
      const Eigen::MatrixXd diff = (closed - numeric.values).cwiseAbs();
      meta["max_abs_discrepancy"] = json_number(diff.maxCoeff());
      meta["integrated_abs_discrepancy"] = json_number(diff.sum() * numeric.cell_area);
      meta["closed_form_integral"] = json_number(wigner_integral(cf));
    } else {
      meta["max_abs_discrepancy"] = nullptr;
      meta["integrated_abs_discrepancy"] = nullptr;
      meta["closed_form_integral"] = nullptr;
      meta["closed_form_note"] = "closed form is defined for real amplitudes only";
    }

    std::string path = output_or(cfg, "wigner");
    if (several || !cfg.output_path) path = with_suffix(path, "_nbar" + nbar_label(n_bar));

    if (cfg.format == OutputFormat::csv) {
      CsvTable table({"q", "p", "w_numeric", "w_closed_form"});
      for (int i = 0; i < spec.nq; ++i) {
        for (int j = 0; j < spec.np; ++j) {
          table.add_row({format_number(spec.q_at(i)), format_number(spec.p_at(j)),
                         format_number(numeric.values(i, j)), format_number(closed(i, j))});
        }
      }
      write_file(path, table.str());
    } else {
      nlohmann::json doc;
      doc["n_bar"] = n_bar;
      nlohmann::json q = nlohmann::json::array();
      nlohmann::json p = nlohmann::json::array();
      for (int i = 0; i < spec.nq; ++i) q.push_back(spec.q_at(i));
      for (int j = 0; j < spec.np; ++j) p.push_back(spec.p_at(j));
      doc["q"] = q;
      doc["p"] = p;
      nlohmann::json wn = nlohmann::json::array();
      nlohmann::json wc = nlohmann::json::array();
      for (int i = 0; i < spec.nq; ++i) {
        nlohmann::json rn = nlohmann::json::array();
        nlohmann::json rc = nlohmann::json::array();
        for (int j = 0; j < spec.np; ++j) {
          rn.push_back(json_number(numeric.values(i, j)));
          rc.push_back(json_number(closed(i, j)));
        }
        wn.push_back(rn);
        wc.push_back(rc);
      }
      doc["w_numeric"] = wn;
      doc["w_closed_form"] = wc;
      write_file(path, dump_json(doc));
    }
    result.files_written.push_back(path);

    meta["n_bar"] = n_bar;
    meta["cutoff"] = cutoff;
    meta["tail_tol"] = cfg.tail_tol;
    meta["amps"] = amps_json(cfg.amps);
    meta["grid"] = {{"q_min", spec.q_min}, {"q_max", spec.q_max}, {"nq", spec.nq},
                    {"p_min", spec.p_min}, {"p_max", spec.p_max}, {"np", spec.np},
                    {"length_scale", spec.length_scale},
                    {"widened", spec.q_min != cfg.grid.q_min || spec.q_max != cfg.grid.q_max}};
    meta["normalization_convention"] = numeric.normalization_convention;
    meta["closed_form_normalization_constant"] = kClosedFormScale;
    meta["trace_rho"] = rho.trace().real();
    meta["integrated_total"] = wigner_integral(numeric);
    meta["negativity_volume"] = wigner_negativity(numeric);
    meta["grid_tol"] = kWignerGridTol;
    const std::string side = sidecar_path(path);
    write_file(side, dump_json(meta));
    result.files_written.push_back(side);
  }
  return result;
}

}  // namespace thermoqubit::cli
