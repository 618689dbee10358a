#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "thermoqubit/cli/commands.hpp"
#include "thermoqubit/cli/config.hpp"

namespace {

using thermoqubit::cli::Settings;

struct FlagValues {
  std::optional<std::string> config;
  std::optional<std::string> amps, nbar_range, nbar, cutoff, tail_tol, grid, out, format;

  Settings settings() const {
    Settings s;
    auto put = [&s](const char* key, const std::optional<std::string>& v) {
      if (v) s[key] = *v;
    };
    put("amps", amps);
    put("nbar-range", nbar_range);
    put("nbar", nbar);
    put("cutoff", cutoff);
    put("tail-tol", tail_tol);
    put("grid", grid);
    put("out", out);
    put("format", format);
    return s;
  }
};

void add_shared_flags(CLI::App* cmd, FlagValues& f) {
  cmd->add_option("--config", f.config, "key=value file; flags override it");
  cmd->add_option("--amps", f.amps, "x,y,z,w or 8 numbers as re,im pairs");
  cmd->add_option("--nbar-range", f.nbar_range, "start:end:steps (default 0:2:50)");
  cmd->add_option("--nbar", f.nbar, "comma-separated n_bar values (default 0.1,10)");
  cmd->add_option("--cutoff", f.cutoff, "Fock cutoff N or 'auto' (default auto)");
  cmd->add_option("--tail-tol", f.tail_tol, "truncation tail tolerance (default 1e-10)");
  cmd->add_option("--grid", f.grid, "qmin:qmax:nq,pmin:pmax:np (default -8:8:257,-8:8:257)");
  cmd->add_option("--out", f.out, "output path");
  cmd->add_option("--format", f.format, "csv or json (default csv)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermalized two-qubit bosonic encoding: sweeps, Wigner grids, verification"};
  app.require_subcommand(1);

  FlagValues flags;
  auto* fid = app.add_subcommand("sweep-fidelity", "fidelity against the pure state over n_bar");
  auto* man = app.add_subcommand("sweep-mandel", "Mandel Q over n_bar");
  auto* wig = app.add_subcommand("wigner-grid", "Wigner function on a phase-space grid");
  auto* ver = app.add_subcommand("verify", "run the invariant suite, write a JSON report");
  for (auto* cmd : {fid, man, wig, ver}) add_shared_flags(cmd, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto cfg = thermoqubit::cli::resolve_config(flags.config, flags.settings());
    for (const auto& w : cfg.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());

    thermoqubit::cli::CommandResult result;
    if (fid->parsed()) result = thermoqubit::cli::cmd_sweep_fidelity(cfg);
    else if (man->parsed()) result = thermoqubit::cli::cmd_sweep_mandel(cfg);
    else if (wig->parsed()) result = thermoqubit::cli::cmd_wigner_grid(cfg);
    else result = thermoqubit::cli::cmd_verify(cfg);

    for (const auto& m : result.messages) std::fprintf(stderr, "%s\n", m.c_str());
    for (const auto& f : result.files_written) std::printf("wrote %s\n", f.c_str());
    return result.exit_code;
  } catch (const thermoqubit::cli::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
