#pragma once

#include <string>
#include <vector>

#include "thermoqubit/cli/config.hpp"

namespace thermoqubit::cli {

struct CommandResult {
  int exit_code = 0;
  std::vector<std::string> files_written;
  std::vector<std::string> messages;  // failing checks, warnings
};

/// Columns n_bar, fidelity_numeric, fidelity_closed_form, discrepancy.
CommandResult cmd_sweep_fidelity(const SweepConfig& cfg);

/// Columns n_bar, q_numeric, q_closed_form, discrepancy, regime.
CommandResult cmd_sweep_mandel(const SweepConfig& cfg);

/// One grid file plus a .meta.json sidecar per n̄ in cfg.n_bar_points.
CommandResult cmd_wigner_grid(const SweepConfig& cfg);

/// Runs the invariant suite and writes a JSON report; exit_code 0 iff every
/// check passed.
CommandResult cmd_verify(const SweepConfig& cfg);

/// "sub", "poisson" (|q| < 1e-9), "super" or "undefined" for NaN.
std::string mandel_regime(double q);

/// "0.1" -> "0.1", "10" -> "10": shortest round-trip text, for file names.
std::string nbar_label(double n_bar);

}  // namespace thermoqubit::cli
