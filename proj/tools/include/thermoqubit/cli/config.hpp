#pragma once

// Run configuration shared by the subcommands. Values are resolved in three
// layers: built-in defaults, then a key=value config file, then flags.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thermoqubit/thermal.hpp"
#include "thermoqubit/wigner.hpp"

namespace thermoqubit::cli {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { csv, json };

struct SweepConfig {
  PhysicalAmplitudes amps = PhysicalAmplitudes::reference();
  double n_bar_start = 0.0;
  double n_bar_end = 2.0;
  int n_bar_steps = 50;
  std::vector<double> n_bar_points = {0.1, 10.0};  // --nbar, for wigner-grid
  int cutoff = kAutoCutoff;
  double tail_tol = kDefaultTailTol;
  GridSpec grid{};
  std::optional<std::string> output_path;  // per-command default when empty
  OutputFormat format = OutputFormat::csv;
  unsigned threads = 0;
  std::vector<std::string> warnings;

  /// n_bar_start + i (end − start)/(steps − 1), i = 0 .. steps−1.
  std::vector<double> sweep_points() const;
};

/// Raw textual settings, keyed like the long flags without leading dashes:
/// amps, nbar-range, nbar, cutoff, tail-tol, grid, out, format.
using Settings = std::map<std::string, std::string>;

/// Reads a flat key=value file. Blank lines and lines starting with '#' are
/// ignored; unknown keys are an error.
Settings read_config_file(const std::string& path);

/// Applies settings on top of `base`. Amplitudes are normalized, with a
/// warning recorded if their norm was off by more than 1e-6.
SweepConfig apply_settings(SweepConfig base, const Settings& settings);

/// Layers defaults, the optional config file and flags, then reads
/// THERMOQUBIT_THREADS.
SweepConfig resolve_config(const std::optional<std::string>& config_path, const Settings& flags);

PhysicalAmplitudes parse_amps(const std::string& text, std::vector<std::string>* warnings = nullptr);
void parse_nbar_range(const std::string& text, SweepConfig& cfg);
std::vector<double> parse_nbar_list(const std::string& text);
int parse_cutoff(const std::string& text);
GridSpec parse_grid(const std::string& text, const GridSpec& base = {});
OutputFormat parse_format(const std::string& text);
double parse_double(const std::string& text, const std::string& what);
int parse_int(const std::string& text, const std::string& what);

bool is_known_key(const std::string& key);

}  // namespace thermoqubit::cli
