#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "thermoqubit/cli/config.hpp"

namespace thermoqubit::cli {

nlohmann::json amps_json(const PhysicalAmplitudes& amps);
nlohmann::json config_json(const SweepConfig& cfg);

/// One pass/fail line of the verification report.
struct Check {
  std::string name;
  std::optional<double> n_bar;
  double measured = 0.0;
  double threshold = 0.0;
  std::string relation;  // "<", "<=", ">=", "=="
  bool passed = false;
  std::string note;
};

/// measured < threshold etc.; a NaN measurement always fails.
Check make_check(std::string name, std::optional<double> n_bar, double measured,
                 std::string relation, double threshold, std::string note = {});

nlohmann::json check_json(const Check& c);

}  // namespace thermoqubit::cli
