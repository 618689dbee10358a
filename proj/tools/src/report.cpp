#include "thermoqubit/cli/report.hpp"

#include <cmath>

#include "thermoqubit/cli/output.hpp"

namespace thermoqubit::cli {

nlohmann::json amps_json(const PhysicalAmplitudes& amps) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : amps.as_array()) out.push_back({c.real(), c.imag()});
  return out;
}

nlohmann::json config_json(const SweepConfig& cfg) {
  nlohmann::json j;
  j["amps"] = amps_json(cfg.amps);
  j["n_bar_range"] = {cfg.n_bar_start, cfg.n_bar_end, cfg.n_bar_steps};
  j["cutoff"] = cfg.cutoff == kAutoCutoff ? nlohmann::json("auto") : nlohmann::json(cfg.cutoff);
  j["tail_tol"] = cfg.tail_tol;
  return j;
}

Check make_check(std::string name, std::optional<double> n_bar, double measured,
                 std::string relation, double threshold, std::string note) {
  bool ok = false;
  if (std::isfinite(measured)) {
    if (relation == "<") ok = measured < threshold;
    else if (relation == "<=") ok = measured <= threshold;
    else if (relation == ">=") ok = measured >= threshold;
    else if (relation == "==") ok = measured == threshold;
  }
  return {std::move(name), n_bar, measured, threshold, std::move(relation), ok, std::move(note)};
}

nlohmann::json check_json(const Check& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["n_bar"] = c.n_bar ? json_number(*c.n_bar) : nlohmann::json(nullptr);
  j["measured"] = json_number(c.measured);
  j["threshold"] = c.threshold;
  j["relation"] = c.relation;
  j["passed"] = c.passed;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

}  // namespace thermoqubit::cli
