#include "thermoqubit/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace thermoqubit::cli {

namespace {

const std::set<std::string> kKeys = {"amps", "nbar-range", "nbar", "cutoff",
                                     "tail-tol", "grid", "out", "format"};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

std::vector<double> SweepConfig::sweep_points() const {
  std::vector<double> points(static_cast<std::size_t>(n_bar_steps));
  for (int i = 0; i < n_bar_steps; ++i) {
    points[static_cast<std::size_t>(i)] =
        n_bar_start + i * (n_bar_end - n_bar_start) / (n_bar_steps - 1);
  }
  return points;
}

bool is_known_key(const std::string& key) { return kKeys.count(key) > 0; }

double parse_double(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v)) {
    throw ConfigError("invalid " + what + ": '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError("invalid " + what + ": '" + text + "'");
  }
  return v;
}

PhysicalAmplitudes parse_amps(const std::string& text, std::vector<std::string>* warnings) {
  const auto parts = split(text, ',');
  std::vector<double> v;
  for (const auto& p : parts) v.push_back(parse_double(p, "amplitude"));
  PhysicalAmplitudes amps;
  if (v.size() == 4) {
    amps = {v[0], v[1], v[2], v[3]};
  } else if (v.size() == 8) {
    amps = {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
  } else {
    throw ConfigError("--amps expects 4 reals or 8 numbers (re,im pairs), got " +
                      std::to_string(v.size()));
  }
  const double norm = std::sqrt(amps.norm_squared());
  if (norm == 0.0) throw ConfigError("--amps: all amplitudes are zero");
  if (std::abs(norm - 1.0) > 1e-6 && warnings != nullptr) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "amplitudes had norm %.9e; normalized", norm);
    warnings->emplace_back(buf);
  }
  return amps.normalized();
}

void parse_nbar_range(const std::string& text, SweepConfig& cfg) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError("--nbar-range expects start:end:steps");
  const double start = parse_double(parts[0], "n_bar start");
  const double end = parse_double(parts[1], "n_bar end");
  const int steps = parse_int(parts[2], "n_bar steps");
  if (start < 0.0) throw ConfigError("--nbar-range: start must be >= 0");
  if (end < start) throw ConfigError("--nbar-range: end must be >= start");
  if (steps < 2) throw ConfigError("--nbar-range: steps must be >= 2");
  cfg.n_bar_start = start;
  cfg.n_bar_end = end;
  cfg.n_bar_steps = steps;
}

std::vector<double> parse_nbar_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& p : split(text, ',')) {
    const double v = parse_double(p, "n_bar");
    if (v < 0.0) throw ConfigError("--nbar: values must be >= 0");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("--nbar: no values");
  return out;
}

int parse_cutoff(const std::string& text) {
  if (trim(text) == "auto") return kAutoCutoff;
  const int n = parse_int(text, "cutoff");
  if (n < 4) throw ConfigError("--cutoff must be 'auto' or an integer >= 4");
  if (n > kMaxCutoff) throw ConfigError("--cutoff exceeds the cap " + std::to_string(kMaxCutoff));
  return n;
}

GridSpec parse_grid(const std::string& text, const GridSpec& base) {
  const auto axes = split(text, ',');
  if (axes.size() != 2) throw ConfigError("--grid expects qmin:qmax:nq,pmin:pmax:np");
  const auto q = split(axes[0], ':');
  const auto p = split(axes[1], ':');
  if (q.size() != 3 || p.size() != 3) {
    throw ConfigError("--grid expects qmin:qmax:nq,pmin:pmax:np");
  }
  GridSpec g = base;
  g.q_min = parse_double(q[0], "grid q_min");
  g.q_max = parse_double(q[1], "grid q_max");
  g.nq = parse_int(q[2], "grid nq");
  g.p_min = parse_double(p[0], "grid p_min");
  g.p_max = parse_double(p[1], "grid p_max");
  g.np = parse_int(p[2], "grid np");
  try {
    g.validate();
  } catch (const GridError& e) {
    throw ConfigError(std::string("--grid: ") + e.what());
  }
  return g;
}

OutputFormat parse_format(const std::string& text) {
  const std::string t = trim(text);
  if (t == "csv") return OutputFormat::csv;
  if (t == "json") return OutputFormat::json;
  throw ConfigError("--format must be csv or json");
}

Settings read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  Settings out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(t.substr(0, eq));
    if (!is_known_key(key)) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    out[key] = trim(t.substr(eq + 1));
  }
  return out;
}

SweepConfig apply_settings(SweepConfig cfg, const Settings& settings) {
  for (const auto& [key, value] : settings) {
    if (key == "amps") {
      cfg.amps = parse_amps(value, &cfg.warnings);
    } else if (key == "nbar-range") {
      parse_nbar_range(value, cfg);
    } else if (key == "nbar") {
      cfg.n_bar_points = parse_nbar_list(value);
    } else if (key == "cutoff") {
      cfg.cutoff = parse_cutoff(value);
    } else if (key == "tail-tol") {
      const double tol = parse_double(value, "tail-tol");
      if (!(tol > 0.0 && tol < 1.0)) throw ConfigError("--tail-tol must lie in (0, 1)");
      cfg.tail_tol = tol;
    } else if (key == "grid") {
      cfg.grid = parse_grid(value, cfg.grid);
    } else if (key == "out") {
      if (value.empty()) throw ConfigError("--out must not be empty");
      cfg.output_path = value;
    } else if (key == "format") {
      cfg.format = parse_format(value);
    } else {
      throw ConfigError("unknown setting '" + key + "'");
    }
  }
  return cfg;
}

SweepConfig resolve_config(const std::optional<std::string>& config_path, const Settings& flags) {
  SweepConfig cfg;
  if (config_path) cfg = apply_settings(cfg, read_config_file(*config_path));
  cfg = apply_settings(cfg, flags);
  if (const char* env = std::getenv("THERMOQUBIT_THREADS"); env != nullptr && *env != '\0') {
    const int n = parse_int(env, "THERMOQUBIT_THREADS");
    if (n < 0) throw ConfigError("THERMOQUBIT_THREADS must be >= 0");
    cfg.threads = static_cast<unsigned>(n);
  }
  return cfg;
}

}  // namespace thermoqubit::cli
