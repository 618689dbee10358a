#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "thermoqubit/cli/commands.hpp"
#include "thermoqubit/cli/config.hpp"
#include "thermoqubit/cli/output.hpp"
#include "thermoqubit/observables.hpp"

namespace thermoqubit::cli {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() /
            (std::string("thermoqubit_") + info->test_suite_name() + "_" + info->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(path));
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(Format, ScientificNineDigits) {
  EXPECT_EQ(format_number(1.0), "1.000000000e+00");
  EXPECT_EQ(format_number(-0.45), "-4.500000000e-01");
  EXPECT_EQ(format_number(NAN), "nan");
  EXPECT_EQ(format_number(INFINITY), "nan");
}

TEST(Paths, SuffixAndSidecar) {
  EXPECT_EQ(with_suffix("out.csv", "_nbar0.1"), "out_nbar0.1.csv");
  EXPECT_EQ(with_suffix("dir.v2/out", "_x"), "dir.v2/out_x");
  EXPECT_EQ(sidecar_path("a/b.csv"), "a/b.meta.json");
  EXPECT_EQ(nbar_label(0.1), "0.1");
  EXPECT_EQ(nbar_label(10.0), "10");
}

TEST(Regime, Classification) {
  EXPECT_EQ(mandel_regime(-0.1), "sub");
  EXPECT_EQ(mandel_regime(5e-10), "poisson");
  EXPECT_EQ(mandel_regime(-5e-10), "poisson");
  EXPECT_EQ(mandel_regime(0.2), "super");
  EXPECT_EQ(mandel_regime(NAN), "undefined");
}

TEST(Config, Defaults) {
  const SweepConfig cfg;
  EXPECT_EQ(cfg.n_bar_steps, 50);
  EXPECT_EQ(cfg.n_bar_end, 2.0);
  EXPECT_EQ(cfg.cutoff, kAutoCutoff);
  EXPECT_EQ(cfg.n_bar_points, (std::vector<double>{0.1, 10.0}));
  const auto pts = cfg.sweep_points();
  EXPECT_EQ(pts.size(), 50u);
  EXPECT_EQ(pts.front(), 0.0);
  EXPECT_EQ(pts.back(), 2.0);
}

TEST(Config, ParsesEveryFlag) {
  const SweepConfig cfg = apply_settings({}, {{"amps", "1,0,0,0"},
                                              {"nbar-range", "0.5:1.5:11"},
                                              {"nbar", "0.2, 3"},
                                              {"cutoff", "60"},
                                              {"tail-tol", "1e-8"},
                                              {"grid", "-4:4:17,-2:2:9"},
                                              {"out", "x.json"},
                                              {"format", "json"}});
  EXPECT_EQ(cfg.amps.x, Complex(1.0));
  EXPECT_EQ(cfg.n_bar_start, 0.5);
  EXPECT_EQ(cfg.n_bar_steps, 11);
  EXPECT_EQ(cfg.n_bar_points, (std::vector<double>{0.2, 3.0}));
  EXPECT_EQ(cfg.cutoff, 60);
  EXPECT_EQ(cfg.tail_tol, 1e-8);
  EXPECT_EQ(cfg.grid.nq, 17);
  EXPECT_EQ(cfg.grid.p_max, 2.0);
  EXPECT_EQ(*cfg.output_path, "x.json");
  EXPECT_EQ(cfg.format, OutputFormat::json);
  EXPECT_TRUE(cfg.warnings.empty());
}

TEST(Config, ComplexAmplitudesAndNormalization) {
  std::vector<std::string> warnings;
  const auto amps = parse_amps("0,1, 0,0, 0,0, 0,0", &warnings);
  EXPECT_EQ(amps.x, Complex(0.0, 1.0));
  EXPECT_TRUE(warnings.empty());
  const auto scaled = parse_amps("2,0,0,0", &warnings);
  EXPECT_EQ(scaled.x, Complex(1.0));
  ASSERT_EQ(warnings.size(), 1u);
  // Rounded inputs within 1e-6 are normalized silently.
  warnings.clear();
  parse_amps("0.2,0.3,0.6,0.7141428", &warnings);
  EXPECT_TRUE(warnings.empty());
}

TEST(Config, RejectsBadValues) {
  EXPECT_THROW(parse_amps("1,2,3"), ConfigError);
  EXPECT_THROW(parse_amps("0,0,0,0"), ConfigError);
  EXPECT_THROW(parse_amps("a,0,0,1"), ConfigError);
  SweepConfig cfg;
  EXPECT_THROW(parse_nbar_range("-1:2:5", cfg), ConfigError);
  EXPECT_THROW(parse_nbar_range("0:2:1", cfg), ConfigError);
  EXPECT_THROW(parse_nbar_range("0:2", cfg), ConfigError);
  EXPECT_THROW(parse_cutoff("3"), ConfigError);
  EXPECT_THROW(parse_cutoff("513"), ConfigError);
  EXPECT_EQ(parse_cutoff("auto"), kAutoCutoff);
  EXPECT_THROW(parse_grid("-1:1:1,-1:1:5"), ConfigError);
  EXPECT_THROW(parse_grid("1:-1:5,-1:1:5"), ConfigError);
  EXPECT_THROW(parse_format("xml"), ConfigError);
  EXPECT_THROW(apply_settings({}, {{"tail-tol", "0"}}), ConfigError);
  EXPECT_THROW(parse_nbar_list("0.1,-2"), ConfigError);
}

TEST(Config, FileThenFlagsPrecedence) {
  TempDir dir;
  const std::string path = dir.file("run.cfg");
  {
    std::ofstream out(path);
    out << "# comment\n\ncutoff = 50\nnbar-range=0:1:5\nformat=json\n";
  }
  const SweepConfig from_file = resolve_config(path, {});
  EXPECT_EQ(from_file.cutoff, 50);
  EXPECT_EQ(from_file.n_bar_steps, 5);
  EXPECT_EQ(from_file.format, OutputFormat::json);

  const SweepConfig flagged = resolve_config(path, {{"cutoff", "auto"}, {"format", "csv"}});
  EXPECT_EQ(flagged.cutoff, kAutoCutoff);
  EXPECT_EQ(flagged.n_bar_steps, 5);
  EXPECT_EQ(flagged.format, OutputFormat::csv);

  {
    std::ofstream out(path);
    out << "colour=blue\n";
  }
  EXPECT_THROW(resolve_config(path, {}), ConfigError);
  EXPECT_THROW(resolve_config(dir.file("missing.cfg"), {}), ConfigError);
}

TEST(Config, ThreadsFromEnvironment) {
  ::setenv("THERMOQUBIT_THREADS", "3", 1);
  EXPECT_EQ(resolve_config(std::nullopt, {}).threads, 3u);
  ::setenv("THERMOQUBIT_THREADS", "many", 1);
  EXPECT_THROW(resolve_config(std::nullopt, {}), ConfigError);
  ::unsetenv("THERMOQUBIT_THREADS");
  EXPECT_EQ(resolve_config(std::nullopt, {}).threads, 0u);
}

TEST(SweepFidelity, DefaultSweepShapeAndValues) {
  TempDir dir;
  SweepConfig cfg;
  cfg.output_path = dir.file("f.csv");
  cmd_sweep_fidelity(cfg);
  const auto rows = read_csv(*cfg.output_path);
  ASSERT_EQ(rows.size(), 51u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"n_bar", "fidelity_numeric",
                                               "fidelity_closed_form", "discrepancy"}));
  EXPECT_EQ(rows[1][0], "0.000000000e+00");
  EXPECT_EQ(rows[1][1], "1.000000000e+00");
  double last = 2.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double f = std::stod(rows[i][1]);
    EXPECT_LE(f, last + 1e-10);
    last = f;
  }
}

TEST(SweepFidelity, ColumnsParseBackToRecomputedValues) {
  TempDir dir;
  SweepConfig cfg;
  cfg.n_bar_steps = 7;
  cfg.output_path = dir.file("f.csv");
  cmd_sweep_fidelity(cfg);
  const auto rows = read_csv(*cfg.output_path);
  const auto points = cfg.sweep_points();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto r = fidelity_closed_form(cfg.amps, ThermalParams::from_n_bar(points[i]));
    EXPECT_NEAR(std::stod(rows[i + 1][0]), points[i], 1e-9);
    EXPECT_NEAR(std::stod(rows[i + 1][1]), r.value_numeric, 1e-9);
    EXPECT_NEAR(std::stod(rows[i + 1][2]), *r.value_closed_form, 1e-9);
    EXPECT_NEAR(std::stod(rows[i + 1][3]), *r.abs_discrepancy, 1e-9);
  }
}

TEST(SweepMandel, RegimesAndPureStateValue) {
  TempDir dir;
  SweepConfig cfg;
  cfg.n_bar_start = 0.0;
  cfg.n_bar_end = 1.0;
  cfg.n_bar_steps = 41;
  cfg.output_path = dir.file("m.csv");
  cmd_sweep_mandel(cfg);
  const auto rows = read_csv(*cfg.output_path);
  ASSERT_EQ(rows.size(), 42u);
  EXPECT_EQ(rows[0].back(), "regime");
  EXPECT_EQ(rows[1][1], "-4.500000000e-01");
  int transitions = 0;
  for (std::size_t i = 2; i < rows.size(); ++i) {
    if (rows[i][4] != rows[i - 1][4]) ++transitions;
  }
  EXPECT_EQ(transitions, 1);
  EXPECT_EQ(rows[1][4], "sub");
  EXPECT_EQ(rows.back()[4], "super");
}

TEST(SweepMandel, UndefinedRowsForVacuum) {
  TempDir dir;
  SweepConfig cfg;
  cfg.amps = {1.0, 0.0, 0.0, 0.0};
  cfg.n_bar_end = 1.0;
  cfg.n_bar_steps = 3;
  cfg.output_path = dir.file("m.csv");
  cmd_sweep_mandel(cfg);
  const auto rows = read_csv(*cfg.output_path);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"0.000000000e+00", "nan", "nan", "nan",
                                               "undefined"}));
  EXPECT_EQ(rows[3][4], "super");
}

TEST(SweepMandel, JsonFormat) {
  TempDir dir;
  SweepConfig cfg;
  cfg.amps = {1.0, 0.0, 0.0, 0.0};
  cfg.n_bar_steps = 2;
  cfg.format = OutputFormat::json;
  cfg.output_path = dir.file("m.json");
  cmd_sweep_mandel(cfg);
  const auto doc = nlohmann::json::parse(slurp(*cfg.output_path));
  ASSERT_EQ(doc["rows"].size(), 2u);
  EXPECT_TRUE(doc["rows"][0]["q_numeric"].is_null());
  EXPECT_EQ(doc["rows"][0]["regime"], "undefined");
  EXPECT_NEAR(doc["rows"][1]["q_numeric"].get<double>(), 2.0, 1e-9);
}

TEST(WignerGridCommand, FilesAndSidecar) {
  TempDir dir;
  SweepConfig cfg;
  cfg.n_bar_points = {0.1, 1.0};
  cfg.grid = GridSpec{-7.0, 7.0, 57, -7.0, 7.0, 57, 1.0};
  cfg.output_path = dir.file("w.csv");
  const auto result = cmd_wigner_grid(cfg);
  ASSERT_EQ(result.files_written.size(), 4u);
  EXPECT_EQ(result.files_written[0], dir.file("w_nbar0.1.csv"));
  EXPECT_EQ(result.files_written[1], dir.file("w_nbar0.1.meta.json"));
  const auto rows = read_csv(result.files_written[0]);
  ASSERT_EQ(rows.size(), 57u * 57u + 1u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"q", "p", "w_numeric", "w_closed_form"}));
  // row-major: p varies fastest
  EXPECT_EQ(rows[1][0], rows[2][0]);
  EXPECT_NE(rows[1][1], rows[2][1]);
  const auto meta = nlohmann::json::parse(slurp(result.files_written[1]));
  EXPECT_NEAR(meta["integrated_total"].get<double>(), 1.0, 1e-6);
  EXPECT_GT(meta["negativity_volume"].get<double>(), 0.0);
  EXPECT_NEAR(meta["closed_form_normalization_constant"].get<double>(), kClosedFormScale, 0.0);
  EXPECT_TRUE(meta.contains("max_abs_discrepancy"));
}

TEST(WignerGridCommand, ComplexAmplitudesSkipClosedForm) {
  TempDir dir;
  SweepConfig cfg;
  cfg.amps = PhysicalAmplitudes{Complex(0.0, 1.0), 1.0, 0.0, 0.0}.normalized();
  cfg.n_bar_points = {0.1};
  cfg.grid = GridSpec{-6.0, 6.0, 21, -6.0, 6.0, 21, 1.0};
  cfg.output_path = dir.file("w.csv");
  const auto result = cmd_wigner_grid(cfg);
  EXPECT_EQ(result.files_written[0], dir.file("w.csv"));
  const auto rows = read_csv(result.files_written[0]);
  EXPECT_EQ(rows[1][3], "nan");
  const auto meta = nlohmann::json::parse(slurp(result.files_written[1]));
  EXPECT_TRUE(meta["max_abs_discrepancy"].is_null());
}

TEST(Determinism, RepeatedRunsAreByteIdentical) {
  TempDir dir;
  SweepConfig cfg;
  cfg.n_bar_steps = 9;
  cfg.n_bar_points = {0.3};
  cfg.grid = GridSpec{-5.0, 5.0, 31, -5.0, 5.0, 31, 1.0};
  for (const auto fmt : {OutputFormat::csv, OutputFormat::json}) {
    cfg.format = fmt;
    std::vector<std::string> first;
    for (int run = 0; run < 2; ++run) {
      SweepConfig c = cfg;
      c.threads = run == 0 ? 1 : 3;
      std::vector<std::string> files;
      c.output_path = dir.file("f" + std::to_string(run));
      files.push_back(slurp(cmd_sweep_fidelity(c).files_written[0]));
      c.output_path = dir.file("m" + std::to_string(run));
      files.push_back(slurp(cmd_sweep_mandel(c).files_written[0]));
      c.output_path = dir.file("w" + std::to_string(run));
      for (const auto& f : cmd_wigner_grid(c).files_written) files.push_back(slurp(f));
      if (run == 0) {
        first = files;
      } else {
        EXPECT_EQ(files, first);
      }
    }
  }
}

TEST(Output, UnwritablePathThrows) {
  SweepConfig cfg;
  cfg.n_bar_steps = 2;
  cfg.output_path = "/nonexistent-dir/out.csv";
  EXPECT_THROW(cmd_sweep_fidelity(cfg), std::runtime_error);
}

}  // namespace
}  // namespace thermoqubit::cli
