#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace thermoqubit::cli {

/// %.9e, or "nan" for anything not finite.
std::string format_number(double value);

/// Comma-separated rows with a header, '\n' line endings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  std::string str() const;
  std::size_t row_count() const { return rows_.size(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Non-finite values become null.
nlohmann::json json_number(double value);

/// Pretty-printed with two-space indent and a trailing newline. Object keys
/// come out sorted.
std::string dump_json(const nlohmann::json& doc);

/// Writes the whole file or throws std::runtime_error naming the path.
void write_file(const std::string& path, const std::string& contents);

/// "out.csv" + "_nbar0.1" -> "out_nbar0.1.csv".
std::string with_suffix(const std::string& path, const std::string& suffix);

/// "out.csv" -> "out.meta.json".
std::string sidecar_path(const std::string& path);

}  // namespace thermoqubit::cli
