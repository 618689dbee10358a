#include "thermoqubit/cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace thermoqubit::cli {

std::string format_number(double value) {
  if (!std::isfinite(value)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9e", value);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw std::logic_error("CSV row width mismatch");
  rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  emit(header_);
  for (const auto& row : rows_) emit(row);
  return out;
}

nlohmann::json json_number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

std::string dump_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw std::runtime_error("failed writing " + path);
}

namespace {

std::size_t extension_pos(const std::string& path) {
  const auto dot = path.find_last_of('.');
  const auto slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash) || dot == 0 ||
      (slash != std::string::npos && dot == slash + 1)) {
    return path.size();
  }
  return dot;
}

}  // namespace

std::string with_suffix(const std::string& path, const std::string& suffix) {
  const auto pos = extension_pos(path);
  return path.substr(0, pos) + suffix + path.substr(pos);
}

std::string sidecar_path(const std::string& path) {
  return path.substr(0, extension_pos(path)) + ".meta.json";
}

}  // namespace thermoqubit::cli
