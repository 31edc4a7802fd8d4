#pragma once

#include <string>
#include <variant>
#include <vector>

namespace vpt {
namespace io {

inline constexpr const char* kSchema = "vptmag-1";

using Value = std::variant<double, long long, bool, std::string>;

struct Record {
  std::vector<std::pair<std::string, Value>> fields;

  void add(const std::string& k, double v) { fields.emplace_back(k, v); }
  void add(const std::string& k, long long v) { fields.emplace_back(k, v); }
  void add(const std::string& k, bool v) { fields.emplace_back(k, v); }
  void add(const std::string& k, const std::string& v) { fields.emplace_back(k, v); }
};

// Doubles are emitted with 17 significant digits so that emit/parse round-trips.
std::string format_value(const Value& v);

// Header row from the first record, then one row per record (RFC-4180 style).
std::string to_csv(const std::vector<Record>& records);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
CsvTable parse_csv(const std::string& text);

// {"schema": ..., "config": {...}, "records": [...]}
std::string to_json(const std::vector<std::pair<std::string, Value>>& config,
                    const std::vector<Record>& records);

void write_file(const std::string& path, const std::string& content);

}  // namespace io
}  // namespace vpt
