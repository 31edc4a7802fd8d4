#include "vpt/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vpt {
namespace io {

std::string format_value(const Value& v) {
  if (std::holds_alternative<double>(v)) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v));
    return buf;
  }
  if (std::holds_alternative<long long>(v))
    return std::to_string(std::get<long long>(v));
  if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
  return std::get<std::string>(v);
}

namespace {
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}
}  // namespace

std::string to_csv(const std::vector<Record>& records) {
  std::ostringstream os;
  if (records.empty()) return "";
  for (size_t i = 0; i < records[0].fields.size(); ++i) {
    if (i) os << ',';
    os << csv_escape(records[0].fields[i].first);
  }
  os << "\r\n";
  for (const auto& r : records) {
    for (size_t i = 0; i < r.fields.size(); ++i) {
      if (i) os << ',';
      os << csv_escape(format_value(r.fields[i].second));
    }
    os << "\r\n";
  }
  return os.str();
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false;
  bool first_row = true;
  auto end_cell = [&]() {
    row.push_back(cell);
    cell.clear();
  };
  auto end_row = [&]() {
    if (row.empty() && cell.empty()) return;
    end_cell();
    if (first_row) {
      t.header = row;
      first_row = false;
    } else {
      t.rows.push_back(row);
    }
    row.clear();
  };
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      end_cell();
    } else if (c == '\n') {
      end_row();
    } else if (c != '\r') {
      cell += c;
    }
  }
  if (!cell.empty() || !row.empty()) end_row();
  return t;
}

std::string to_json(const std::vector<std::pair<std::string, Value>>& config,
                    const std::vector<Record>& records) {
  nlohmann::json j;
  j["schema"] = kSchema;
  auto put = [](nlohmann::json& obj, const std::string& k, const Value& v) {
    if (std::holds_alternative<double>(v)) obj[k] = std::get<double>(v);
    else if (std::holds_alternative<long long>(v)) obj[k] = std::get<long long>(v);
    else if (std::holds_alternative<bool>(v)) obj[k] = std::get<bool>(v);
    else obj[k] = std::get<std::string>(v);
  };
  j["config"] = nlohmann::json::object();
  for (const auto& [k, v] : config) put(j["config"], k, v);
  j["records"] = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [k, v] : r.fields) put(obj, k, v);
    j["records"].push_back(std::move(obj));
  }
  return j.dump(2);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
}

}  // namespace io
}  // namespace vpt
