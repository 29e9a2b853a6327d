// Text, line-JSON and CSV renderings of check reports and tables.
#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcdist/check_report.hpp"

namespace qcdist {

/// %.17g: round-trips every binary64 value.
inline std::string format_exact(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// %.12g for human-facing output.
inline std::string format_short(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline const char* status_of(const CheckReport& c) {
  if (!c.pass) return c.validity_note.rfind("not applicable", 0) == 0 ? "N/A " : "INFO";
  return *c.pass ? "PASS" : "FAIL";
}

inline std::string to_text(const CheckReport& c) {
  std::ostringstream os;
  os << status_of(c) << "  " << c.check_id;
  for (const auto& [k, v] : c.params) os << ' ' << k << '=' << format_short(v);
  if (!std::isnan(c.lhs) || !std::isnan(c.rhs))
    os << "  lhs=" << format_short(c.lhs) << " rhs=" << format_short(c.rhs) << " margin=" << format_short(c.margin);
  if (!c.validity_note.empty()) os << "  [" << c.validity_note << ']';
  return os.str();
}

namespace detail {

inline nlohmann::ordered_json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const CheckReport& c) {
  nlohmann::ordered_json j;
  j["check_id"] = c.check_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.params) params[k] = detail::json_number(v);
  j["params"] = params;
  j["lhs"] = detail::json_number(c.lhs);
  j["rhs"] = detail::json_number(c.rhs);
  j["margin"] = detail::json_number(c.margin);
  if (c.pass) j["pass"] = *c.pass; else j["pass"] = nullptr;
  j["validity_note"] = c.validity_note;
  return j;
}

/// Column-oriented table rendered as CSV (header + rows) or line-JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_exact(row[i]);
      os << '\n';
    }
  }

  void write_json_lines(std::ostream& os) const {
    for (const auto& row : rows) {
      nlohmann::ordered_json j;
      for (std::size_t i = 0; i < columns.size(); ++i) j[columns[i]] = detail::json_number(row[i]);
      os << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
    }
  }
};

}  // namespace qcdist
