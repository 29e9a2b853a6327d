// One verified (or merely recorded) inequality.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcdist {

using ParamList = std::vector<std::pair<std::string, double>>;

enum class Relation {
  less_equal,  // lhs <= rhs up to rounding
  less,        // lhs < rhs strictly
  equal,       // |lhs - rhs| within tolerance
};

/// Default rounding tolerance, scaled by max(1, |lhs|, |rhs|).
inline constexpr double kCheckTolerance = 1e-12;

struct CheckReport {
  std::string check_id;
  ParamList params;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double margin = std::numeric_limits<double>::quiet_NaN();  // rhs - lhs
  std::optional<bool> pass;                                    // empty: exploratory or not applicable
  std::string validity_note;

  [[nodiscard]] bool asserted() const { return pass.has_value(); }
  [[nodiscard]] bool failed() const { return pass.has_value() && !*pass; }
};

inline CheckReport assert_check(std::string id, ParamList params, double lhs, double rhs,
                                Relation rel = Relation::less_equal, double tol = kCheckTolerance,
                                std::string note = {}) {
  CheckReport c{std::move(id), std::move(params), lhs, rhs, rhs - lhs, std::nullopt, std::move(note)};
  const double slack = tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
  bool ok = false;
  switch (rel) {
    case Relation::less_equal: ok = c.margin >= -slack; break;
    case Relation::less: ok = c.margin > 0.0; break;
    case Relation::equal: ok = std::abs(c.margin) <= slack; break;
  }
  // NaN compares false everywhere above, so it fails.
  c.pass = ok;
  return c;
}

/// Exploratory record: margins are reported, nothing is asserted.
inline CheckReport record_check(std::string id, ParamList params, double lhs, double rhs, std::string note) {
  return {std::move(id), std::move(params), lhs, rhs, rhs - lhs, std::nullopt, std::move(note)};
}

inline CheckReport not_applicable(std::string id, ParamList params, std::string note) {
  CheckReport c;
  c.check_id = std::move(id);
  c.params = std::move(params);
  c.validity_note = "not applicable: " + note;
  return c;
}

inline std::size_t count_failures(const std::vector<CheckReport>& reports) {
  return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& c) { return c.failed(); }));
}

}  // namespace qcdist
