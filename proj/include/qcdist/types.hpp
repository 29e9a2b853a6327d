// Common value types shared by every qcdist module.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcdist {

/// Argument outside the mathematical domain of a function.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Misuse of the API that is not a domain violation (dimension mismatch,
/// inconsistent parameters).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Space dimension n >= 2.  n = 2 selects the exact planar formulas, n >= 3
/// the certified enclosures.
class Dimension {
 public:
  explicit Dimension(int n) : n_(n) {
    if (n < 2) throw domain_error("dimension must satisfy n >= 2, got " + std::to_string(n));
  }
  [[nodiscard]] int value() const { return n_; }
  [[nodiscard]] bool planar() const { return n_ == 2; }
  friend bool operator==(Dimension, Dimension) = default;

 private:
  int n_;
};

/// Maximal dilatation K >= 1.
class DilatationK {
 public:
  explicit DilatationK(double k) : k_(k) {
    if (!(k >= 1.0) || !std::isfinite(k))
      throw domain_error("dilatation must satisfy K >= 1, got " + std::to_string(k));
  }
  [[nodiscard]] double value() const { return k_; }
  [[nodiscard]] bool conformal() const { return k_ == 1.0; }

 private:
  double k_;
};

enum class Rigor { exact, bound_only };

inline const char* to_string(Rigor r) { return r == Rigor::exact ? "exact" : "bound-only"; }

/// Certified interval for a quantity.  `exact` enclosures are point values up
/// to rounding; `bound_only` enclosures carry whatever the available
/// inequalities certify (an infinite side means no information).
struct Enclosure {
  double lower = 0.0;
  double upper = 0.0;
  Rigor rigor = Rigor::exact;

  static Enclosure exact(double v) { return {v, v, Rigor::exact}; }

  static Enclosure bound_only(double lo, double hi) {
    if (!(lo <= hi)) throw domain_error("enclosure requires lower <= upper");
    return {lo, hi, Rigor::bound_only};
  }

  [[nodiscard]] bool is_exact() const { return rigor == Rigor::exact; }
  [[nodiscard]] double width() const { return upper - lower; }
  /// Point value for exact enclosures, midpoint otherwise.
  [[nodiscard]] double value() const { return is_exact() ? lower : 0.5 * (lower + upper); }

  [[nodiscard]] bool contains(double v, double rel_tol = 0.0) const {
    const double slack = rel_tol * std::max(1.0, std::abs(v));
    return v >= lower - slack && v <= upper + slack;
  }
};

namespace detail {

/// sqrt(1 - r^2) without cancellation near r = 1.
inline double complement(double r) { return std::sqrt((1.0 - r) * (1.0 + r)); }

}  // namespace detail

}  // namespace qcdist
