// Complete elliptic integrals of the first and second kind.
//
// The production route is the arithmetic-geometric mean; the quadrature
// routines evaluate the defining integrals directly and exist to cross-check
// it.  Moduli are the usual k (not the parameter m = k^2).
#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qcdist/types.hpp"

namespace qcdist {

/// Modulus r in the open interval (0, 1).
class UnitRadius {
 public:
  explicit UnitRadius(double r) : r_(r) {
    if (!(r > 0.0 && r < 1.0)) throw domain_error("radius must lie in (0,1), got " + std::to_string(r));
  }
  [[nodiscard]] double value() const { return r_; }
  /// r' = sqrt(1 - r^2).
  [[nodiscard]] UnitRadius complement() const { return UnitRadius(detail::complement(r_)); }

 private:
  double r_;
};

namespace detail {

inline constexpr int kAgmMaxIterations = 64;
inline constexpr double kAgmTolerance = 4.0 * std::numeric_limits<double>::epsilon();
/// Below this complementary modulus K(r) is replaced by log(4/r').
inline constexpr double kNearOneComplement = 1e-10;

/// AGM that also accumulates sum 2^(k-1) c_k^2 for the second kind.
struct AgmResult {
  double mean;
  double weighted_sum;
};

inline AgmResult agm_with_sum(double a, double b, double c0) {
  double sum = 0.5 * c0 * c0;
  double pow2 = 0.5;
  for (int i = 0; i < kAgmMaxIterations; ++i) {
    if (std::abs(a - b) <= kAgmTolerance * a) break;
    const double c = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    pow2 *= 2.0;
    sum += pow2 * c * c;
  }
  return {0.5 * (a + b), sum};
}

}  // namespace detail

/// Arithmetic-geometric mean of two positive numbers.
inline double agm(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw domain_error("agm requires a > 0 and b > 0");
  for (int i = 0; i < detail::kAgmMaxIterations; ++i) {
    if (std::abs(a - b) <= detail::kAgmTolerance * std::max(a, b)) break;
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 0.5 * (a + b);
}

/// K(r) from the complementary modulus r' = sqrt(1 - r^2).  Taking r'
/// directly keeps full relative accuracy near r = 1.
inline double complete_K_from_complement(double rc) {
  if (!(rc > 0.0) || rc > 1.0) throw domain_error("complementary modulus must lie in (0,1]");
  if (rc < detail::kNearOneComplement) return std::log(4.0 / rc);
  return std::numbers::pi / (2.0 * agm(1.0, rc));
}

/// Legendre's complete elliptic integral of the first kind, 0 <= r < 1.
inline double complete_K(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw domain_error("complete_K requires 0 <= r < 1, got " + std::to_string(r));
  return complete_K_from_complement(detail::complement(r));
}

/// Complete elliptic integral of the second kind, 0 <= r <= 1.
inline double complete_E(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw domain_error("complete_E requires 0 <= r <= 1, got " + std::to_string(r));
  if (r == 1.0) return 1.0;
  const double rc = detail::complement(r);
  if (rc < detail::kNearOneComplement) return 1.0 + 0.5 * rc * rc * (std::log(4.0 / rc) - 0.5);
  const auto res = detail::agm_with_sum(1.0, rc, r);
  const double k = std::numbers::pi / (2.0 * res.mean);
  return k * (1.0 - res.weighted_sum);
}

/// K(r) by adaptive Gauss-Kronrod quadrature of the defining integral after
/// x = sin(theta), which removes the endpoint singularity.
inline double quadrature_K(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw domain_error("quadrature_K requires 0 <= r < 1, got " + std::to_string(r));
  const double r2 = r * r;
  auto integrand = [r2](double theta) {
    const double s = std::sin(theta);
    return 1.0 / std::sqrt(1.0 - r2 * s * s);
  };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, std::numbers::pi / 2, 20,
                                                                         1e-15);
}

/// E(r) by the same quadrature scheme.
inline double quadrature_E(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw domain_error("quadrature_E requires 0 <= r <= 1, got " + std::to_string(r));
  const double r2 = r * r;
  auto integrand = [r2](double theta) {
    const double s = std::sin(theta);
    return std::sqrt(std::max(0.0, 1.0 - r2 * s * s));
  };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, std::numbers::pi / 2, 20,
                                                                         1e-15);
}

}  // namespace qcdist
