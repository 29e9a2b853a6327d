// The plane Grötzsch modulus mu(r), its inverse, and the Hersch-Pfluger
// distortion function phi_K(r) = mu^{-1}(mu(r) / K).
#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "qcdist/elliptic.hpp"
#include "qcdist/types.hpp"

namespace qcdist {

/// A radius together with its complement sqrt(1 - r^2), both stored to full
/// relative precision.  Values near 1 lose their information in r alone, so
/// the distortion functions pass pairs internally.
struct RadiusPair {
  double r;
  double rc;

  static RadiusPair from_radius(double r) { return {r, detail::complement(r)}; }
  static RadiusPair from_complement(double rc) { return {detail::complement(rc), rc}; }
  [[nodiscard]] RadiusPair swapped() const { return {rc, r}; }
};

inline constexpr double kQuarterPiSquared = std::numbers::pi * std::numbers::pi / 4.0;  // (pi/2)^2

/// mu(r) = (pi/2) K(r') / K(r), written as an AGM ratio.
inline double mu(RadiusPair p) {
  if (!(p.r > 0.0) || !(p.rc > 0.0)) throw domain_error("mu requires r in (0,1)");
  return std::numbers::pi / 2 * agm(1.0, p.rc) / agm(1.0, p.r);
}

inline double mu(double r) {
  if (!(r > 0.0 && r < 1.0)) throw domain_error("mu requires r in (0,1), got " + std::to_string(r));
  return mu(RadiusPair::from_radius(r));
}

inline double mu(UnitRadius r) { return mu(r.value()); }

namespace detail {

/// Above this modulus value mu^{-1}(y) = 4 e^{-y} to within rounding.
inline constexpr double kMuInvAsymptote = 35.0;

/// Solves mu(r) = y for y >= pi/2, i.e. r in (0, 1/sqrt 2].
///
/// Works in s = log r, where mu is nearly linear (mu(r) ~ log(4/r)).  The
/// bracket log(1/r) < mu(r) < log(4/r) gives r in (e^{-y}, 4e^{-y}).  Newton
/// steps use d mu / d log r = -agm(1, r')^2 / r'^2 and fall back to bisection
/// whenever a step leaves the bracket.
inline double mu_inv_small(double y) {
  if (y > kMuInvAsymptote) return 4.0 * std::exp(-y);
  double lo = -y;
  double hi = std::min(std::log(4.0) - y, std::log(std::numbers::sqrt2 / 2));
  double s = std::log(4.0) - y - 0.25 * std::exp(-2.0 * y);  // leading-order guess
  s = std::clamp(s, lo, hi);
  for (int it = 0; it < 200; ++it) {
    const double r = std::exp(s);
    const double rc = complement(r);
    const double g = mu(RadiusPair{r, rc}) - y;
    if (g == 0.0) break;
    // mu is decreasing: g > 0 means r is too small.
    if (g > 0.0) lo = s; else hi = s;
    const double a = agm(1.0, rc);
    const double slope = -(a * a) / (rc * rc);
    double next = s - g / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - s);
    s = next;
    if (step <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(s)) || hi - lo <= 0.0) break;
  }
  return std::exp(s);
}

}  // namespace detail

/// Inverse of mu returned as a (r, r') pair.  For y < pi/2 the symmetry
/// mu(r) mu(r') = (pi/2)^2 turns the problem into one for the complement.
inline RadiusPair mu_inv_pair(double y) {
  if (!(y > 0.0)) throw domain_error("mu_inv requires y > 0, got " + std::to_string(y));
  if (y >= std::numbers::pi / 2) return RadiusPair::from_radius(detail::mu_inv_small(y));
  return RadiusPair::from_complement(detail::mu_inv_small(kQuarterPiSquared / y));
}

inline double mu_inv(double y) { return mu_inv_pair(y).r; }

/// phi_K on a radius pair.  K may be any positive number; K < 1 gives the
/// inverse distortion phi_{1/K}^{-1}.
inline RadiusPair phi_K_pair(double K, RadiusPair p) {
  if (!(K > 0.0) || !std::isfinite(K)) throw domain_error("phi_K requires K > 0");
  if (K == 1.0 || p.r == 0.0 || p.rc == 0.0) return p;
  return mu_inv_pair(mu(p) / K);
}

/// Hersch-Pfluger distortion function, with phi_K(0) = 0 and phi_K(1) = 1.
inline double phi_K(double K, double r) {
  if (!(K > 0.0) || !std::isfinite(K)) throw domain_error("phi_K requires K > 0, got " + std::to_string(K));
  if (!(r >= 0.0 && r <= 1.0)) throw domain_error("phi_K requires 0 <= r <= 1, got " + std::to_string(r));
  if (r == 0.0 || r == 1.0 || K == 1.0) return r;
  return phi_K_pair(K, RadiusPair::from_radius(r)).r;
}

}  // namespace qcdist
