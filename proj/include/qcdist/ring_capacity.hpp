// Grötzsch and Teichmüller ring capacities and the distortion functions
// phi_{K,n} and eta_{K,n}.
//
// In the plane everything reduces to mu and is computed exactly.  For n >= 3
// no closed form exists, so these routines return bound-only enclosures built
// from the Grötzsch constant interval lambda_n in [4, 2e^{n-1}) and the
// lower bounds
//
//   phi_{1/K,n}(r) >= lambda_n^{1-beta} r^beta,   beta = K^{1/(n-1)},
//   lambda_n^{1-beta} >= 2^{1-beta} K^{-beta}.
//
// Since 1 - beta <= 0, the smallest certified value of lambda_n^{1-beta} comes
// from the upper end 2e^{n-1} of the interval.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "qcdist/grotzsch.hpp"
#include "qcdist/types.hpp"

namespace qcdist {

/// Interval containing the Grötzsch ring constant lambda_n (upper end
/// exclusive).
struct GrotzschConstantInterval {
  int n;
  double lower;
  double upper;

  static GrotzschConstantInterval of(Dimension dim) {
    const int n = dim.value();
    return {n, 4.0, 2.0 * std::exp(static_cast<double>(n - 1))};
  }
};

/// Surface area omega_{n-1} of the unit sphere in R^n.
inline double sphere_area(Dimension dim) {
  const double half = 0.5 * dim.value();
  return 2.0 * std::pow(std::numbers::pi, half) / boost::math::tgamma(half);
}

/// Planar Grötzsch capacity gamma_2(s) = 2 pi / mu(1/s), s > 1.
inline double gamma_2(double s) {
  if (!(s > 1.0)) throw domain_error("gamma_2 requires s > 1, got " + std::to_string(s));
  // r = 1/s, r' = sqrt((s-1)(s+1))/s keeps precision for s near 1.
  const RadiusPair p{1.0 / s, std::sqrt((s - 1.0) * (s + 1.0)) / s};
  return 2.0 * std::numbers::pi / mu(p);
}

/// Grötzsch capacity gamma_n(s).  Exact for n = 2; for n >= 3 the classical
/// estimate omega_{n-1} (log(lambda_n s))^{1-n} <= gamma_n(s) <=
/// omega_{n-1} (log s)^{1-n}, evaluated with lambda_n < 2e^{n-1}.
inline Enclosure gamma_n(Dimension dim, double s) {
  if (!(s > 1.0)) throw domain_error("gamma_n requires s > 1, got " + std::to_string(s));
  if (dim.planar()) return Enclosure::exact(gamma_2(s));
  const double w = sphere_area(dim);
  const double e = 1.0 - dim.value();
  const double lam = GrotzschConstantInterval::of(dim).upper;
  return Enclosure::bound_only(w * std::pow(std::log(lam * s), e), w * std::pow(std::log(s), e));
}

/// Teichmüller capacity tau_n(t) = 2^{1-n} gamma_n(sqrt(1 + t)), t > 0.
inline Enclosure tau_n(Dimension dim, double t) {
  if (!(t > 0.0)) throw domain_error("tau_n requires t > 0, got " + std::to_string(t));
  const double scale = std::ldexp(1.0, 1 - dim.value());
  if (dim.planar()) {
    // gamma_2(sqrt(1+t)) = 2 pi / mu(r) with r = 1/sqrt(1+t), r' = sqrt(t/(1+t)).
    const RadiusPair p{1.0 / std::sqrt(1.0 + t), std::sqrt(t / (1.0 + t))};
    return Enclosure::exact(scale * 2.0 * std::numbers::pi / mu(p));
  }
  const Enclosure g = gamma_n(dim, std::sqrt(1.0 + t));
  return Enclosure::bound_only(scale * g.lower, scale * g.upper);
}

/// Inverse of the planar Teichmüller capacity by bisection in log t on
/// (1e-8, 1e8).  Used to check eta_{K,2} against its defining formula.
inline double tau_2_inverse(double value) {
  const Dimension two(2);
  double lo = std::log(1e-8);
  double hi = std::log(1e8);
  if (!(value <= tau_n(two, std::exp(lo)).lower && value >= tau_n(two, std::exp(hi)).lower))
    throw domain_error("tau_2_inverse: value outside the range covered by t in (1e-8, 1e8)");
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    // tau_2 is decreasing.
    if (tau_n(two, std::exp(mid)).lower > value) lo = mid; else hi = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

namespace detail {

/// Certified lower bound for lambda_n^{1-beta}: the larger of the
/// lambda_n < 2e^{n-1} form and the lambda_n-free 2^{1-beta} K^{-beta} form.
inline double lambda_power_lower(Dimension dim, double K, double beta) {
  const double via_interval = std::pow(GrotzschConstantInterval::of(dim).upper, 1.0 - beta);
  const double lambda_free = std::pow(2.0, 1.0 - beta) * std::pow(K, -beta);
  return std::max(via_interval, lambda_free);
}

}  // namespace detail

/// phi_{K,n}(r) for any K > 0 and r in (0,1).
///
/// n = 2 is exact (phi_{K,2} = phi_K).  For n >= 3:
///  - K < 1 (write K = 1/K'): [c r^beta, r] with c the certified lower bound
///    of lambda_n^{1-beta}, beta = K'^{1/(n-1)};
///  - K > 1: [r, min(1, (r/c)^{1/beta})], from inverting the K' = K bound
///    since phi_{K,n} and phi_{1/K,n} are mutually inverse.
inline Enclosure phi_Kn(double K, Dimension dim, double r) {
  if (!(K > 0.0) || !std::isfinite(K)) throw domain_error("phi_Kn requires K > 0, got " + std::to_string(K));
  if (!(r > 0.0 && r < 1.0)) throw domain_error("phi_Kn requires r in (0,1), got " + std::to_string(r));
  if (K == 1.0) return Enclosure::exact(r);
  if (dim.planar()) return Enclosure::exact(phi_K(K, r));
  const double kk = K > 1.0 ? K : 1.0 / K;
  const double beta = std::pow(kk, 1.0 / (dim.value() - 1));
  const double c = detail::lambda_power_lower(dim, kk, beta);
  if (K < 1.0) return Enclosure::bound_only(std::min(r, c * std::pow(r, beta)), r);
  return Enclosure::bound_only(r, std::min(1.0, std::pow(r / c, 1.0 / beta)));
}

/// Exact planar eta_{K,2}(t) = s^2 / (1 - s^2), s = phi_K(sqrt(t/(1+t))).
inline double eta_K2(double K, double t) {
  if (!(K > 0.0) || !std::isfinite(K)) throw domain_error("eta requires K > 0, got " + std::to_string(K));
  if (!(t > 0.0)) throw domain_error("eta requires t > 0, got " + std::to_string(t));
  if (K == 1.0) return t;
  const RadiusPair arg{std::sqrt(t / (1.0 + t)), 1.0 / std::sqrt(1.0 + t)};
  const RadiusPair s = phi_K_pair(K, arg);
  return (s.r * s.r) / (s.rc * s.rc);
}

/// eta_{K,n}(t) = (1 - a)/a with a = phi_{1/K,n}(1/sqrt(1+t))^2.
inline Enclosure eta_Kn(double K, Dimension dim, double t) {
  if (!(K > 0.0) || !std::isfinite(K)) throw domain_error("eta_Kn requires K > 0, got " + std::to_string(K));
  if (!(t > 0.0)) throw domain_error("eta_Kn requires t > 0, got " + std::to_string(t));
  if (K == 1.0) return Enclosure::exact(t);
  if (dim.planar()) return Enclosure::exact(eta_K2(K, t));
  const Enclosure phi = phi_Kn(1.0 / K, dim, 1.0 / std::sqrt(1.0 + t));
  auto odds = [](double a) { return a > 0.0 ? (1.0 - a) / a : std::numeric_limits<double>::infinity(); };
  const double lo2 = phi.lower * phi.lower;
  const double hi2 = phi.upper * phi.upper;
  // K > 1: phi_{1/K,n} <= r gives eta >= t exactly.
  if (K > 1.0) return Enclosure::bound_only(t, std::max(t, odds(lo2)));
  return Enclosure::bound_only(std::min(t, odds(hi2)), t);
}

}  // namespace qcdist
