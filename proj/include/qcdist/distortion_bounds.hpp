// Quantitative bounds for K-quasiconformal self-maps of B^n with identity
// boundary values: how far such a map can move a point, hyperbolically and
// in the euclidean metric, plus the related |f(x)| estimates for maps that
// keep infinity fixed.
//
// Every bound carries the K-window on which it is proven.  K = 1 returns the
// degenerate value directly without touching the mu machinery.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qcdist/check_report.hpp"
#include "qcdist/elliptic.hpp"
#include "qcdist/grotzsch.hpp"
#include "qcdist/mn_lemma.hpp"
#include "qcdist/ring_capacity.hpp"
#include "qcdist/types.hpp"

namespace qcdist {

/// b = (4/pi) K(1/sqrt 2)^2 = 4.3768792...; lambda(K) < e^{b(K-1)}.
inline double planar_b() {
  const double k = complete_K(std::numbers::sqrt2 / 2);
  return 4.0 / std::numbers::pi * k * k;
}

/// Largest K for which the linear bound |f(x) - x| <= (9/2)(K - 1) is proven.
inline constexpr double kLinearBoundMaxK = 17.0;

// ---------------------------------------------------------------------------
// Krzyż constant

/// c_1(K) = mu^{-1}(log((sqrt K + 1)/(sqrt K - 1))), the sharp bound for
/// |f(0)| in the plane.
inline double krzyz_c1(DilatationK K) {
  if (K.conformal()) return 0.0;
  const double sk = std::sqrt(K.value());
  // log((sk+1)/(sk-1)) = 2 artanh(1/sk)
  return mu_inv(2.0 * std::atanh(1.0 / sk));
}

struct KrzyzSandwich {
  double lower;  // (K-1)/(K+1)
  double value;  // c_1
  double upper;  // 2(K-1)/(sqrt K + 1)
};

inline KrzyzSandwich krzyz_sandwich(DilatationK K) {
  const double k = K.value();
  return {(k - 1.0) / (k + 1.0), krzyz_c1(K), 2.0 * (k - 1.0) / (std::sqrt(k) + 1.0)};
}

// ---------------------------------------------------------------------------
// Hyperbolic displacement

/// Enclosure of log((1-a)/a), a = phi_{1/K,n}(1/sqrt 2)^2 = 1/(1 + eta_{K,n}(1)),
/// which bounds rho(f(x), x) for every f in Id_K(boundary of B^n).  Exact for
/// n = 2; for n >= 3 only the upper end is certified.
inline Enclosure main_theorem_bound(DilatationK K, Dimension dim) {
  if (K.conformal()) return Enclosure::exact(0.0);
  const Enclosure eta = eta_Kn(K.value(), dim, 1.0);
  if (eta.is_exact()) return Enclosure::exact(std::log(eta.lower));
  return Enclosure::bound_only(std::log(eta.lower), std::log(eta.upper));
}

// ---------------------------------------------------------------------------
// Lemma chain from log((1-a)/a) to linear bounds in K - 1

/// log(2^{3K-2} K^{2K} - 1), the explicit upper bound for log(1/a - 1).
inline double explicit_log_odds_bound(double K) { return p_func(MNParams(3.0, 2.0), K); }

/// Chain inequalities bounding log((1-a)/a).  `M` (>= beta = K^{1/(n-1)})
/// selects the constant V(n) = 2 log(2 lambda^2) (2 lambda^2)^{M-1}; it
/// defaults to beta.  Checks outside their proven K-range are reported as not
/// applicable.
inline std::vector<CheckReport> stabrmk_bounds(DilatationK K, Dimension dim, std::optional<double> M = std::nullopt) {
  const double k = K.value();
  const int n = dim.value();
  const double lhs = main_theorem_bound(K, dim).upper;
  const double beta = std::pow(k, 1.0 / (n - 1));
  const double lam = GrotzschConstantInterval::of(dim).upper;
  const ParamList base{{"K", k}, {"n", n}};
  std::vector<CheckReport> out;

  const double mm = M.value_or(beta);
  if (mm < beta) {
    out.push_back(not_applicable("chain.lambda", base, "requires beta in [1, M]"));
  } else {
    // log(lambda^{2(beta-1)} 2^beta - 1) = log(2 (2 lambda^2)^{beta-1} - 1)
    const double two_lam2 = 2.0 * lam * lam;
    const double middle = std::log(2.0 * std::exp((beta - 1.0) * std::log(two_lam2)) - 1.0);
    const double v = 2.0 * std::log(two_lam2) * std::pow(two_lam2, mm - 1.0);
    ParamList p = base;
    p.emplace_back("M", mm);
    p.emplace_back("lambda", lam);
    out.push_back(assert_check("chain.lambda_power", p, lhs, middle));
    out.push_back(assert_check("chain.lambda_linear", p, middle, v * (beta - 1.0)));
  }

  if (k <= kLinearBoundMaxK) {
    const double explicit_bound = explicit_log_odds_bound(k);
    const double linear = (4.0 + 6.0 * std::numbers::ln2) * (k - 1.0);
    out.push_back(assert_check("chain.log_odds_le_explicit", base, lhs, explicit_bound));
    out.push_back(assert_check("chain.explicit_le_linear", base, explicit_bound, linear));
    if (k > 1.0)
      out.push_back(assert_check("chain.linear_lt_nine", base, linear, 9.0 * (k - 1.0), Relation::less));
    else
      out.push_back(assert_check("chain.linear_lt_nine", base, linear, 9.0 * (k - 1.0), Relation::equal, kCheckTolerance,
                                 "equality at K = 1"));
  } else {
    out.push_back(not_applicable("chain.linear", base, "proven for K in [1,17] only"));
  }

  if (dim.planar() && k > 1.0) {
    out.push_back(assert_check("chain.planar_upper_b", base, lhs, planar_b() * (k - 1.0), Relation::less));
    out.push_back(assert_check("chain.planar_lower_pi", base, std::numbers::pi * (k - 1.0), lhs, Relation::less));
  } else {
    out.push_back(not_applicable("chain.planar", base, "planar case with K > 1 only"));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Euclidean displacement

enum class DisplacementKind { hyperbolic, euclidean };

struct DisplacementBound {
  DisplacementKind kind = DisplacementKind::euclidean;
  double value = 0.0;
  Rigor rigor = Rigor::exact;
  double k_min = 1.0;
  double k_max = std::numeric_limits<double>::infinity();
  std::string label;
};

struct MycorBound {
  /// (9/2)(K - 1); present for K <= 17.
  std::optional<DisplacementBound> general;
  /// (b/2)(K - 1); present for n = 2.
  std::optional<DisplacementBound> planar;
  /// 2 tanh(main_theorem_bound / 4): valid for every K, never above the
  /// linear bounds.
  DisplacementBound chain;

  /// Sharper of the applicable linear bounds; empty when neither applies.
  [[nodiscard]] std::optional<DisplacementBound> best() const {
    if (general && planar) return general->value <= planar->value ? general : planar;
    return general ? general : planar;
  }
};

inline MycorBound mycor_bound(DilatationK K, Dimension dim) {
  const double k = K.value();
  MycorBound out;
  const Enclosure main = main_theorem_bound(K, dim);
  out.chain = {DisplacementKind::euclidean, 2.0 * std::tanh(main.upper / 4.0), main.rigor, 1.0,
               std::numeric_limits<double>::infinity(), "2 tanh(log((1-a)/a)/4)"};
  if (k <= kLinearBoundMaxK)
    out.general = DisplacementBound{DisplacementKind::euclidean, 4.5 * (k - 1.0), Rigor::exact, 1.0, kLinearBoundMaxK,
                                    "(9/2)(K-1)"};
  if (dim.planar())
    out.planar = DisplacementBound{DisplacementKind::euclidean, K.conformal() ? 0.0 : planar_b() / 2.0 * (k - 1.0),
                                   Rigor::exact, 1.0, std::numeric_limits<double>::infinity(), "(b/2)(K-1)"};
  return out;
}

// ---------------------------------------------------------------------------
// |f(x)| for K-qc maps of the whole space fixing infinity with
// B^n(m) in f(B^n) in B^n(M)

struct ImageNormBounds {
  Enclosure lower;  // certified side: lower.lower
  Enclosure upper;  // certified side: upper.upper

  [[nodiscard]] double certified_lower() const { return lower.lower; }
  [[nodiscard]] double certified_upper() const { return upper.upper; }
};

inline ImageNormBounds sandwich_eta(DilatationK K, Dimension dim, double x_norm, double m = 1.0, double M = 1.0) {
  if (!(x_norm >= 0.0 && x_norm < 1.0)) throw domain_error("sandwich_eta requires 0 <= |x| < 1");
  if (m > M) throw usage_error("sandwich_eta requires m <= M");
  if (!(m > 0.0 && m <= 1.0 && M >= 1.0)) throw domain_error("sandwich_eta requires 0 < m <= 1 <= M");
  const double t = (1.0 + x_norm) / (1.0 - x_norm);
  // (m + F)/(M - F) <= E  gives  F <= (E M - m)/(1 + E)
  auto upper_of = [&](double e) { return std::isinf(e) ? M : (e * M - m) / (1.0 + e); };
  // e <= (M + F)/(m - F)  gives  F >= (e m - M)/(1 + e)
  auto lower_of = [&](double e) { return std::max(0.0, (e * m - M) / (1.0 + e)); };

  const Enclosure big = eta_Kn(K.value(), dim, t);
  const Enclosure small = eta_Kn(1.0 / K.value(), dim, t);
  if (big.is_exact() && small.is_exact())
    return {Enclosure::exact(lower_of(small.lower)), Enclosure::exact(upper_of(big.lower))};
  return {Enclosure::bound_only(lower_of(small.lower), lower_of(small.upper)),
          Enclosure::bound_only(upper_of(big.lower), upper_of(big.upper))};
}

/// Planar bound |f(x)| <= 2 phi_{K,2}(sqrt((1+|x|)/2))^2 - 1.
inline double corollary_bound(DilatationK K, double x_norm) {
  if (!(x_norm >= 0.0 && x_norm < 1.0)) throw domain_error("corollary_bound requires 0 <= |x| < 1");
  if (K.conformal()) return x_norm;
  const RadiusPair w = phi_K_pair(K.value(), {std::sqrt((1.0 + x_norm) / 2.0), std::sqrt((1.0 - x_norm) / 2.0)});
  return (w.r - w.rc) * (w.r + w.rc);
}

/// a = phi_{1/K,2}(1/sqrt 2)^2 in the plane.
inline double planar_a(DilatationK K) {
  if (K.conformal()) return 0.5;
  const double h = std::numbers::sqrt2 / 2;
  const RadiusPair s = phi_K_pair(1.0 / K.value(), {h, h});
  return s.r * s.r;
}

/// 1 - 2a <= 1 - 2^{3(1-K)} K^{-2K} <= (2 + 3 log 2)(K - 1) in the plane.
inline std::vector<CheckReport> remark_n2_chain(DilatationK K) {
  const double k = K.value();
  const ParamList p{{"K", k}};
  const double first = 1.0 - 2.0 * planar_a(K);
  const double middle = -std::expm1(3.0 * (1.0 - k) * std::numbers::ln2 - 2.0 * k * std::log(k));
  const double last = (2.0 + 3.0 * std::numbers::ln2) * (k - 1.0);
  return {assert_check("remark.f0_le_explicit", p, first, middle),
          assert_check("remark.explicit_le_linear", p, middle, last)};
}

/// Dimension-free version: 1 - 2a <= 1 - 2^{1-beta} 4^{1-K} K^{-2K}, with the
/// certified lower bound of a for n >= 3.
inline CheckReport remark_general_bound(DilatationK K, Dimension dim) {
  const double k = K.value();
  const double beta = std::pow(k, 1.0 / (dim.value() - 1));
  const double a_lower = 1.0 / (1.0 + std::exp(main_theorem_bound(K, dim).upper));
  const double rhs = -std::expm1((1.0 - beta) * std::numbers::ln2 + 2.0 * (1.0 - k) * std::numbers::ln2 -
                                 2.0 * k * std::log(k));
  return assert_check("remark.f0_general", {{"K", k}, {"n", dim.value()}}, 1.0 - 2.0 * a_lower, rhs);
}

// ---------------------------------------------------------------------------
// Averaging inequality A(phi(t), phi(r)) <= phi(A(t, r)), A(r,s) = sqrt((r+s)/2)

namespace detail {

/// 1 - u given u and its complement u' = sqrt(1 - u^2).
inline double one_minus(const RadiusPair& u) { return u.rc * u.rc / (1.0 + u.r); }

}  // namespace detail

/// Compares A(phi_K(t), phi_K(r)) and phi_K(A(t, r)).  The margin is computed
/// from complements so that it keeps relative precision when both sides
/// approach 1.  t = 1 is the proven Schwarz-type case and is asserted; other t
/// are recorded only.
inline CheckReport averaging_check(double K, double t, double r) {
  if (!(K >= 1.0)) throw domain_error("averaging check requires K >= 1");
  if (!(r > 0.0 && r < 1.0) || !(t > 0.0 && t <= 1.0)) throw domain_error("averaging check requires t, r in (0,1]");
  const RadiusPair pr = phi_K_pair(K, RadiusPair::from_radius(r));
  const RadiusPair pt = t == 1.0 ? RadiusPair{1.0, 0.0} : phi_K_pair(K, RadiusPair::from_radius(t));
  // 1 - A(u,v)^2 = ((1-u) + (1-v))/2
  const double lhs_defect = 0.5 * (detail::one_minus(pt) + detail::one_minus(pr));
  const double at = std::sqrt(0.5 * (t + r));
  const double at_defect = 0.5 * ((1.0 - t) + (1.0 - r));
  const RadiusPair w = phi_K_pair(K, {at, std::sqrt(at_defect)});
  const double rhs_defect = w.rc * w.rc;
  const double lhs = std::sqrt(1.0 - lhs_defect);
  const double rhs = w.r;
  CheckReport c;
  c.check_id = t == 1.0 ? "averaging.t1_schwarz" : "averaging.conjecture";
  c.params = {{"K", K}, {"t", t}, {"r", r}};
  c.lhs = lhs;
  c.rhs = rhs;
  // rhs - lhs = (lhs_defect - rhs_defect) / (lhs + rhs)
  c.margin = (lhs_defect - rhs_defect) / (lhs + rhs);
  if (t == 1.0) {
    c.pass = c.margin >= -kCheckTolerance * std::max(lhs_defect, rhs_defect);
  } else {
    c.validity_note = "exploratory: conjectured, not proven";
  }
  return c;
}

/// Scan over K x t x r.  The t = 1 slice is always included and asserted.
inline std::vector<CheckReport> averaging_conjecture_scan(const std::vector<double>& K_grid,
                                                          const std::vector<double>& t_grid,
                                                          const std::vector<double>& r_grid) {
  std::vector<CheckReport> out;
  for (double K : K_grid) {
    for (double r : r_grid) out.push_back(averaging_check(K, 1.0, r));
    for (double t : t_grid) {
      if (t == 1.0) continue;
      for (double r : r_grid) out.push_back(averaging_check(K, t, r));
    }
  }
  return out;
}

}  // namespace qcdist
