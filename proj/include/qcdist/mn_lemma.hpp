// The inequality
//
//   p(x) = log(2^{mx-m+1} x^{nx} - 1)  <=  q(x) = (2m log 2 + 2n)(x - 1)
//
// on an interval [1, a].  A closed-form M > 1 starts the fixed-point iteration
// a_{k+1} = p^{-1}(q(a_k)), whose increasing limit a is the right end of the
// interval.  For (m, n) = (3, 2) the interval reaches past 17, which is what
// licenses the K in [1, 17] window of the linear displacement bound.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qcdist/check_report.hpp"
#include "qcdist/types.hpp"

namespace qcdist {

struct MNParams {
  double m;
  double n;

  MNParams(double m_, double n_) : m(m_), n(n_) {
    if (!(m_ >= 1.0) || !(n_ >= 1.0)) throw domain_error("Lemma parameters require m >= 1 and n >= 1");
  }

  /// The iteration never exceeds 2^{2m/n} e^2.
  [[nodiscard]] double upper_cap() const { return std::exp(2.0 * m / n * std::numbers::ln2 + 2.0); }
};

namespace detail {

/// u(x) = (mx - m + 1) log 2 + n x log x, so that p = log(e^u - 1).
inline double mn_u(const MNParams& p, double x) {
  return (p.m * x - p.m + 1.0) * std::numbers::ln2 + p.n * x * std::log(x);
}

inline void require_ge_one(double x) {
  if (!(x >= 1.0)) throw domain_error("Lemma functions require x >= 1, got " + std::to_string(x));
}

}  // namespace detail

/// Right-hand constant of the quadratic whose larger root is M.
inline double mn_quadratic_rhs(const MNParams& p) {
  const double s = p.n + p.m * std::numbers::ln2;
  return std::log(1.0 + s * s / p.n);
}

/// Residual of (mx - m + 1) log 2 + n x (x - 1) = log(1 + (n + m log 2)^2 / n).
inline double mn_quadratic_residual(const MNParams& p, double x) {
  return (p.m * x - p.m + 1.0) * std::numbers::ln2 + p.n * x * (x - 1.0) - mn_quadratic_rhs(p);
}

inline double compute_M(const MNParams& p) {
  const double t = (p.m * std::numbers::ln2 - p.n) / (2.0 * p.n);
  const double c = ((p.m - 1.0) * std::numbers::ln2 + mn_quadratic_rhs(p)) / p.n;
  return std::sqrt(c + t * t) - t;
}

inline double p_func(const MNParams& p, double x) {
  detail::require_ge_one(x);
  const double u = detail::mn_u(p, x);
  // log(e^u - 1) overflows the direct form once e^u does.
  if (u > 30.0) return u + std::log1p(-std::exp(-u));
  return std::log(std::expm1(u));
}

inline double q_func(const MNParams& p, double x) {
  detail::require_ge_one(x);
  return (2.0 * p.m * std::numbers::ln2 + 2.0 * p.n) * (x - 1.0);
}

/// p'(x) = u'(x) / (1 - e^{-u(x)}).
inline double p_derivative(const MNParams& p, double x) {
  const double u = detail::mn_u(p, x);
  const double du = p.m * std::numbers::ln2 + p.n + p.n * std::log(x);
  return du / -std::expm1(-u);
}

/// p^{-1}(y) for y >= 0: bisection on [1, 2^{2m/n}e^2 + 1] with Newton steps.
inline double p_inverse(const MNParams& p, double y) {
  if (!(y >= 0.0)) throw domain_error("p_inverse requires y >= 0, got " + std::to_string(y));
  if (y == 0.0) return 1.0;
  double lo = 1.0;
  double hi = p.upper_cap() + 1.0;
  while (p_func(p, hi) < y) hi *= 2.0;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 300; ++it) {
    const double g = p_func(p, x) - y;
    if (g == 0.0) break;
    if (g < 0.0) lo = x; else hi = x;
    double next = x - g / p_derivative(p, x);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step <= 4.0 * std::numeric_limits<double>::epsilon() * x) break;
  }
  return x;
}

struct IterationTrace {
  std::vector<double> sequence;  // a_0 = M, a_1, ...
  bool converged = false;
  double limit_estimate = 0.0;
  double upper_cap = 0.0;

  [[nodiscard]] std::optional<double> term(std::size_t k) const {
    if (k < sequence.size()) return sequence[k];
    return std::nullopt;
  }
};

/// Runs a_{k+1} = p^{-1}(q(a_k)) from a_0 = M.  Stops once a step drops below
/// tol; a step that rounding makes non-positive also counts as converged and
/// is not appended, so the stored sequence is strictly increasing.
inline IterationTrace iterate_a(const MNParams& p, int max_steps = 10000, double tol = 1e-13) {
  if (max_steps < 1) throw domain_error("iterate_a requires max_steps >= 1");
  if (!(tol > 0.0)) throw domain_error("iterate_a requires tol > 0");
  IterationTrace tr;
  tr.upper_cap = p.upper_cap();
  double a = compute_M(p);
  tr.sequence.push_back(a);
  for (int k = 0; k < max_steps; ++k) {
    const double next = p_inverse(p, q_func(p, a));
    const double step = next - a;
    if (step <= 0.0) {
      tr.converged = true;
      break;
    }
    tr.sequence.push_back(next);
    a = next;
    if (step < tol) {
      tr.converged = true;
      break;
    }
  }
  tr.limit_estimate = a;
  return tr;
}

/// p(x) <= q(x) on a uniform grid of [1, upto]; reports the interior point
/// with the smallest margin q - p, which must be strictly positive.
inline CheckReport verify_interval(const MNParams& p, double upto, int grid_size) {
  if (grid_size < 3) throw domain_error("verify_interval needs at least 3 grid points");
  if (!(upto > 1.0)) throw domain_error("verify_interval requires upto > 1");
  double worst_x = 0.0;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (int i = 1; i < grid_size - 1; ++i) {
    const double x = 1.0 + (upto - 1.0) * i / (grid_size - 1);
    const double margin = q_func(p, x) - p_func(p, x);
    if (margin < worst_margin) {
      worst_margin = margin;
      worst_x = x;
    }
  }
  return assert_check("mn.p_le_q_interior", {{"m", p.m}, {"n", p.n}, {"upto", upto}, {"grid", grid_size}, {"x", worst_x}},
                      p_func(p, worst_x), q_func(p, worst_x), Relation::less);
}

/// The checks that reproduce the lemma: closed-form M, monotone bounded
/// iteration, fixed point, interval inequality and its failure past the cap.
inline std::vector<CheckReport> mn_lemma_checks(const MNParams& p, int grid_size = 10000) {
  std::vector<CheckReport> out;
  const ParamList base{{"m", p.m}, {"n", p.n}};
  const double M = compute_M(p);
  out.push_back(assert_check("mn.M_quadratic_residual", base, std::abs(mn_quadratic_residual(p, M)), 1e-10,
                             Relation::less));
  out.push_back(assert_check("mn.M_gt_1", base, 1.0, M, Relation::less));
  out.push_back(assert_check("mn.p_le_q_at_M", base, p_func(p, M), q_func(p, M)));
  out.push_back(assert_check("mn.x1_equality", base, p_func(p, 1.0), q_func(p, 1.0), Relation::equal));

  // Concavity precondition on [1, M]: f(x) <= g(1).
  {
    const double s = p.n + p.m * std::numbers::ln2;
    const double g1 = s * s / p.n;
    double fmax = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double x = 1.0 + (M - 1.0) * i / 199.0;
      fmax = std::max(fmax, std::expm1(detail::mn_u(p, x)));
    }
    out.push_back(assert_check("mn.concavity_f_le_g1", base, fmax, g1));
  }

  const IterationTrace tr = iterate_a(p);
  bool increasing = true;
  double max_term = 0.0;
  for (std::size_t k = 1; k < tr.sequence.size(); ++k) increasing = increasing && tr.sequence[k] > tr.sequence[k - 1];
  for (double a : tr.sequence) max_term = std::max(max_term, a);
  out.push_back(assert_check("mn.sequence_increasing", base, increasing ? 0.0 : 1.0, 0.0, Relation::equal));
  out.push_back(assert_check("mn.sequence_below_cap", base, max_term, tr.upper_cap, Relation::less));
  out.push_back(assert_check("mn.converged", base, tr.converged ? 0.0 : 1.0, 0.0, Relation::equal));
  const double a = tr.limit_estimate;
  out.push_back(assert_check("mn.fixed_point_residual", base, std::abs(p_func(p, a) - q_func(p, a)), 1e-9,
                             Relation::less));
  if (p.m == 3.0 && p.n == 2.0) {
    const auto a36 = tr.term(36);
    out.push_back(assert_check("mn.a36_gt_17", {{"m", 3}, {"n", 2}, {"a36", a36.value_or(0.0)}}, 17.0,
                               a36.value_or(0.0), Relation::less));
    out.push_back(verify_interval(p, 17.0, grid_size));
  }
  out.push_back(verify_interval(p, a, std::min(grid_size, 2000)));
  const double c = tr.upper_cap;
  out.push_back(assert_check("mn.p_gt_q_at_cap", {{"m", p.m}, {"n", p.n}, {"c", c}}, q_func(p, c), p_func(p, c),
                             Relation::less));
  return out;
}

}  // namespace qcdist
