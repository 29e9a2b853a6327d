// Named collections of checks run by `qcdist verify`.
//
// Each suite returns one CheckReport per check.  Sampled properties (random
// point pairs, dense grids) are folded into a single report carrying the
// worst case, so the stream stays readable.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qcdist/ball.hpp"
#include "qcdist/check_report.hpp"
#include "qcdist/distortion_bounds.hpp"
#include "qcdist/elliptic.hpp"
#include "qcdist/grid.hpp"
#include "qcdist/grotzsch.hpp"
#include "qcdist/mn_lemma.hpp"
#include "qcdist/parallel.hpp"
#include "qcdist/ring_capacity.hpp"

namespace qcdist {

struct SuiteOptions {
  /// Replaces the default K grid of the K-sweep suites.
  std::optional<GridSpec> K_grid;
  std::uint64_t seed = 20240601;
};

struct Suite {
  std::string name;
  std::string description;
  std::function<std::vector<CheckReport>(const SuiteOptions&)> run;
};

namespace detail {

/// Uniform point of B^n: gaussian direction, radius U^{1/n}.
inline BallPoint random_ball_point(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = gauss(rng);
  const double radius = std::pow(unif(rng), 1.0 / n);
  return BallPoint(v / v.norm() * radius);
}

inline std::vector<double> k_grid_or(const SuiteOptions& opt, GridSpec fallback) {
  return (opt.K_grid ? *opt.K_grid : fallback).points();
}

/// Tracks the worst margin across many samples of one inequality.
struct WorstCase {
  std::string id;
  ParamList params;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double margin = std::numeric_limits<double>::infinity();
  double scale = 1.0;
  std::size_t samples = 0;

  explicit WorstCase(std::string id_) : id(std::move(id_)) {}

  void add(double l, double r, ParamList p = {}) {
    ++samples;
    const double m = r - l;
    if (m < margin || std::isnan(m)) {
      margin = m;
      lhs = l;
      rhs = r;
      params = std::move(p);
    }
  }

  [[nodiscard]] CheckReport report(Relation rel = Relation::less_equal, double tol = kCheckTolerance) const {
    ParamList p = params;
    p.emplace_back("samples", static_cast<double>(samples));
    return assert_check(id, std::move(p), lhs, rhs, rel, tol);
  }
};

/// Folds many reports of one check into the one with the smallest margin;
/// it passes only if none of them failed.
inline CheckReport fold_worst(std::string id, const std::vector<CheckReport>& reports) {
  const auto it = std::min_element(reports.begin(), reports.end(),
                                   [](const CheckReport& a, const CheckReport& b) { return a.margin < b.margin; });
  CheckReport c = it == reports.end() ? CheckReport{} : *it;
  c.check_id = std::move(id);
  c.params.emplace_back("samples", static_cast<double>(reports.size()));
  c.pass = count_failures(reports) == 0;
  return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline std::vector<CheckReport> suite_elliptic(const SuiteOptions&) {
  std::vector<CheckReport> out;
  const GridSpec grid("r", 0.01, 0.99, 50);
  detail::WorstCase cross{"elliptic.K_vs_quadrature"};
  detail::WorstCase legendre{"elliptic.legendre_relation"};
  detail::WorstCase e_cross{"elliptic.E_vs_quadrature"};
  double prev_k = 0.0;
  double prev_e = 2.0;
  bool k_up = true;
  bool e_down = true;
  for (double r : grid.points()) {
    const double k = complete_K(r);
    const double e = complete_E(r);
    const double rc = detail::complement(r);
    cross.add(std::abs(k - quadrature_K(r)) / k, 1e-11, {{"r", r}});
    e_cross.add(std::abs(e - quadrature_E(r)) / e, 1e-11, {{"r", r}});
    const double res = e * complete_K(rc) + complete_E(rc) * k - k * complete_K(rc) - std::numbers::pi / 2;
    legendre.add(std::abs(res), 1e-11, {{"r", r}});
    k_up = k_up && k > prev_k;
    e_down = e_down && e < prev_e;
    prev_k = k;
    prev_e = e;
  }
  out.push_back(cross.report(Relation::less));
  out.push_back(e_cross.report(Relation::less));
  out.push_back(legendre.report(Relation::less));
  out.push_back(assert_check("elliptic.K_increasing", {}, k_up ? 0 : 1, 0, Relation::equal));
  out.push_back(assert_check("elliptic.E_decreasing", {}, e_down ? 0 : 1, 0, Relation::equal));
  out.push_back(assert_check("elliptic.b_constant", {{"b", planar_b()}}, std::abs(planar_b() - 4.376879), 5e-6,
                             Relation::less));
  out.push_back(assert_check("elliptic.K0", {}, complete_K(0.0), std::numbers::pi / 2, Relation::equal));
  return out;
}

inline std::vector<CheckReport> suite_mu(const SuiteOptions&) {
  std::vector<CheckReport> out;
  {
    detail::WorstCase w{"mu.symmetry_identity"};
    for (double r : GridSpec("r", 1e-4, 1 - 1e-4, 50, Spacing::log).points())
    {
      // r' carried exactly: recomputing r from a rounded r' near 1 loses digits
      const RadiusPair p = RadiusPair::from_radius(r);
      w.add(std::abs(mu(p) * mu(p.swapped()) - kQuarterPiSquared), 1e-11, {{"r", r}});
    }
    out.push_back(w.report(Relation::less));
  }
  const std::vector<double> ks{1.1, 2.0, 5.0, 17.0};
  const auto rs = GridSpec("r", 0.02, 0.98, 25).points();
  {
    detail::WorstCase inv{"phi.composition_inverse"};
    detail::WorstCase pyth{"phi.pythagorean_identity"};
    for (double k : ks) {
      for (double r : rs) {
        const RadiusPair there = phi_K_pair(k, RadiusPair::from_radius(r));
        inv.add(std::abs(phi_K_pair(1.0 / k, there).r - r), 1e-10, {{"K", k}, {"r", r}});
        // plain doubles only while phi_K(r) keeps its complement resolvable
        if (there.r <= 0.99) inv.add(std::abs(phi_K(1.0 / k, phi_K(k, r)) - r), 1e-10, {{"K", k}, {"r", r}});
        const double a = phi_K(k, r);
        const double b = phi_K(1.0 / k, detail::complement(r));
        pyth.add(std::abs(a * a + b * b - 1.0), 1e-10, {{"K", k}, {"r", r}});
      }
    }
    out.push_back(inv.report(Relation::less));
    out.push_back(pyth.report(Relation::less));
  }
  {
    // sech y < sech y sqrt((1+tanh^2)(1+tanh^4)) = sqrt(1 - tanh^8) <= mu^{-1}(y) < 4 e^{-y}
    detail::WorstCase lo{"mu_inv.sandwich_sech_lt_tanh8"};
    detail::WorstCase mid{"mu_inv.sandwich_tanh8_le_muinv"};
    detail::WorstCase hi{"mu_inv.sandwich_muinv_lt_4exp"};
    for (double y : GridSpec("y", 0.05, 10.0, 60).points()) {
      const double th = std::tanh(y);
      const double t2 = th * th;
      const double sech = 1.0 / std::cosh(y);
      const double tanh8 = sech * std::sqrt((1.0 + t2) * (1.0 + t2 * t2));
      const double v = mu_inv(y);
      lo.add(sech, tanh8, {{"y", y}});
      // relative margin: the two sides agree to O(e^{-5y}) relative
      mid.add(tanh8 / v, 1.0, {{"y", y}});
      hi.add(v, 4.0 * std::exp(-y), {{"y", y}});
    }
    out.push_back(lo.report(Relation::less));
    CheckReport m = mid.report();
    m.validity_note = "non-strict at rounding level; the gap is below double resolution for y > 7";
    out.push_back(m);
    out.push_back(hi.report(Relation::less));
  }
  {
    detail::WorstCase rt{"mu_inv.round_trip"};
    for (double y : GridSpec("y", 0.05, 40.0, 60, Spacing::log).points()) {
      const double back = mu(mu_inv_pair(y));
      rt.add(std::abs(back - y) / y, 1e-11, {{"y", y}});
    }
    for (double y : GridSpec("y", 0.8, 30.0, 30, Spacing::log).points())
      rt.add(std::abs(mu(mu_inv(y)) - y) / y, 1e-11, {{"y", y}});
    out.push_back(rt.report(Relation::less));
  }
  {
    bool mu_dec = true;
    bool inv_dec = true;
    bool phi_r = true;
    bool phi_k = true;
    double prev = std::numeric_limits<double>::infinity();
    for (double r : GridSpec("r", 0.001, 0.999, 200).points()) {
      const double v = mu(r);
      mu_dec = mu_dec && v < prev;
      prev = v;
    }
    prev = 1.0;
    for (double y : GridSpec("y", 0.3, 20.0, 200).points()) {
      const double v = mu_inv(y);
      inv_dec = inv_dec && v < prev;
      prev = v;
    }
    for (double k : {0.5, 1.5, 3.0}) {
      prev = 0.0;
      for (double r : rs) {
        const double v = phi_K(k, r);
        phi_r = phi_r && v > prev;
        prev = v;
      }
    }
    for (double r : {0.1, 0.5, 0.9}) {
      prev = 0.0;
      for (double k : GridSpec("K", 0.2, 5.0, 40).points()) {
        const double v = phi_K(k, r);
        phi_k = phi_k && v > prev;
        prev = v;
      }
    }
    out.push_back(assert_check("mu.decreasing", {}, mu_dec ? 0 : 1, 0, Relation::equal));
    out.push_back(assert_check("mu_inv.decreasing", {}, inv_dec ? 0 : 1, 0, Relation::equal));
    out.push_back(assert_check("phi.increasing_in_r", {}, phi_r ? 0 : 1, 0, Relation::equal));
    out.push_back(assert_check("phi.increasing_in_K", {}, phi_k ? 0 : 1, 0, Relation::equal));
  }
  return out;
}

inline std::vector<CheckReport> suite_ring_capacity(const SuiteOptions&) {
  std::vector<CheckReport> out;
  const Dimension two(2);
  {
    detail::WorstCase w{"eta.tau_inversion_vs_closed_form"};
    for (double k : {1.1, 2.0, 3.0})
      for (double t : {0.1, 1.0, 10.0}) {
        const double via_tau = tau_2_inverse(tau_n(two, t).lower / k);
        const double closed = eta_K2(k, t);
        w.add(std::abs(via_tau - closed) / closed, 1e-8, {{"K", k}, {"t", t}});
      }
    out.push_back(w.report(Relation::less));
  }
  const double b = planar_b();
  for (double k : {1.01, 1.1, 1.5, 2.0, 3.0}) {
    const double lam = eta_K2(k, 1.0);
    out.push_back(assert_check("lambda.lower_exp_pi", {{"K", k}}, std::exp(std::numbers::pi * (k - 1.0)), lam,
                               Relation::less));
    out.push_back(assert_check("lambda.upper_exp_b", {{"K", k}}, lam, std::exp(b * (k - 1.0)), Relation::less));
  }
  for (double k : GridSpec("K", 1.01, 1.2, 20).points()) {
    out.push_back(record_check("lambda.belinskii", {{"K", k}}, eta_K2(k, 1.0), 1.0 + 12.0 * (k - 1.0),
                               "recorded only"));
  }
  {
    detail::WorstCase w{"gamma2.classical_bounds"};
    for (double s : GridSpec("s", 1.001, 1e4, 40, Spacing::log).points()) {
      const double g = gamma_2(s);
      w.add(g, 2.0 * std::numbers::pi / std::log(s), {{"s", s}});
      w.add(2.0 * std::numbers::pi / std::log(4.0 * s), g, {{"s", s}});
    }
    out.push_back(w.report());
  }
  {
    bool discipline = true;
    bool monotone = true;
    for (int n : {3, 4, 6}) {
      const Dimension dim(n);
      double prev = 0.0;
      for (double k : GridSpec("K", 1.05, 17.0, 30).points()) {
        const Enclosure e = eta_Kn(k, dim, 1.0);
        const Enclosure p = phi_Kn(1.0 / k, dim, 0.5);
        const Enclosure t = tau_n(dim, k);
        discipline = discipline && !e.is_exact() && !p.is_exact() && !t.is_exact() && std::isfinite(e.upper) &&
                     p.lower > 0.0 && t.lower > 0.0 && std::isfinite(t.lower);
        monotone = monotone && e.upper >= prev;
        prev = e.upper;
      }
    }
    out.push_back(assert_check("enclosure.bound_only_discipline", {}, discipline ? 0 : 1, 0, Relation::equal));
    out.push_back(assert_check("eta.upper_monotone_in_K", {}, monotone ? 0 : 1, 0, Relation::equal));
  }
  {
    // phi_{1/K,n}(r) lower bound dominates the lambda-free form
    detail::WorstCase w{"phi_Kn.lower_ge_lambda_free"};
    for (int n : {3, 4})
      for (double k : {1.5, 2.0, 5.0}) {
        const double beta = std::pow(k, 1.0 / (n - 1));
        const double r = std::numbers::sqrt2 / 2;
        w.add(std::pow(2.0, 1.0 - beta) * std::pow(k, -beta) * std::pow(r, beta),
              phi_Kn(1.0 / k, Dimension(n), r).lower, {{"K", k}, {"n", n}});
      }
    out.push_back(w.report());
  }
  return out;
}

inline std::vector<CheckReport> suite_ball(const SuiteOptions& opt) {
  std::vector<CheckReport> out;
  std::mt19937_64 rng(opt.seed);
  for (int n : {2, 3}) {
    detail::WorstCase sym{"rho.symmetry"};
    detail::WorstCase tri{"rho.triangle"};
    detail::WorstCase mob{"rho.mobius_invariance"};
    detail::WorstCase origin{"mobius.sends_center_to_origin"};
    for (int i = 0; i < 200; ++i) {
      const BallPoint x = detail::random_ball_point(rng, n);
      const BallPoint y = detail::random_ball_point(rng, n);
      const BallPoint z = detail::random_ball_point(rng, n);
      const double dxy = hyperbolic_distance(x, y);
      sym.add(std::abs(dxy - hyperbolic_distance(y, x)), 1e-12 * std::max(1.0, dxy));
      tri.add(dxy, hyperbolic_distance(x, z) + hyperbolic_distance(z, y));
      const MobiusMap T = mobius_to_origin(z);
      mob.add(std::abs(hyperbolic_distance(T(x), T(y)) - dxy), 1e-10 * std::max(1.0, dxy));
      origin.add(T(z.coords()).norm(), 1e-14);
    }
    for (auto* w : {&sym, &tri, &mob, &origin}) {
      w->params.emplace_back("n", n);
      out.push_back(w->report());
    }
  }
  for (int n : {2, 3}) {
    detail::WorstCase chord{"chord.bound"};
    detail::WorstCase anti{"chord.antipodal_equality"};
    for (int i = 0; i < 10000; ++i) {
      const BallPoint x = detail::random_ball_point(rng, n);
      const BallPoint y = detail::random_ball_point(rng, n);
      const ChordBound c = chord_bound(x, y);
      chord.add(c.lhs, c.rhs);
    }
    for (int i = 0; i < 20; ++i) {
      const BallPoint x = detail::random_ball_point(rng, n);
      const ChordBound c = chord_bound(x, -x);
      anti.add(std::abs(c.rhs - c.lhs), 1e-12);
    }
    chord.params.emplace_back("n", n);
    anti.params.emplace_back("n", n);
    out.push_back(chord.report());
    out.push_back(anti.report());
  }
  for (double alpha : {0.1, 0.25, 0.5, 0.9}) {
    const RadialStretching f(Dimension(2), alpha);
    const double delta = radial_stretch_delta(f);
    const int grid = 1000000;
    double best = 0.0;
    for (int i = 1; i < grid; ++i) {
      const double r = static_cast<double>(i) / grid;
      best = std::max(best, std::pow(r, alpha) - r);
    }
    out.push_back(assert_check("delta.closed_form_vs_grid", {{"alpha", alpha}}, std::abs(delta - best), 1e-8,
                               Relation::less));
    out.push_back(assert_check("delta.gt_one_minus_alpha_over_e", {{"alpha", alpha}}, (1.0 - alpha) / std::numbers::e,
                               delta, Relation::less));
  }
  {
    detail::WorstCase w{"radial.identity_outside_ball"};
    for (int n : {2, 3}) {
      const RadialStretching f(Dimension(n), 0.3);
      for (int i = 0; i < 100; ++i) {
        Vector z = detail::random_ball_point(rng, n).coords();
        z = z / z.norm() * (1.0 + 2.0 * i / 100.0);
        w.add((f.apply(z) - z).norm(), 0.0);
      }
    }
    out.push_back(w.report(Relation::equal, 0.0));
  }
  return out;
}

inline std::vector<CheckReport> suite_krzyz(const SuiteOptions& opt) {
  std::vector<CheckReport> out;
  for (double k : detail::k_grid_or(opt, GridSpec("K", 1.001, 100.0, 40, Spacing::log))) {
    if (k <= 1.0) continue;
    const KrzyzSandwich s = krzyz_sandwich(DilatationK(k));
    out.push_back(assert_check("krzyz.lower", {{"K", k}}, s.lower, s.value, Relation::less));
    out.push_back(assert_check("krzyz.upper", {{"K", k}}, s.value, s.upper, Relation::less));
  }
  return out;
}

inline std::vector<CheckReport> suite_stabrmk(const SuiteOptions& opt) {
  const auto ks = detail::k_grid_or(opt, GridSpec("K", 1.0, 17.0, 101));
  std::vector<std::pair<int, double>> jobs;
  for (int n : {2, 3, 4})
    for (double k : ks) jobs.emplace_back(n, k);
  const auto results = parallel_map(jobs.size(), [&](std::size_t i) {
    return stabrmk_bounds(DilatationK(jobs[i].second), Dimension(jobs[i].first));
  });
  std::vector<CheckReport> out;
  for (const auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

inline std::vector<CheckReport> suite_mycor(const SuiteOptions& opt) {
  std::vector<CheckReport> out;
  const auto ks = detail::k_grid_or(opt, GridSpec("K", 1.0, 17.0, 65));
  for (int n : {2, 3}) {
    const Dimension dim(n);
    detail::WorstCase chain{"mycor.chain_le_linear"};
    detail::WorstCase delta{"mycor.delta_le_linear"};
    for (double k : ks) {
      if (k > kLinearBoundMaxK) continue;
      const MycorBound m = mycor_bound(DilatationK(k), dim);
      chain.add(m.chain.value, m.general->value, {{"K", k}});
      delta.add(radial_stretch_delta(RadialStretching::from_dilatation(DilatationK(k), dim)), m.general->value,
                {{"K", k}});
      if (n == 2)
        out.push_back(assert_check("mycor.planar_le_general", {{"K", k}}, m.planar->value, m.general->value));
    }
    chain.params.emplace_back("n", n);
    delta.params.emplace_back("n", n);
    out.push_back(chain.report());
    out.push_back(delta.report());
  }
  return out;
}

inline std::vector<CheckReport> suite_witness(const SuiteOptions& opt) {
  std::vector<CheckReport> out;
  std::mt19937_64 rng(opt.seed + 1);
  const std::vector<std::pair<int, std::vector<double>>> cases{{2, {1.1, 1.5, 2.0, 4.0}}, {3, {1.21, 2.25}}};
  for (const auto& [n, ks] : cases) {
    const Dimension dim(n);
    for (double k : ks) {
      const DilatationK K(k);
      const RadialStretching f = RadialStretching::from_dilatation(K, dim);
      const double hyp = main_theorem_bound(K, dim).upper;
      const MycorBound mb = mycor_bound(K, dim);
      const double lin = mb.best()->value;
      detail::WorstCase rho{"witness.rho_le_main_bound"};
      detail::WorstCase disp{"witness.displacement_le_linear"};
      detail::WorstCase chain{"witness.displacement_le_chain"};
      detail::WorstCase image{"witness.image_norm_in_sandwich"};
      for (int i = 0; i < 200; ++i) {
        const BallPoint x = detail::random_ball_point(rng, n);
        const BallPoint fx = f.apply(x);
        const double d = (fx.coords() - x.coords()).norm();
        rho.add(hyperbolic_distance(fx, x), hyp);
        disp.add(d, lin);
        chain.add(d, mb.chain.value);
        const ImageNormBounds s = sandwich_eta(K, dim, x.norm());
        image.add(s.certified_lower(), fx.norm());
        image.add(fx.norm(), s.certified_upper());
      }
      for (auto* w : {&rho, &disp, &chain, &image}) {
        w->params.insert(w->params.begin(), {{"n", n}, {"K", k}});
        out.push_back(w->report());
      }
    }
  }
  return out;
}

inline std::vector<CheckReport> suite_corollary(const SuiteOptions&) {
  std::vector<CheckReport> out;
  for (double k : {1.2, 2.0, 5.0}) {
    const DilatationK K(k);
    const double one_minus_2a = 1.0 - 2.0 * planar_a(K);
    out.push_back(assert_check("corollary.x0_equals_1_minus_2a", {{"K", k}}, corollary_bound(K, 0.0), one_minus_2a,
                               Relation::equal, 1e-10));
    out.push_back(assert_check("sandwich.x0_equals_1_minus_2a", {{"K", k}},
                               sandwich_eta(K, Dimension(2), 0.0).certified_upper(), one_minus_2a, Relation::equal,
                               1e-10));
  }
  {
    bool inc_k = true;
    bool inc_x = true;
    double worst_identity = 0.0;
    const auto xs = GridSpec("x", 0.0, 0.95, 20).points();
    for (double x : xs) {
      double prev = -1.0;
      for (double k : GridSpec("K", 1.0, 6.0, 20).points()) {
        const double v = corollary_bound(DilatationK(k), x);
        inc_k = inc_k && v > prev;
        prev = v;
      }
      worst_identity = std::max(worst_identity, std::abs(corollary_bound(DilatationK(1.0), x) - x));
    }
    for (double k : {1.5, 3.0}) {
      double prev = -1.0;
      for (double x : xs) {
        const double v = corollary_bound(DilatationK(k), x);
        inc_x = inc_x && v > prev;
        prev = v;
      }
    }
    out.push_back(assert_check("corollary.increasing_in_K", {}, inc_k ? 0 : 1, 0, Relation::equal));
    out.push_back(assert_check("corollary.increasing_in_x", {}, inc_x ? 0 : 1, 0, Relation::equal));
    out.push_back(assert_check("corollary.identity_at_K1", {}, worst_identity, 1e-12));
  }
  {
    std::vector<CheckReport> schwarz;
    for (double k : GridSpec("K", 1.05, 10.0, 30, Spacing::log).points())
      for (double r : GridSpec("r", 0.02, 0.98, 30).points()) schwarz.push_back(averaging_check(k, 1.0, r));
    out.push_back(detail::fold_worst("schwarz.phi_le_corollary", schwarz));
  }
  {
    std::vector<CheckReport> first;
    double largest = 1.0;
    bool holding = true;
    for (double k : GridSpec("K", 1.0, 20.0, 400).points()) {
      const auto chain = remark_n2_chain(DilatationK(k));
      first.push_back(chain[0]);
      holding = holding && !chain[1].failed();
      if (holding) largest = k;
    }
    out.push_back(detail::fold_worst("remark.f0_le_explicit", first));
    out.push_back(record_check("remark.linear_chain_largest_K", {}, largest, 20.0,
                               "largest grid K in [1,20] up to which the linear chain holds"));
    for (int n : {3, 4})
      for (double k : {1.0, 1.5, 3.0, 10.0}) out.push_back(remark_general_bound(DilatationK(k), Dimension(n)));
  }
  return out;
}

inline std::vector<CheckReport> suite_mn(const SuiteOptions&) {
  std::vector<CheckReport> out;
  for (const auto& [m, n] : std::vector<std::pair<double, double>>{{3, 2}, {1, 1}, {5, 4}}) {
    auto c = mn_lemma_checks(MNParams(m, n));
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

inline std::vector<CheckReport> suite_conjecture(const SuiteOptions&) {
  auto reports = averaging_conjecture_scan({1.0, 1.5, 3.0}, {0.2, 0.5, 0.7, 0.9},
                                           GridSpec("r", 0.05, 0.95, 10).points());
  double min_margin = std::numeric_limits<double>::infinity();
  for (const auto& c : reports)
    if (!c.asserted()) min_margin = std::min(min_margin, c.margin);
  reports.push_back(record_check("averaging.min_exploratory_margin", {}, -min_margin, 0.0, "exploratory summary"));
  return reports;
}

inline const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{
      {"elliptic", "AGM vs quadrature, Legendre relation, b constant", suite_elliptic},
      {"mu-identities", "mu symmetry, phi_K identities, mu^{-1} sandwich", suite_mu},
      {"ring-capacity", "eta/tau consistency, lambda(K) bounds, enclosure discipline", suite_ring_capacity},
      {"ball-geometry", "hyperbolic metric, Mobius invariance, chord bound, delta", suite_ball},
      {"krzyz", "sandwich for the constant c_1", suite_krzyz},
      {"stabrmk", "chain bounds for log((1-a)/a)", suite_stabrmk},
      {"mycor", "linear displacement bounds and their chain", suite_mycor},
      {"witness-maps", "radial stretchings against every displacement bound", suite_witness},
      {"corollary", "|f(x)| bounds and the Schwarz comparison", suite_corollary},
      {"mn-lemma", "closed-form M and the fixed-point iteration", suite_mn},
      {"conjecture", "averaging inequality scan (t = 1 asserted)", suite_conjecture},
  };
  return suites;
}

inline const Suite* find_suite(const std::string& name) {
  for (const auto& s : all_suites())
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace qcdist
