// Hyperbolic geometry of the unit ball B^n and the radial stretching maps.
#pragma once

#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "qcdist/types.hpp"

namespace qcdist {

using Vector = Eigen::VectorXd;

/// Point of the open unit ball B^n, n >= 2.
class BallPoint {
 public:
  explicit BallPoint(Vector coords) : x_(std::move(coords)), norm_(x_.norm()) {
    if (x_.size() < 2) throw usage_error("ball points need dimension n >= 2");
    if (!(norm_ < 1.0)) throw domain_error("ball point must satisfy |x| < 1, got |x| = " + std::to_string(norm_));
  }

  static BallPoint origin(int n) { return BallPoint(Vector::Zero(n)); }

  /// t * e_axis.
  static BallPoint on_axis(int n, int axis, double t) {
    Vector v = Vector::Zero(n);
    v(axis) = t;
    return BallPoint(std::move(v));
  }

  [[nodiscard]] const Vector& coords() const { return x_; }
  [[nodiscard]] double norm() const { return norm_; }
  [[nodiscard]] int dim() const { return static_cast<int>(x_.size()); }
  /// 1 - |x|^2 without cancellation.
  [[nodiscard]] double defect() const { return (1.0 - norm_) * (1.0 + norm_); }
  [[nodiscard]] BallPoint operator-() const { return BallPoint(-x_); }

 private:
  Vector x_;
  double norm_;
};

namespace detail {

inline void require_same_dim(const BallPoint& x, const BallPoint& y) {
  if (x.dim() != y.dim())
    throw usage_error("dimension mismatch: " + std::to_string(x.dim()) + " vs " + std::to_string(y.dim()));
}

}  // namespace detail

/// Hyperbolic distance rho_{B^n}(x, y).
///
/// With d = |x-y|, t = sqrt((1-|x|^2)(1-|y|^2)) and s = sqrt(d^2 + t^2) we
/// have tanh(rho/2) = d/s, hence rho = 2 log((d + s)/t).  Writing
/// s - t = d^2/(s + t) gives the log1p form used here, which stays accurate
/// both for nearby points and near the boundary.
inline double hyperbolic_distance(const BallPoint& x, const BallPoint& y) {
  detail::require_same_dim(x, y);
  const double d = (x.coords() - y.coords()).norm();
  if (d == 0.0) return 0.0;
  const double t = std::sqrt(x.defect() * y.defect());
  const double s = std::hypot(d, t);
  return 2.0 * std::log1p((d + d * d / (s + t)) / t);
}

/// Both sides of |x - y| <= 2 tanh(rho(x,y)/4).
struct ChordBound {
  double lhs;
  double rhs;
  [[nodiscard]] double margin() const { return rhs - lhs; }
};

inline ChordBound chord_bound(const BallPoint& x, const BallPoint& y) {
  detail::require_same_dim(x, y);
  const double d = (x.coords() - y.coords()).norm();
  return {d, 2.0 * std::tanh(hyperbolic_distance(x, y) / 4.0)};
}

/// Möbius automorphism of B^n sending a given point to the origin:
///
///   T(x) = ((1 - |a|^2)(x - a) - |x - a|^2 a) / (1 - 2<x,a> + |x|^2 |a|^2).
///
/// Its inverse is the map built from -a.
class MobiusMap {
 public:
  explicit MobiusMap(const BallPoint& a) : a_(a.coords()), a2_(a.norm() * a.norm()), defect_(a.defect()) {}

  [[nodiscard]] Vector operator()(const Vector& x) const {
    if (x.size() != a_.size()) throw usage_error("dimension mismatch in Mobius map");
    const Vector diff = x - a_;
    const double den = 1.0 - 2.0 * x.dot(a_) + x.squaredNorm() * a2_;
    return (defect_ * diff - diff.squaredNorm() * a_) / den;
  }

  [[nodiscard]] BallPoint operator()(const BallPoint& x) const { return BallPoint((*this)(x.coords())); }

  [[nodiscard]] MobiusMap inverse() const { return MobiusMap(BallPoint(-a_)); }
  [[nodiscard]] const Vector& center() const { return a_; }

 private:
  Vector a_;
  double a2_;
  double defect_;
};

inline MobiusMap mobius_to_origin(const BallPoint& x) { return MobiusMap(x); }

/// Radial stretching z -> |z|^{alpha-1} z inside B^n, identity outside.  It is
/// K-quasiconformal with alpha = K^{1/(1-n)}.
class RadialStretching {
 public:
  RadialStretching(Dimension dim, double alpha) : dim_(dim), alpha_(alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw domain_error("radial stretching requires alpha in (0,1]");
  }

  static RadialStretching from_dilatation(DilatationK K, Dimension dim) {
    return {dim, std::pow(K.value(), 1.0 / (1.0 - dim.value()))};
  }

  [[nodiscard]] Dimension dim() const { return dim_; }
  [[nodiscard]] double alpha() const { return alpha_; }
  /// K = alpha^{1-n}.
  [[nodiscard]] double dilatation() const { return std::pow(alpha_, 1.0 - dim_.value()); }

  [[nodiscard]] Vector apply(const Vector& z) const {
    const double r = z.norm();
    if (r >= 1.0 || r == 0.0 || alpha_ == 1.0) return z;
    return std::pow(r, alpha_ - 1.0) * z;
  }

  [[nodiscard]] BallPoint apply(const BallPoint& z) const { return BallPoint(apply(z.coords())); }

  /// Radius where |f(z) - z| = r^alpha - r peaks: r_alpha = alpha^{1/(1-alpha)}.
  [[nodiscard]] double peak_radius() const {
    if (alpha_ == 1.0) return std::exp(-1.0);
    return std::exp(std::log(alpha_) / (1.0 - alpha_));
  }

 private:
  Dimension dim_;
  double alpha_;
};

inline Vector radial_stretch_apply(const RadialStretching& f, const Vector& z) { return f.apply(z); }

/// delta(f) = sup |f(z) - z| = (1 - alpha) alpha^{alpha/(1-alpha)}.
inline double radial_stretch_delta(const RadialStretching& f) {
  const double alpha = f.alpha();
  if (alpha == 1.0) return 0.0;
  return (1.0 - alpha) * std::exp(alpha * std::log(alpha) / (1.0 - alpha));
}

}  // namespace qcdist
