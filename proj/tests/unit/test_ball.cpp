#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "qcdist/ball.hpp"

using namespace qcdist;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

BallPoint point(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return BallPoint(v);
}

BallPoint random_point(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = u(rng);
    if (v.norm() < 0.999) return BallPoint(v);
  }
}

}  // namespace

TEST_CASE("hyperbolic distance closed forms", "[ball]") {
  const BallPoint x = point({0.3, 0.0});
  CHECK_THAT(hyperbolic_distance(x, -x), WithinRel(1.2380784168124469, 1e-15));
  // from the origin: rho = 2 artanh |x|
  for (double t : {1e-9, 0.2, 0.9, 0.999999}) {
    const BallPoint y = BallPoint::on_axis(3, 1, t);
    CHECK_THAT(hyperbolic_distance(BallPoint::origin(3), y), WithinRel(2.0 * std::atanh(t), 1e-13));
  }
  CHECK(hyperbolic_distance(x, x) == 0.0);
}

TEST_CASE("Mobius map is an isometry sending its center to 0", "[ball]") {
  std::mt19937_64 rng(7);
  for (int n : {2, 3, 5}) {
    for (int i = 0; i < 50; ++i) {
      const BallPoint a = random_point(rng, n);
      const BallPoint x = random_point(rng, n);
      const BallPoint y = random_point(rng, n);
      const MobiusMap T = mobius_to_origin(a);
      CHECK(T(a.coords()).norm() < 1e-15);
      const double d = hyperbolic_distance(x, y);
      CHECK_THAT(hyperbolic_distance(T(x), T(y)), WithinRel(d, 1e-9));
      const Vector back = T.inverse()(T(x.coords()));
      // near the sphere T loses digits roughly like 1/(1 - |a|)
      CHECK((back - x.coords()).norm() < 1e-12 / (1.0 - a.norm()));
    }
  }
}

TEST_CASE("chord bound with equality for antipodal pairs", "[ball]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const BallPoint x = random_point(rng, 3);
    const BallPoint y = random_point(rng, 3);
    const ChordBound c = chord_bound(x, y);
    CHECK(c.margin() >= -1e-15);
    const ChordBound e = chord_bound(x, -x);
    CHECK_THAT(e.lhs, WithinAbs(e.rhs, 1e-12));
  }
}

TEST_CASE("radial stretching", "[ball]") {
  const RadialStretching f = RadialStretching::from_dilatation(DilatationK(4.0), Dimension(3));
  CHECK_THAT(f.alpha(), WithinRel(0.5, 1e-15));
  CHECK_THAT(f.dilatation(), WithinRel(4.0, 1e-15));
  const Vector z = BallPoint::on_axis(3, 2, 0.25).coords();
  CHECK_THAT(f.apply(z).norm(), WithinRel(0.5, 1e-15));
  Vector outside(3);
  outside << 1.0, 2.0, 0.5;
  CHECK(f.apply(outside) == outside);

  const RadialStretching g(Dimension(2), 0.25);
  CHECK_THAT(radial_stretch_delta(g), WithinRel(0.47247039371057744, 1e-14));
  const double r = g.peak_radius();
  CHECK_THAT(std::pow(r, 0.25) - r, WithinRel(radial_stretch_delta(g), 1e-14));
  CHECK(radial_stretch_delta(RadialStretching(Dimension(2), 1.0)) == 0.0);
}

TEST_CASE("ball domain and usage errors", "[ball]") {
  CHECK_THROWS_AS(point({0.8, 0.6}), domain_error);
  CHECK_THROWS_AS(point({0.5}), usage_error);
  CHECK_THROWS_AS(hyperbolic_distance(point({0.1, 0.1}), point({0.1, 0.1, 0.1})), usage_error);
  CHECK_THROWS_AS(RadialStretching(Dimension(2), 0.0), domain_error);
  CHECK_THROWS_AS(DilatationK(0.9), domain_error);
}
