#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "qcdist/grotzsch.hpp"

using namespace qcdist;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Independent route to mu^{-1}: with nome q = exp(-2y) the modulus is
// k = theta_2(q)^2 / theta_3(q)^2.
double theta_mu_inv(double y) {
  const double q = std::exp(-2.0 * y);
  double t2 = 0.0;
  double t3 = 1.0;
  for (int n = 0; n < 60; ++n) {
    t2 += std::pow(q, n * (n + 1.0));
    if (n > 0) t3 += 2.0 * std::pow(q, static_cast<double>(n) * n);
  }
  t2 *= 2.0 * std::pow(q, 0.25);
  return t2 * t2 / (t3 * t3);
}

}  // namespace

TEST_CASE("mu and mu_inv match high-precision references", "[mu]") {
  CHECK_THAT(mu(0.5), WithinRel(2.0094593770052852, 4e-16));
  CHECK_THAT(mu(std::numbers::sqrt2 / 2), WithinRel(std::numbers::pi / 2, 4e-16));
  CHECK_THAT(mu_inv(1.0), WithinRel(0.94408503740782465, 1e-15));
  CHECK_THAT(mu_inv(1.5), WithinRel(0.74183939933437729, 1e-15));
  CHECK_THAT(mu_inv(5.0), WithinRel(0.026946894336837825, 1e-15));
}

TEST_CASE("mu_inv agrees with the theta-function inversion", "[mu]") {
  for (double y : {0.9, 1.2, std::numbers::pi / 2, 2.0, 3.0, 5.0, 8.0, 12.0, 20.0, 30.0}) {
    INFO("y = " << y);
    CHECK_THAT(mu_inv(y), WithinRel(theta_mu_inv(y), 1e-13));
  }
}

TEST_CASE("mu symmetry and round trip", "[mu]") {
  for (double r : {1e-6, 0.01, 0.3, 0.5, 0.9, 0.999}) {
    const RadiusPair p = RadiusPair::from_radius(r);
    CHECK_THAT(mu(p) * mu(p.swapped()), WithinAbs(kQuarterPiSquared, 1e-12));
  }
  for (double y : {0.01, 0.1, 0.5, 1.0, 1.5, 2.0, 10.0, 34.9, 35.1, 60.0}) {
    INFO("y = " << y);
    CHECK_THAT(mu(mu_inv_pair(y)), WithinRel(y, 1e-13));
  }
}

TEST_CASE("mu_inv for large and small arguments", "[mu]") {
  // r ~ 4 e^{-y} with relative error O(e^{-2y})
  CHECK_THAT(mu_inv(40.0), WithinRel(4.0 * std::exp(-40.0), 1e-15));
  // y -> 0: r' ~ 4 exp(-pi^2 / (4y))
  const RadiusPair p = mu_inv_pair(0.05);
  CHECK_THAT(p.rc, WithinRel(4.0 * std::exp(-kQuarterPiSquared / 0.05), 1e-12));
  CHECK(p.r == 1.0);
}

TEST_CASE("phi_K identities", "[phi]") {
  for (double k : {1.3, 2.0, 7.0}) {
    for (double r : {0.1, 0.4, 0.8}) {
      const double a = phi_K(k, r);
      const double b = phi_K(1.0 / k, detail::complement(r));
      CHECK_THAT(a * a + b * b, WithinAbs(1.0, 1e-13));
      // the round trip goes through the pair form: phi_7(0.8) is 1 - O(1e-9)
      const RadiusPair there = phi_K_pair(k, RadiusPair::from_radius(r));
      CHECK_THAT(phi_K_pair(1.0 / k, there).r, WithinAbs(r, 1e-13));
      CHECK(a > r);
    }
  }
  CHECK_THAT(phi_K(2.0, phi_K(3.0, 0.2)), WithinRel(phi_K(6.0, 0.2), 1e-13));
  CHECK(phi_K(2.5, 0.0) == 0.0);
  CHECK(phi_K(2.5, 1.0) == 1.0);
  CHECK(phi_K(1.0, 0.37) == 0.37);
}

TEST_CASE("phi_K at 1/sqrt 2 against the Schwarz-type bound", "[phi]") {
  // phi_K(r) <= 4^{1 - 1/K} r^{1/K}
  for (double k : {1.5, 3.0, 10.0})
    for (double r : {0.01, 0.3, 0.7}) CHECK(phi_K(k, r) <= std::pow(4.0, 1.0 - 1.0 / k) * std::pow(r, 1.0 / k));
}

TEST_CASE("phi_K domain errors", "[phi]") {
  CHECK_THROWS_AS(phi_K(0.0, 0.5), domain_error);
  CHECK_THROWS_AS(phi_K(2.0, 1.5), domain_error);
  CHECK_THROWS_AS(mu(0.0), domain_error);
  CHECK_THROWS_AS(mu_inv(0.0), domain_error);
}
