#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "qcdist/ring_capacity.hpp"

using namespace qcdist;
using Catch::Matchers::WithinRel;

TEST_CASE("planar capacities match references", "[capacity]") {
  CHECK_THAT(gamma_2(2.0), WithinRel(3.1268038453922230, 1e-15));
  CHECK_THAT(phi_Kn(3.0, Dimension(2), 0.6).lower, WithinRel(0.99795270940919703, 1e-15));
  CHECK_THAT(eta_K2(2.0, 3.0), WithinRel(192.99484522385713, 1e-13));
}

TEST_CASE("lambda(K) = eta_{K,2}(1) references", "[capacity]") {
  CHECK_THAT(eta_K2(1.01, 1.0), WithinRel(1.0445150994427475, 1e-13));
  CHECK_THAT(eta_K2(1.1, 1.0), WithinRel(1.5194644045602387, 1e-13));
  CHECK_THAT(eta_K2(1.5, 1.0), WithinRel(6.4685874610114259, 1e-13));
  CHECK_THAT(eta_K2(2.0, 1.0), WithinRel(32.970562748477141, 1e-13));
  CHECK_THAT(eta_K2(3.0, 1.0), WithinRel(773.97808886918852, 1e-13));
  // Landen: phi_2(r) = 2 sqrt(r)/(1 + r), so lambda(2) = 16 + 12 sqrt 2
  CHECK_THAT(eta_K2(2.0, 1.0), WithinRel(16.0 + 12.0 * std::numbers::sqrt2, 1e-13));
}

TEST_CASE("sphere area", "[capacity]") {
  CHECK_THAT(sphere_area(Dimension(2)), WithinRel(2.0 * std::numbers::pi, 1e-15));
  CHECK_THAT(sphere_area(Dimension(3)), WithinRel(4.0 * std::numbers::pi, 1e-15));
  CHECK_THAT(sphere_area(Dimension(4)), WithinRel(2.0 * std::numbers::pi * std::numbers::pi, 1e-15));
}

TEST_CASE("eta_{K,2} is the Teichmueller inversion", "[capacity]") {
  const Dimension two(2);
  for (double k : {1.2, 2.0, 3.0})
    for (double t : {0.05, 1.0, 5.0}) {
      const double direct = tau_2_inverse(tau_n(two, t).lower / k);
      CHECK_THAT(eta_K2(k, t), WithinRel(direct, 1e-8));
    }
  CHECK_THAT(eta_K2(0.5, eta_K2(2.0, 3.0)), WithinRel(3.0, 1e-12));
}

TEST_CASE("gamma_2 near s = 1 keeps precision", "[capacity]") {
  // gamma_2(s) -> infinity as s -> 1, monotonically
  double prev = gamma_2(1.1);
  for (double s : {1.01, 1.0001, 1.0 + 1e-8}) {
    const double g = gamma_2(s);
    CHECK(g > prev);
    prev = g;
  }
  CHECK(std::isfinite(gamma_2(1.0 + 1e-12)));
}

TEST_CASE("n >= 3 results are bound-only enclosures", "[capacity]") {
  for (int n : {3, 4, 8}) {
    const Dimension dim(n);
    const Enclosure g = gamma_n(dim, 3.0);
    CHECK_FALSE(g.is_exact());
    CHECK(g.lower > 0.0);
    CHECK(g.lower <= g.upper);
    CHECK_FALSE(tau_n(dim, 2.0).is_exact());
    for (double k : {1.5, 4.0}) {
      const Enclosure down = phi_Kn(1.0 / k, dim, 0.5);
      const Enclosure up = phi_Kn(k, dim, 0.5);
      CHECK_FALSE(down.is_exact());
      CHECK(down.upper == 0.5);
      CHECK(down.lower > 0.0);
      CHECK(up.lower == 0.5);
      CHECK(up.upper <= 1.0);
      const Enclosure eta = eta_Kn(k, dim, 1.0);
      CHECK(eta.lower == 1.0);
      CHECK(std::isfinite(eta.upper));
      const Enclosure eta_inv = eta_Kn(1.0 / k, dim, 1.0);
      CHECK(eta_inv.upper == 1.0);
      CHECK(eta_inv.lower >= 0.0);
    }
  }
}

TEST_CASE("planar classical capacity bounds hold with lambda_2 = 4", "[capacity]") {
  for (double s : {1.5, 3.0, 100.0}) {
    const double g = gamma_2(s);
    CHECK(g < 2.0 * std::numbers::pi / std::log(s));
    CHECK(g > 2.0 * std::numbers::pi / std::log(4.0 * s));
  }
}

TEST_CASE("lambda-power lower bound uses the interval upper end", "[capacity]") {
  const Dimension three(3);
  const double k = 2.0;
  const double beta = std::sqrt(k);
  const double c = detail::lambda_power_lower(three, k, beta);
  CHECK_THAT(c, WithinRel(std::pow(2.0 * std::exp(2.0), 1.0 - beta), 1e-15));
  CHECK(c >= std::pow(2.0, 1.0 - beta) * std::pow(k, -beta));
  // the uncertified lambda_n = 4 value would exceed it
  CHECK(std::pow(4.0, 1.0 - beta) > c);
}

TEST_CASE("capacity domain errors", "[capacity]") {
  CHECK_THROWS_AS(gamma_2(1.0), domain_error);
  CHECK_THROWS_AS(tau_n(Dimension(2), 0.0), domain_error);
  CHECK_THROWS_AS(eta_K2(2.0, -1.0), domain_error);
  CHECK_THROWS_AS(phi_Kn(2.0, Dimension(3), 1.0), domain_error);
  CHECK_THROWS_AS(Dimension(1), domain_error);
  CHECK_THROWS_AS(tau_2_inverse(1e6), domain_error);
}
