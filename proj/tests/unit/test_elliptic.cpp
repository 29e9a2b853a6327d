#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/ellint_2.hpp>

#include "qcdist/elliptic.hpp"

using namespace qcdist;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

// Reference values computed with mpmath at 40 digits.
TEST_CASE("complete integrals match high-precision references", "[elliptic]") {
  CHECK_THAT(complete_K(0.3), WithinRel(1.6080486199305128, 4e-16));
  CHECK_THAT(complete_K(std::numbers::sqrt2 / 2), WithinRel(1.8540746773013719, 4e-16));
  CHECK_THAT(complete_E(0.6), WithinRel(1.4180833944487242, 4e-16));
  CHECK_THAT(agm(1.0, std::sqrt(0.5)), WithinRel(0.84721308479397909, 4e-16));
}

TEST_CASE("endpoint values", "[elliptic]") {
  CHECK(complete_K(0.0) == std::numbers::pi / 2);
  CHECK_THAT(complete_E(0.0), WithinRel(std::numbers::pi / 2, 1e-15));
  CHECK(complete_E(1.0) == 1.0);
  CHECK(agm(2.0, 2.0) == 2.0);
}

TEST_CASE("AGM route agrees with boost and with quadrature", "[elliptic]") {
  for (int i = 1; i < 100; ++i) {
    const double r = i / 100.0;
    CHECK_THAT(complete_K(r), WithinRel(boost::math::ellint_1(r), 1e-14));
    CHECK_THAT(complete_E(r), WithinRel(boost::math::ellint_2(r), 1e-14));
    CHECK_THAT(complete_K(r), WithinRel(quadrature_K(r), 1e-12));
    CHECK_THAT(complete_E(r), WithinRel(quadrature_E(r), 1e-12));
  }
}

TEST_CASE("Legendre relation", "[elliptic]") {
  for (int i = 1; i < 50; ++i) {
    const double r = i / 50.0;
    const double rc = detail::complement(r);
    const double k = complete_K(r);
    const double kc = complete_K(rc);
    const double res = complete_E(r) * kc + complete_E(rc) * k - k * kc;
    CHECK_THAT(res, WithinAbs(std::numbers::pi / 2, 1e-13));
  }
}

TEST_CASE("K near 1 follows log(4/r')", "[elliptic]") {
  for (double rc : {1e-6, 1e-9, 1e-12, 1e-15}) {
    const double k = complete_K_from_complement(rc);
    // K = log(4/r') + O(r'^2 log r')
    CHECK_THAT(k, WithinAbs(std::log(4.0 / rc), 1e-10));
  }
  CHECK(complete_K(1.0 - 1e-16) > 19.0);
}

TEST_CASE("E near 1 tends to 1 from above", "[elliptic]") {
  double prev = complete_E(0.999);
  for (double r : {0.9999, 0.999999, 0.99999999, 1.0 - 1e-12}) {
    const double e = complete_E(r);
    CHECK(e < prev);
    CHECK(e > 1.0);
    prev = e;
  }
}

TEST_CASE("domain errors", "[elliptic]") {
  CHECK_THROWS_AS(complete_K(1.0), domain_error);
  CHECK_THROWS_AS(complete_K(-0.1), domain_error);
  CHECK_THROWS_AS(complete_E(1.5), domain_error);
  CHECK_THROWS_AS(agm(0.0, 1.0), domain_error);
  CHECK_THROWS_AS(UnitRadius(1.0), domain_error);
  CHECK_THROWS_AS(UnitRadius(0.0), domain_error);
  CHECK(UnitRadius(0.6).complement().value() == Catch::Approx(0.8));
}
