#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "qcdist/mn_lemma.hpp"

using namespace qcdist;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("closed-form starting point", "[mn]") {
  const MNParams p(3.0, 2.0);
  CHECK_THAT(compute_M(p), WithinRel(1.3253802517526510, 1e-15));
  CHECK(std::abs(mn_quadratic_residual(p, compute_M(p))) < 1e-12);
  CHECK_THAT(p.upper_cap(), WithinRel(59.112448791445202, 1e-15));
  CHECK_THAT(p.upper_cap(), WithinRel(8.0 * std::exp(2.0), 1e-15));
}

TEST_CASE("iteration terms match references", "[mn]") {
  const IterationTrace tr = iterate_a(MNParams(3.0, 2.0));
  REQUIRE(tr.converged);
  REQUIRE(tr.sequence.size() > 36);
  CHECK_THAT(*tr.term(1), WithinRel(1.4533709064484412, 1e-13));
  CHECK_THAT(*tr.term(5), WithinRel(3.0100258459348170, 1e-13));
  CHECK_THAT(*tr.term(10), WithinRel(7.7142455889377172, 1e-13));
  CHECK_THAT(*tr.term(35), WithinRel(16.997608202221918, 1e-12));
  CHECK_THAT(*tr.term(36), WithinRel(17.023509131152330, 1e-12));
  CHECK(*tr.term(35) < 17.0);
  CHECK(*tr.term(36) > 17.0);
  CHECK_THAT(tr.limit_estimate, WithinRel(17.155792514167590, 1e-11));
  CHECK_FALSE(tr.term(100000));
}

TEST_CASE("p and q touch at x = 1", "[mn]") {
  const MNParams p(3.0, 2.0);
  CHECK_THAT(p_func(p, 1.0), WithinAbs(0.0, 1e-15));
  CHECK(q_func(p, 1.0) == 0.0);
  CHECK_THAT(p_derivative(p, 1.0), WithinRel(2.0 * (3.0 * std::numbers::ln2 + 2.0), 1e-15));
}

TEST_CASE("p_inverse round trip, including the overflow branch", "[mn]") {
  const MNParams p(3.0, 2.0);
  for (double x : {1.001, 2.0, 17.0, 50.0, 400.0}) CHECK_THAT(p_inverse(p, p_func(p, x)), WithinRel(x, 1e-13));
  CHECK(p_inverse(p, 0.0) == 1.0);
}

TEST_CASE("lemma checks pass for several parameter pairs", "[mn]") {
  for (auto [m, n] : {std::pair{3.0, 2.0}, std::pair{1.0, 1.0}, std::pair{5.0, 4.0}, std::pair{2.0, 7.0}}) {
    for (const auto& c : mn_lemma_checks(MNParams(m, n), 2000)) {
      INFO(c.check_id << " m=" << m << " n=" << n << " margin=" << c.margin);
      CHECK_FALSE(c.failed());
    }
  }
}

TEST_CASE("lemma domain errors", "[mn]") {
  CHECK_THROWS_AS(MNParams(0.5, 1.0), domain_error);
  CHECK_THROWS_AS(p_func(MNParams(3, 2), 0.9), domain_error);
  CHECK_THROWS_AS(p_inverse(MNParams(3, 2), -1.0), domain_error);
  CHECK_THROWS_AS(iterate_a(MNParams(3, 2), 0), domain_error);
}
