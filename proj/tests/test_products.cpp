#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "qe3/products.hpp"
#include "qe3/riccati.hpp"

using namespace qe3;

TEST_CASE("S2 x R exists exactly for m < 0 with A = rho") {
  EinsteinFactor s2 = EinsteinFactor::sphere(2, 1.0);
  EinsteinFactor line = EinsteinFactor::line();

  ProductVerdict v = product_qe(s2, line, -1.0);
  CHECK(v.verdict == Verdict::Exists);
  CHECK(v.A == doctest::Approx(1.0));
  CHECK(v.x_coeff == doctest::Approx(1.0));  // sqrt(-rho m) = 1
  CHECK(v.block_residual < 1e-12);
  CHECK(v.tanh_branch);  // simply-connected total space has both branches

  v = product_qe(s2, line, -1.0, /*compact_quotient=*/true);
  CHECK(v.verdict == Verdict::Exists);
  CHECK_FALSE(v.tanh_branch);

  v = product_qe(s2, line, 1.0);
  CHECK(v.verdict == Verdict::None);

  // factor order is immaterial
  v = product_qe(line, s2, -4.0);
  CHECK(v.verdict == Verdict::Exists);
  CHECK(v.x_coeff == doctest::Approx(2.0));
}

TEST_CASE("H2 x R as a product: exists for m > 0 with A = -rho") {
  ProductVerdict v = product_qe(EinsteinFactor::generic(2, -1.0),
                                EinsteinFactor::line(), 2.0);
  CHECK(v.verdict == Verdict::Exists);
  CHECK(v.A == doctest::Approx(-1.0));
  CHECK(v.x_coeff == doctest::Approx(std::sqrt(2.0)));
  CHECK(v.block_residual < 1e-12);
  CHECK(product_qe(EinsteinFactor::generic(2, -1.0), EinsteinFactor::line(),
                   -2.0).verdict == Verdict::None);
}

TEST_CASE("no line factor: trivial iff equal Einstein constants") {
  EinsteinFactor a = EinsteinFactor::generic(3, 4.0);
  EinsteinFactor b = EinsteinFactor::generic(3, 4.0);
  ProductVerdict v = product_qe(a, b, 1.0);
  CHECK(v.verdict == Verdict::TrivialOnly);
  CHECK(v.A == doctest::Approx(4.0));
  v = product_qe(a, EinsteinFactor::generic(2, 3.0), 1.0);
  CHECK(v.verdict == Verdict::None);
  // the only compact Exists configurations have a line factor, consistent
  // with the compact-Einstein dichotomy
  v = product_qe(EinsteinFactor::sphere(2, 1.0), EinsteinFactor::sphere(2, 1.0),
                 -1.0, true);
  CHECK(v.verdict == Verdict::TrivialOnly);
}

TEST_CASE("flat factors and validation") {
  ProductVerdict v = product_qe(EinsteinFactor::generic(2, 0.0),
                                EinsteinFactor::line(), 1.0);
  CHECK(v.verdict == Verdict::TrivialOnly);
  CHECK(v.A == 0.0);
  v = product_qe(EinsteinFactor::line(), EinsteinFactor::line(), 1.0);
  CHECK(v.verdict == Verdict::TrivialOnly);
  CHECK_THROWS_AS(product_qe(EinsteinFactor::line(), EinsteinFactor::line(),
                             0.0), std::invalid_argument);
  EinsteinFactor bad = EinsteinFactor::line();
  bad.rho = 1.0;  // a line factor must be Ricci-flat
  CHECK_THROWS_AS(product_qe(bad, EinsteinFactor::line(), 1.0),
                  std::invalid_argument);
}

TEST_CASE("hyperbolic space form verdicts") {
  ProductVerdict v = space_form_verdict(1.0, 2.0);
  CHECK(v.verdict == Verdict::TrivialOnly);
  CHECK(v.A == doctest::Approx(-1.0));
  v = space_form_verdict(1.0, 2.0, -1.0);
  CHECK(v.verdict == Verdict::TrivialOnly);
  // A = 0: none, blow-up reasoning ((A+rho)m > 0)
  v = space_form_verdict(1.0, 2.0, 0.0);
  CHECK(v.verdict == Verdict::None);
  // A = -2, m = -2: (A+rho)m = 2 > 0 blow-up
  v = space_form_verdict(1.0, -2.0, -2.0);
  CHECK(v.verdict == Verdict::None);
  CHECK_THROWS_AS(space_form_verdict(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(space_form_verdict(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("circle solutions") {
  CircleSolution s = circle_solution(1.0, -1.0);
  CHECK(s.coeff == doctest::Approx(1.0));
  CHECK(s.residual < 1e-14);
  s = circle_solution(4.0, -1.0);
  CHECK(s.coeff == doctest::Approx(2.0));
  s = circle_solution(0.0, 5.0);
  CHECK(s.coeff == 0.0);
  CHECK_THROWS_AS(circle_solution(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(circle_solution(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("compact constant-norm dichotomy") {
  DichotomyVerdict v =
      compact_constant_norm_dichotomy({1, -1.0, 1.0, true});
  CHECK(v.is_circle);
  CHECK(v.divergence_residual == 0.0);
  v = compact_constant_norm_dichotomy({3, -1.0, 1.0, true});
  CHECK(v.none);
  v = compact_constant_norm_dichotomy({3, 0.0, 1.0, false});
  CHECK(v.forces_zero);
  v = compact_constant_norm_dichotomy({2, 1.0, 1.0, true});
  CHECK(v.forces_zero);  // lambda m > 0 blow-up
}

TEST_CASE("transport verdict and product analysis agree on sphere products") {
  // S^j x R with rho > 0: product says Exists iff m < 0; the transport view
  // says global branches exist iff lambda m < 0 with lambda = A = rho.
  for (double m : {-2.0, -0.5, 0.5, 2.0}) {
    double rho = 1.3;
    ProductVerdict pv = product_qe(EinsteinFactor::sphere(2, rho),
                                   EinsteinFactor::line(), m);
    TransportVerdict tv = transport_verdict(rho, m, false, false);
    CHECK((pv.verdict == Verdict::Exists) ==
          (tv.constants_allowed || tv.tanh_branch_allowed));
  }
}
