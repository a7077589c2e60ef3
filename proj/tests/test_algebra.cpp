#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "qe3/algebra.hpp"

using namespace qe3;
using qe3::testing::kAllGroups;
using qe3::testing::random_lambda;

TEST_CASE("group name round trip") {
  for (GroupTag t : kAllGroups) {
    auto back = group_from_string(to_string(t));
    REQUIRE(back.has_value());
    CHECK(*back == t);
  }
  CHECK(group_from_string("E(1,1)") == GroupTag::E11);
  CHECK(group_from_string("su(2)") == GroupTag::SU2);
  CHECK_FALSE(group_from_string("solv99").has_value());
}

TEST_CASE("sign classification hits the canonical patterns") {
  CHECK(classify_group_from_signs({2, 0, 0}).tag == GroupTag::Nil);
  CHECK(classify_group_from_signs({1, 3, -2}).tag == GroupTag::SL2R);
  CHECK(classify_group_from_signs({1, -1, 0}).tag == GroupTag::E11);
  CHECK(classify_group_from_signs({1, 2, 0}).tag == GroupTag::E2);
  CHECK(classify_group_from_signs({0, 0, 0}).tag == GroupTag::R3);
  CHECK(classify_group_from_signs({1, 2, 3}).tag == GroupTag::SU2);
}

TEST_CASE("non-canonical orderings are permuted into place") {
  // Nil with the nonzero eigenvalue on axis 2
  ClassifyResult cr = classify_group_from_signs({0, 5, 0});
  CHECK(cr.tag == GroupTag::Nil);
  CHECK(cr.perm[0] == 1);  // canonical axis 1 takes input axis 2

  MilnorFrame f = MilnorFrame::from_lambda({0, -1, 3});
  CHECK(f.tag == GroupTag::E11);
  CHECK(f.lambda_star[0] == 3.0);
  CHECK(f.lambda_star[1] == -1.0);
  CHECK(f.lambda_star[2] == 0.0);
}

TEST_CASE("off-table sign patterns are rejected") {
  CHECK_THROWS_AS(classify_group_from_signs({-1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(classify_group_from_signs({1, -1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(classify_group_from_signs({0, 0, -2}), std::invalid_argument);
  CHECK_THROWS_AS(MilnorFrame::make(GroupTag::Nil, {1, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("bracket table of the diagonal frame") {
  MilnorFrame f = MilnorFrame::make(GroupTag::SL2R, {2, 1, -1});
  StructureConstants sc = f.structure();
  // [e2,e3] = l1 e1, [e3,e1] = l2 e2, [e1,e2] = l3 e3
  CHECK(sc.bracket(1, 2)[0] == 2.0);
  CHECK(sc.bracket(2, 0)[1] == 1.0);
  CHECK(sc.bracket(0, 1)[2] == -1.0);
  CHECK(sc.antisymmetry_residual() == 0.0);
  CHECK(sc.jacobi_residual() == 0.0);
}

TEST_CASE("antisymmetry and Jacobi hold on random frames") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 1000; ++trial)
    for (GroupTag t : kAllGroups) {
      StructureConstants sc =
          MilnorFrame::make(t, random_lambda(t, rng)).structure();
      CHECK(sc.antisymmetry_residual() == 0.0);
      CHECK(sc.jacobi_residual() < 1e-12);
    }
}

TEST_CASE("h2xr brackets satisfy Jacobi with e3 central") {
  StructureConstants sc = h2xr_structure(1.7);
  CHECK(sc.jacobi_residual() < 1e-12);
  CHECK(sc.bracket(0, 1)[1] == 1.7);
  for (int i = 0; i < 3; ++i) {
    Vec3 b = sc.bracket(2, i);
    CHECK(b[0] == 0.0);
    CHECK(b[1] == 0.0);
    CHECK(b[2] == 0.0);
  }
}

TEST_CASE("ad matrix is trace-free on unimodular frames") {
  std::mt19937 rng(7);
  for (GroupTag t : kAllGroups) {
    StructureConstants sc =
        MilnorFrame::make(t, random_lambda(t, rng)).structure();
    LeftInvariantField X{{qe3::testing::draw(rng, -2, 2),
                          qe3::testing::draw(rng, -2, 2),
                          qe3::testing::draw(rng, -2, 2)}};
    CHECK(std::fabs(trace(ad_matrix(sc, X))) < 1e-12);
  }
  // h2xr is not unimodular: ad_{e1} has trace mu
  CHECK(trace(ad_matrix(h2xr_structure(2.0), LeftInvariantField::axis(0))) ==
        doctest::Approx(2.0));
}

TEST_CASE("ad matrix columns are the brackets") {
  StructureConstants sc = MilnorFrame::make(GroupTag::SU2, {1, 2, 3}).structure();
  LeftInvariantField X = LeftInvariantField::axis(0);  // X = e1
  Mat3 M = ad_matrix(sc, X);
  // [e1,e2] = 3 e3, [e1,e3] = -2 e2
  CHECK(M(2, 1) == 3.0);
  CHECK(M(1, 2) == -2.0);
  CHECK(M(0, 0) == 0.0);
}
