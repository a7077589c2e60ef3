#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "helpers.hpp"
#include "qe3/solver.hpp"

using namespace qe3;
using qe3::testing::draw;
using qe3::testing::kAllGroups;
using qe3::testing::random_lambda;

namespace {

SolverGeometry milnor(GroupTag t, const Vec3& l) {
  return SolverGeometry::milnor(MilnorFrame::make(t, l));
}

int count_nontrivial(const std::vector<QESolution>& sols) {
  int n = 0;
  for (const auto& s : sols)
    if (s.axis >= 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("killing reduction by sign pattern") {
  auto fams = killing_reduction(milnor(GroupTag::Nil, {2, 0, 0}));
  REQUIRE(fams.size() == 1);  // only the e1 axis (the other two lambdas are 0)
  CHECK(fams[0].axis == 0);
  CHECK(fams[0].constraint.empty());

  fams = killing_reduction(milnor(GroupTag::SL2R, {2, 2, -2}));
  REQUIRE(fams.size() == 1);  // e3 needs l1*=l2*, satisfied here
  CHECK(fams[0].axis == 2);
  CHECK(fams[0].constraint == "l1*=l2*");
  CHECK(fams[0].satisfied);

  fams = killing_reduction(milnor(GroupTag::SL2R, {2, 1, -1}));
  REQUIRE(fams.size() == 1);
  CHECK_FALSE(fams[0].satisfied);  // l1* != l2*

  CHECK(killing_reduction(milnor(GroupTag::E11, {1, -1, 0})).empty());

  fams = killing_reduction(milnor(GroupTag::R3, {0, 0, 0}));
  CHECK(fams.size() == 3);  // flat: every axis Killing

  fams = killing_reduction(SolverGeometry::h2xr(1.0));
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].axis == 2);
}

TEST_CASE("Nil witness frozen values") {
  auto sols = solve_fixed_metric(milnor(GroupTag::Nil, {2, 0, 0}), 1.0);
  REQUIRE(sols.size() == 2);
  for (const auto& s : sols) {
    CHECK(s.axis == 0);
    CHECK(std::fabs(std::fabs(s.X.a[0]) - 2.0) < 1e-14);
    CHECK(s.A == doctest::Approx(-2.0));
    CHECK(s.residual < 1e-12);
    CHECK(s.killing_residual < 1e-12);
    CHECK(s.exact);
    CHECK(s.provenance == "case-split");
  }
  CHECK(sols[0].X.a[0] == -sols[1].X.a[0]);
}

TEST_CASE("SL2R constrained-branch witness (2,2,-2), m=2") {
  auto sols = solve_fixed_metric(milnor(GroupTag::SL2R, {2, 2, -2}), 2.0);
  REQUIRE(sols.size() == 2);
  for (const auto& s : sols) {
    CHECK(s.axis == 2);
    CHECK(std::fabs(std::fabs(s.X.a[2]) - 4.0) < 1e-12);
    CHECK(s.A == doctest::Approx(-6.0));
    CHECK(s.constraint == "l1*=l2*");
    CHECK(s.residual < 1e-12);
    CHECK(s.killing_residual < 1e-12);
  }
}

TEST_CASE("SL2R flat-Ricci branch (2,1,-1) is empty for both m signs") {
  for (double m : {-1.0, 1.0, -2.5}) {
    auto sols = solve_fixed_metric(milnor(GroupTag::SL2R, {2, 1, -1}), m);
    CHECK(sols.empty());
    auto oracle = numeric_oracle(milnor(GroupTag::SL2R, {2, 1, -1}), m, 100, 1);
    CHECK(oracle.empty());
  }
}

TEST_CASE("SU2 families") {
  // equal lambdas: Einstein, trivial plus no nontrivial family (a^2 = 0)
  auto sols = solve_fixed_metric(milnor(GroupTag::SU2, {2, 2, 2}), 1.0);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].axis == -1);
  CHECK(sols[0].A == doctest::Approx(2.0));
  // l=(1,1,2): r=(0,0,2), axis-3 family with A = 0, a3^2 = m(r3-r1) = 2m
  sols = solve_fixed_metric(milnor(GroupTag::SU2, {1, 1, 2}), 2.0);
  REQUIRE(sols.size() == 2);
  for (const auto& s : sols) {
    CHECK(s.axis == 2);
    CHECK(s.A == doctest::Approx(0.0));
    CHECK(s.a_squared == doctest::Approx(4.0));
    CHECK(s.residual < 1e-12);
  }
  // m < 0 on the same frame: a3^2 < 0, no solutions
  CHECK(solve_fixed_metric(milnor(GroupTag::SU2, {1, 1, 2}), -2.0).empty());
}

TEST_CASE("R3 and E-groups") {
  auto sols = solve_fixed_metric(milnor(GroupTag::R3, {0, 0, 0}), -1.0);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].axis == -1);
  CHECK(sols[0].A == 0.0);
  CHECK(solve_fixed_metric(milnor(GroupTag::E11, {1, -1, 0}), 1.0).empty());
  CHECK(solve_fixed_metric(milnor(GroupTag::E2, {2, 1, 0}), 1.0).empty());
  // flat E(2): Einstein with A=0, trivial only
  sols = solve_fixed_metric(milnor(GroupTag::E2, {2, 2, 0}), 1.0);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].axis == -1);
  CHECK(sols[0].A == doctest::Approx(0.0));
}

TEST_CASE("h2xr witness rho=1, m=4") {
  auto sols = solve_fixed_metric(SolverGeometry::h2xr(1.0), 4.0);
  REQUIRE(sols.size() == 2);
  for (const auto& s : sols) {
    CHECK(s.axis == 2);
    CHECK(std::fabs(std::fabs(s.X.a[2]) - 2.0) < 1e-12);
    CHECK(s.A == doctest::Approx(-1.0));
    CHECK(s.residual < 1e-12);
    CHECK(s.killing_residual < 1e-12);
  }
  // m < 0: a^2 = m rho < 0, empty
  CHECK(solve_fixed_metric(SolverGeometry::h2xr(1.0), -4.0).empty());
}

TEST_CASE("m = 0 rejected") {
  CHECK_THROWS_AS(solve_fixed_metric(milnor(GroupTag::Nil, {2, 0, 0}), 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(numeric_oracle(milnor(GroupTag::Nil, {2, 0, 0}), 0.0),
                  std::invalid_argument);
}

TEST_CASE("exact arithmetic path flags") {
  auto sols = solve_fixed_metric(milnor(GroupTag::Nil, {2.5, 0, 0}), 0.5);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].exact);
  // irrational lambda falls back to floating point but still solves
  sols = solve_fixed_metric(milnor(GroupTag::Nil, {std::sqrt(2.0), 0, 0}), 1.0);
  REQUIRE(sols.size() == 2);
  CHECK_FALSE(sols[0].exact);
  CHECK(sols[0].residual < 1e-12);
}

TEST_CASE("every returned solution is Killing with axis structure") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    GroupTag t = kAllGroups[trial % 6];
    Vec3 l = random_lambda(t, rng);
    if (trial % 3 == 0 && (t == GroupTag::SL2R || t == GroupTag::SU2 ||
                           t == GroupTag::E2))
      l[1] = l[0];  // exercise the constrained families
    double m = (trial % 2 ? 1 : -1) * draw(rng, 0.3, 3.0);
    for (const auto& s : solve_fixed_metric(milnor(t, l), m)) {
      CHECK(s.killing_residual < 1e-12);
      CHECK(s.residual < 1e-10);
      int nonzero = 0;
      for (double a : s.X.a)
        if (a != 0.0) ++nonzero;
      CHECK(nonzero <= 1);  // Lemma-2.9 axis structure, exact
    }
  }
}

TEST_CASE("oracle agrees with the case-split") {
  std::mt19937 rng(53);
  const double ms[] = {-3, -1, -0.5, 0.5, 1, 2, 3};
  for (GroupTag t : kAllGroups) {
    for (int d = 0; d < 10; ++d) {
      Vec3 l = random_lambda(t, rng);
      if (d % 2 == 0 && (t == GroupTag::SL2R || t == GroupTag::SU2)) l[1] = l[0];
      SolverGeometry geo = milnor(t, l);
      double m = ms[d % 7];
      auto closed = solve_fixed_metric(geo, m);
      auto oracle = numeric_oracle(geo, m, 60, 100 + d);
      // compare nontrivial witness sets (the oracle sees X=0 only on
      // Einstein metrics, same as the trivial branch)
      REQUIRE(oracle.size() == closed.size());
      for (size_t i = 0; i < oracle.size(); ++i) {
        CHECK(oracle[i].axis == closed[i].axis);
        for (int k = 0; k < 3; ++k)
          CHECK(std::fabs(oracle[i].X.a[k] - closed[i].X.a[k]) < 1e-5);
        CHECK(std::fabs(oracle[i].A - closed[i].A) < 1e-5);
      }
    }
  }
}

TEST_CASE("scaling covariance") {
  std::mt19937 rng(59);
  for (double c : {0.5, 2.0, 10.0}) {
    for (GroupTag t : {GroupTag::Nil, GroupTag::SL2R, GroupTag::SU2}) {
      Vec3 l = random_lambda(t, rng);
      if (t != GroupTag::Nil) l[1] = l[0];
      double m = 1.5;
      auto base = solve_fixed_metric(milnor(t, l), m);
      Vec3 ls{l[0] / c, l[1] / c, l[2] / c};
      auto scaled = solve_fixed_metric(milnor(t, ls), m);
      REQUIRE(base.size() == scaled.size());
      for (size_t i = 0; i < base.size(); ++i) {
        CHECK(std::fabs(scaled[i].A - base[i].A / (c * c)) < 1e-10);
        for (int k = 0; k < 3; ++k)
          CHECK(std::fabs(scaled[i].X.a[k] - base[i].X.a[k] / c) < 1e-10);
      }
    }
  }
}

TEST_CASE("cell classification grid matches the solver analysis") {
  // (group, column) -> verdict, columns ordered (m>0:A>0,A=0,A<0; m<0:same)
  struct Row {
    GroupTag tag;
    Verdict v[6];
  };
  const Verdict N = Verdict::None, T = Verdict::TrivialOnly, E = Verdict::Exists;
  const Row rows[] = {
      {GroupTag::R3, {N, T, N, N, T, N}},
      {GroupTag::SU2, {E, E, E, E, N, N}},
      {GroupTag::SL2R, {N, N, E, N, N, N}},
      {GroupTag::Nil, {N, N, E, N, N, N}},
      {GroupTag::E11, {N, N, N, N, N, N}},
      {GroupTag::E2, {N, N, N, N, N, N}},
  };
  const int sm[6] = {1, 1, 1, -1, -1, -1};
  const int sa[6] = {1, 0, -1, 1, 0, -1};
  for (const Row& row : rows)
    for (int c = 0; c < 6; ++c) {
      CellVerdict cv = classify_cell(row.tag, sm[c], sa[c], 1, 3);
      CHECK_MESSAGE(cv.verdict == row.v[c],
                    std::string(to_string(row.tag))
                        << " cell " << c << ": got "
                        << std::string(to_string(cv.verdict)));
      if (cv.verdict == Verdict::None) CHECK_FALSE(cv.certificate.empty());
      if (cv.verdict == Verdict::Exists) {
        CHECK_FALSE(cv.witnesses.empty());
        for (const auto& w : cv.witnesses) CHECK(w.residual < 1e-10);
      }
    }
  // h2xr grid
  for (int c = 0; c < 6; ++c) {
    CellVerdict cv = classify_cell_h2xr(sm[c], sa[c], 1, 3);
    CHECK(cv.verdict == ((sm[c] > 0 && sa[c] < 0) ? E : N));
  }
}

TEST_CASE("SL2R empty-cell certificate records the flat-Ricci branch") {
  CellVerdict cv = classify_cell(GroupTag::SL2R, -1, 0, 1, 3);
  REQUIRE(cv.verdict == Verdict::None);
  bool mentions_branch = false;
  for (const auto& line : cv.certificate)
    if (line.find("principal-Ricci branch") != std::string::npos)
      mentions_branch = true;
  CHECK(mentions_branch);
}

TEST_CASE("classification is deterministic in the seed") {
  CellVerdict a = classify_cell(GroupTag::SU2, 1, -1, 9, 3);
  CellVerdict b = classify_cell(GroupTag::SU2, 1, -1, 9, 3);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (size_t i = 0; i < a.witnesses.size(); ++i)
    CHECK(a.witnesses[i].X.a == b.witnesses[i].X.a);
  CHECK(a.witness_m == b.witness_m);
}
