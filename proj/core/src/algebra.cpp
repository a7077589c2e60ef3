#include "qe3/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qe3 {

std::string_view to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::Nil: return "Nil";
    case GroupTag::SL2R: return "SL2R";
    case GroupTag::E11: return "E11";
    case GroupTag::E2: return "E2";
    case GroupTag::R3: return "R3";
    case GroupTag::SU2: return "SU2";
  }
  return "?";
}

std::optional<GroupTag> group_from_string(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (s == "nil") return GroupTag::Nil;
  if (s == "sl2r" || s == "sl2") return GroupTag::SL2R;
  if (s == "e11" || s == "e(1,1)") return GroupTag::E11;
  if (s == "e2" || s == "e(2)") return GroupTag::E2;
  if (s == "r3") return GroupTag::R3;
  if (s == "su2" || s == "su(2)") return GroupTag::SU2;
  return std::nullopt;
}

double StructureConstants::antisymmetry_residual() const {
  double r = 0.0;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r = std::max(r, std::fabs(c[k][i][j] + c[k][j][i]));
  return r;
}

double StructureConstants::jacobi_residual() const {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        for (int m = 0; m < 3; ++m) {
          double s = 0.0;
          // [[e_i,e_j],e_k] component m, cyclic over (i,j,k)
          for (int l = 0; l < 3; ++l) {
            s += c[l][i][j] * c[m][l][k];
            s += c[l][j][k] * c[m][l][i];
            s += c[l][k][i] * c[m][l][j];
          }
          r = std::max(r, std::fabs(s));
        }
      }
  return r;
}

namespace {

int sign_of(double x, double tol) {
  if (x > tol) return 1;
  if (x < -tol) return -1;
  return 0;
}

// Canonical Table-1 sign patterns, indexed per axis.
constexpr std::array<int, 3> kPattern[] = {
    {1, 0, 0},   // Nil
    {1, 1, -1},  // SL2R
    {1, -1, 0},  // E11
    {1, 1, 0},   // E2
    {0, 0, 0},   // R3
    {1, 1, 1},   // SU2
};

constexpr GroupTag kTags[] = {GroupTag::Nil, GroupTag::SL2R, GroupTag::E11,
                              GroupTag::E2,  GroupTag::R3,   GroupTag::SU2};

}  // namespace

ClassifyResult classify_group_from_signs(const Vec3& lambda_star,
                                         double zero_tol) {
  std::array<int, 3> signs{sign_of(lambda_star[0], zero_tol),
                           sign_of(lambda_star[1], zero_tol),
                           sign_of(lambda_star[2], zero_tol)};
  for (int t = 0; t < 6; ++t) {
    const auto& pat = kPattern[t];
    // Stable search over permutations: prefer identity, then lexicographic,
    // so equal-sign axes keep their input order.
    static constexpr std::array<int, 3> kPerms[] = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : kPerms) {
      if (signs[p[0]] == pat[0] && signs[p[1]] == pat[1] &&
          signs[p[2]] == pat[2]) {
        return {kTags[t], p};
      }
    }
  }
  std::ostringstream os;
  os << "sign pattern (" << lambda_star[0] << ", " << lambda_star[1] << ", "
     << lambda_star[2] << ") is not a unimodular-3D bracket pattern";
  throw std::invalid_argument(os.str());
}

MilnorFrame MilnorFrame::from_lambda(const Vec3& lambda_star, double zero_tol) {
  ClassifyResult cr = classify_group_from_signs(lambda_star, zero_tol);
  MilnorFrame f;
  f.tag = cr.tag;
  f.perm = cr.perm;
  for (int i = 0; i < 3; ++i) {
    double v = lambda_star[cr.perm[i]];
    f.lambda_star[i] = (std::fabs(v) <= zero_tol) ? 0.0 : v;
  }
  return f;
}

MilnorFrame MilnorFrame::make(GroupTag tag, const Vec3& lambda_star,
                              double zero_tol) {
  MilnorFrame f = from_lambda(lambda_star, zero_tol);
  if (f.tag != tag) {
    std::ostringstream os;
    os << "lambda* sign pattern classifies as " << to_string(f.tag)
       << ", not " << to_string(tag);
    throw std::invalid_argument(os.str());
  }
  return f;
}

StructureConstants MilnorFrame::structure() const {
  return milnor_to_structure(*this);
}

StructureConstants milnor_to_structure(const MilnorFrame& frame) {
  StructureConstants sc;
  const Vec3& l = frame.lambda_star;
  // [e2,e3] = l1 e1, [e3,e1] = l2 e2, [e1,e2] = l3 e3
  sc.c[0][1][2] = l[0];
  sc.c[0][2][1] = -l[0];
  sc.c[1][2][0] = l[1];
  sc.c[1][0][2] = -l[1];
  sc.c[2][0][1] = l[2];
  sc.c[2][1][0] = -l[2];
  return sc;
}

StructureConstants h2xr_structure(double mu) {
  StructureConstants sc;
  sc.c[1][0][1] = mu;
  sc.c[1][1][0] = -mu;
  return sc;
}

AdMatrix ad_matrix(const StructureConstants& sc, const LeftInvariantField& X) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += X.a[k] * sc.c[j][k][i];
      m(j, i) = s;
    }
  return m;
}

}  // namespace qe3
