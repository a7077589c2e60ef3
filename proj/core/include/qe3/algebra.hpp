#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "qe3/linalg.hpp"

namespace qe3 {

/// Unimodular 3-dimensional Lie group tags, in the diagonal bracket
/// presentation.  H^2 x R is non-unimodular and handled separately
/// (see h2xr_structure).
enum class GroupTag { Nil, SL2R, E11, E2, R3, SU2 };

std::string_view to_string(GroupTag tag);
std::optional<GroupTag> group_from_string(std::string_view name);

/// Bracket coefficients of a 3-dimensional Lie algebra in an orthonormal
/// frame {e1,e2,e3}: [e_i, e_j] = sum_k c[k][i][j] e_k.
struct StructureConstants {
  double c[3][3][3]{};

  /// g([e_a, e_b], e_d)
  double pairing(int a, int b, int d) const { return c[d][a][b]; }

  Vec3 bracket(int i, int j) const {
    return {c[0][i][j], c[1][i][j], c[2][i][j]};
  }

  /// max |c[k][i][j] + c[k][j][i]|
  double antisymmetry_residual() const;

  /// Componentwise sup-norm of the cyclic Jacobi sum
  /// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
  double jacobi_residual() const;
};

struct ClassifyResult {
  GroupTag tag;
  /// canonical[i] = input[perm[i]]
  std::array<int, 3> perm;
};

/// Matches the sign multiset of lambda_star against the bracket-sign table
/// for the six unimodular geometries, returning the tag and the axis
/// permutation that puts the triple in canonical order.
/// Throws std::invalid_argument for sign patterns outside the table.
ClassifyResult classify_group_from_signs(const Vec3& lambda_star,
                                         double zero_tol = 1e-12);

/// Signed diagonal bracket eigenvalues (lambda1*, lambda2*, lambda3*) in
/// canonical order, plus the group tag they determine.
struct MilnorFrame {
  Vec3 lambda_star{};
  GroupTag tag = GroupTag::R3;
  /// permutation applied on construction: lambda_star[i] = input[perm[i]]
  std::array<int, 3> perm{0, 1, 2};

  /// Classify and canonicalize an arbitrary signed triple.
  static MilnorFrame from_lambda(const Vec3& lambda_star,
                                 double zero_tol = 1e-12);

  /// Canonicalize and check the triple against an expected tag.
  /// Throws std::invalid_argument on a sign-pattern mismatch.
  static MilnorFrame make(GroupTag tag, const Vec3& lambda_star,
                          double zero_tol = 1e-12);

  /// [e2,e3] = l1* e1, [e3,e1] = l2* e2, [e1,e2] = l3* e3.
  StructureConstants structure() const;
};

StructureConstants milnor_to_structure(const MilnorFrame& frame);

/// Solvable x abelian brackets for H^2 x R: [e1,e2] = mu e2, e3 central.
/// The span(e1,e2) block has constant sectional curvature -mu^2, so the
/// Ricci tensor is diag(-rho, -rho, 0) with rho = mu^2.
StructureConstants h2xr_structure(double mu = 1.0);

/// X = a1 e1 + a2 e2 + a3 e3, constant coefficients.
struct LeftInvariantField {
  Vec3 a{0.0, 0.0, 0.0};

  double norm2() const { return qe3::norm2(a); }
  static LeftInvariantField axis(int i, double coeff = 1.0) {
    LeftInvariantField x;
    x.a[i] = coeff;
    return x;
  }
};

using AdMatrix = Mat3;

/// M[j][i] = coefficient of e_j in [X, e_i].
AdMatrix ad_matrix(const StructureConstants& sc, const LeftInvariantField& X);

}  // namespace qe3
