#pragma once

#include <array>

#include "qe3/algebra.hpp"
#include "qe3/linalg.hpp"

namespace qe3 {

/// Symmetric bilinear form in frame coordinates, stored as
/// [t11, t22, t33, t12, t13, t23] so symmetry is exact.
struct SymTensor3 {
  std::array<double, 6> v{};

  static SymTensor3 diag(double t11, double t22, double t33) {
    SymTensor3 t;
    t.v = {t11, t22, t33, 0.0, 0.0, 0.0};
    return t;
  }
  static SymTensor3 identity() { return diag(1.0, 1.0, 1.0); }

  double operator()(int i, int j) const {
    if (i == j) return v[i];
    int lo = i < j ? i : j, hi = i < j ? j : i;
    return v[lo == 0 ? (hi == 1 ? 3 : 4) : 5];
  }
  void set(int i, int j, double x) {
    if (i == j) {
      v[i] = x;
      return;
    }
    int lo = i < j ? i : j, hi = i < j ? j : i;
    v[lo == 0 ? (hi == 1 ? 3 : 4) : 5] = x;
  }

  double sup_norm() const;
  double offdiag_norm() const;
  Mat3 as_matrix() const;

  SymTensor3& operator+=(const SymTensor3& o);
  SymTensor3& operator-=(const SymTensor3& o);
  SymTensor3& operator*=(double s);
};

SymTensor3 operator+(SymTensor3 x, const SymTensor3& y);
SymTensor3 operator-(SymTensor3 x, const SymTensor3& y);
SymTensor3 operator*(double s, SymTensor3 x);

/// gamma[i][j][k] = g(nabla_{e_i} e_j, e_k) in the orthonormal frame.
struct ConnectionCoefficients {
  double gamma[3][3][3]{};

  /// max |gamma[i][j][k] + gamma[i][k][j]|  (metric compatibility)
  double compatibility_residual() const;
  /// max over components of gamma[i][j][.] - gamma[j][i][.] - [e_i,e_j]
  double torsion_residual(const StructureConstants& sc) const;
};

/// Koszul formula for a left-invariant orthonormal frame:
/// gamma[i][j][k] = 1/2 (c(i,j,k) - c(j,k,i) + c(k,i,j)),
/// c(a,b,d) = g([e_a,e_b], e_d).
ConnectionCoefficients levi_civita(const StructureConstants& sc);

/// Ric(e_i,e_j) = sum_k g(R(e_k,e_i)e_j, e_k) with
/// R(U,V)W = nabla_U nabla_V W - nabla_V nabla_U W - nabla_{[U,V]} W.
SymTensor3 ricci_tensor(const StructureConstants& sc);

enum class Sign : int { Neg = -1, Zero = 0, Pos = 1 };

/// Ordered sign triple of the principal Ricci curvatures.
struct RicciSignature {
  std::array<Sign, 3> s{};

  bool operator==(const RicciSignature&) const = default;
  /// Multiset comparison, ignoring axis order.
  bool same_multiset(const RicciSignature& o) const;
  std::string str() const;
};

/// Classifies each diagonal entry against relative threshold
/// rel_tol * max|r(e_i)| with an absolute floor.
/// Throws std::invalid_argument when ric has off-diagonal entries above
/// the frame tolerance.
RicciSignature ricci_signature(const SymTensor3& ric, double rel_tol = 1e-10,
                               double abs_floor = 1e-14,
                               double frame_tol = 1e-9);

/// Closed-form principal Ricci values r(e_i) = 2 mu_j mu_k with
/// mu_i = (l1*+l2*+l3*)/2 - l_i*.  Cross-check for ricci_tensor on
/// diagonal-bracket frames.
Vec3 principal_ricci_closed_form(const Vec3& lambda_star);

/// Coordinate fixture for the hyperbolic plane with g = dr^2 + e^{2r} dx^2.
/// Index 0 = d/dr, index 1 = d/dx; everything depends on r only.
struct H2Chart {
  /// Christoffel symbols Gamma^k_{ij} at radial coordinate r.
  static double christoffel(int k, int i, int j, double r);
  /// nabla_{d_i} d_j at r, expressed in the coordinate basis.
  static std::array<double, 2> covariant_derivative(int i, int j, double r);
  /// Ricci tensor entries ric(d_i, d_j) at r.
  static double ricci(int i, int j, double r);
  /// metric entries g(d_i, d_j) at r.
  static double metric(int i, int j, double r);
  /// ric_X^m(d_i, d_j) at r for the radial field X = -m d/dr.
  static double bakry_emery(int i, int j, double r, double m);
};

}  // namespace qe3
