#include "qe3/curvature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qe3 {

double SymTensor3::sup_norm() const {
  double s = 0.0;
  for (double x : v) s = std::max(s, std::fabs(x));
  return s;
}

double SymTensor3::offdiag_norm() const {
  return std::max({std::fabs(v[3]), std::fabs(v[4]), std::fabs(v[5])});
}

Mat3 SymTensor3::as_matrix() const {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = (*this)(i, j);
  return m;
}

SymTensor3& SymTensor3::operator+=(const SymTensor3& o) {
  for (int i = 0; i < 6; ++i) v[i] += o.v[i];
  return *this;
}
SymTensor3& SymTensor3::operator-=(const SymTensor3& o) {
  for (int i = 0; i < 6; ++i) v[i] -= o.v[i];
  return *this;
}
SymTensor3& SymTensor3::operator*=(double s) {
  for (double& x : v) x *= s;
  return *this;
}
SymTensor3 operator+(SymTensor3 x, const SymTensor3& y) { return x += y; }
SymTensor3 operator-(SymTensor3 x, const SymTensor3& y) { return x -= y; }
SymTensor3 operator*(double s, SymTensor3 x) { return x *= s; }

double ConnectionCoefficients::compatibility_residual() const {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        r = std::max(r, std::fabs(gamma[i][j][k] + gamma[i][k][j]));
  return r;
}

double ConnectionCoefficients::torsion_residual(
    const StructureConstants& sc) const {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        r = std::max(r, std::fabs(gamma[i][j][k] - gamma[j][i][k] -
                                  sc.pairing(i, j, k)));
  return r;
}

ConnectionCoefficients levi_civita(const StructureConstants& sc) {
  ConnectionCoefficients cc;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        cc.gamma[i][j][k] = 0.5 * (sc.pairing(i, j, k) - sc.pairing(j, k, i) +
                                   sc.pairing(k, i, j));
  return cc;
}

SymTensor3 ricci_tensor(const StructureConstants& sc) {
  const ConnectionCoefficients cc = levi_civita(sc);
  SymTensor3 ric;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) {
        // g(R(e_k, e_i) e_j, e_k)
        double term = 0.0;
        for (int l = 0; l < 3; ++l) {
          term += cc.gamma[i][j][l] * cc.gamma[k][l][k];
          term -= cc.gamma[k][j][l] * cc.gamma[i][l][k];
          term -= sc.c[l][k][i] * cc.gamma[l][j][k];
        }
        s += term;
      }
      ric.set(i, j, s);
    }
  return ric;
}

bool RicciSignature::same_multiset(const RicciSignature& o) const {
  int a[3] = {0, 0, 0}, b[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    ++a[static_cast<int>(s[i]) + 1];
    ++b[static_cast<int>(o.s[i]) + 1];
  }
  return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
}

std::string RicciSignature::str() const {
  std::string out = "(";
  for (int i = 0; i < 3; ++i) {
    out += (s[i] == Sign::Pos ? "+" : s[i] == Sign::Neg ? "-" : "0");
    if (i < 2) out += ",";
  }
  return out + ")";
}

RicciSignature ricci_signature(const SymTensor3& ric, double rel_tol,
                               double abs_floor, double frame_tol) {
  double scale = std::max({std::fabs(ric.v[0]), std::fabs(ric.v[1]),
                           std::fabs(ric.v[2])});
  if (ric.offdiag_norm() > std::max(frame_tol * std::max(scale, 1.0), frame_tol))
    throw std::invalid_argument(
        "ricci_signature: tensor is not diagonal in this frame (off-diagonal " +
        std::to_string(ric.offdiag_norm()) + ")");
  double thresh = std::max(rel_tol * scale, abs_floor);
  RicciSignature sig;
  for (int i = 0; i < 3; ++i) {
    double r = ric.v[i];
    sig.s[i] = r > thresh ? Sign::Pos : (r < -thresh ? Sign::Neg : Sign::Zero);
  }
  return sig;
}

Vec3 principal_ricci_closed_form(const Vec3& l) {
  double s = 0.5 * (l[0] + l[1] + l[2]);
  Vec3 mu{s - l[0], s - l[1], s - l[2]};
  return {2.0 * mu[1] * mu[2], 2.0 * mu[0] * mu[2], 2.0 * mu[0] * mu[1]};
}

// --- H2 chart fixture, g = dr^2 + e^{2r} dx^2 -------------------------------

double H2Chart::christoffel(int k, int i, int j, double r) {
  // Nonzero symbols: Gamma^x_{rx} = Gamma^x_{xr} = 1, Gamma^r_{xx} = -e^{2r}.
  if (k == 1 && ((i == 0 && j == 1) || (i == 1 && j == 0))) return 1.0;
  if (k == 0 && i == 1 && j == 1) return -std::exp(2.0 * r);
  return 0.0;
}

std::array<double, 2> H2Chart::covariant_derivative(int i, int j, double r) {
  return {christoffel(0, i, j, r), christoffel(1, i, j, r)};
}

double H2Chart::metric(int i, int j, double r) {
  if (i != j) return 0.0;
  return i == 0 ? 1.0 : std::exp(2.0 * r);
}

double H2Chart::ricci(int i, int j, double r) {
  if (i != j) return 0.0;
  return i == 0 ? -1.0 : -std::exp(2.0 * r);
}

double H2Chart::bakry_emery(int i, int j, double r, double m) {
  // X = -m d/dr; X^* = -m dr.
  // L_Xg(x,x) = -2m Gamma^x_{xr} g(x,x); the r-row of L_Xg vanishes.
  double lie = 0.0;
  if (i == 1 && j == 1) lie = -2.0 * m * christoffel(1, 1, 0, r) * metric(1, 1, r);
  double xstar_i = (i == 0) ? -m : 0.0;
  double xstar_j = (j == 0) ? -m : 0.0;
  return ricci(i, j, r) + 0.5 * lie - (1.0 / m) * xstar_i * xstar_j;
}

}  // namespace qe3
