#include "qe3/bakry_emery.hpp"

#include <cmath>
#include <stdexcept>

namespace qe3 {

SymTensor3 lie_derivative_metric(const StructureConstants& sc,
                                 const LeftInvariantField& X) {
  SymTensor3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k)
        s += X.a[k] * (sc.pairing(i, k, j) + sc.pairing(j, k, i));
      t.set(i, j, s);
    }
  return t;
}

SymTensor3 one_form_square(const LeftInvariantField& X) {
  SymTensor3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) t.set(i, j, X.a[i] * X.a[j]);
  return t;
}

SymTensor3 bakry_emery_tensor(const BakryEmeryInput& input) {
  if (input.m == 0.0)
    throw std::invalid_argument("bakry_emery_tensor: m must be nonzero");
  if ((input.ric - ricci_tensor(input.sc)).sup_norm() > 1e-9)
    throw std::invalid_argument(
        "bakry_emery_tensor: ric is not the Ricci tensor of sc");
  return input.ric + 0.5 * lie_derivative_metric(input.sc, input.X) -
         (1.0 / input.m) * one_form_square(input.X);
}

KillingCheck is_killing(const StructureConstants& sc,
                        const LeftInvariantField& X, double tol) {
  double r = lie_derivative_metric(sc, X).sup_norm();
  return {r < tol, r};
}

double trace_q_ad(const SymTensor3& q, const StructureConstants& sc,
                  const LeftInvariantField& X) {
  return trace(matmul(q.as_matrix(), ad_matrix(sc, X)));
}

KillingIdentityReport killing_identity_check(const SymTensor3& q,
                                             const StructureConstants& sc,
                                             const LeftInvariantField& X,
                                             double m, double hypothesis_tol) {
  if (m == 0.0)
    throw std::invalid_argument("killing_identity_check: m must be nonzero");
  KillingIdentityReport rep;
  SymTensor3 lhs =
      0.5 * lie_derivative_metric(sc, X) - (1.0 / m) * one_form_square(X);
  rep.hypothesis_residual = (lhs - q).sup_norm();
  if (rep.hypothesis_residual > hypothesis_tol)
    throw std::invalid_argument(
        "killing_identity_check: q does not equal 1/2 L_Xg - (1/m) X*oX* "
        "(residual " +
        std::to_string(rep.hypothesis_residual) + ")");

  const Mat3 ad = ad_matrix(sc, X);
  rep.trace_q_ad = trace(matmul(q.as_matrix(), ad));

  const Mat3 sym = ad + transpose(ad);
  rep.symmetrized_sq_term = 0.25 * trace(matmul(sym, sym));

  double n2 = X.norm2();
  if (n2 > 0.0) {
    // proj_X as a matrix: P_ij = a_i a_j / |X|^2
    Mat3 proj;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) proj(i, j) = X.a[i] * X.a[j] / n2;
    rep.proj_term = (n2 / m) * trace(matmul(proj, ad));
  }
  rep.identity_residual = rep.symmetrized_sq_term - rep.proj_term;
  return rep;
}

QEResidual qe_residual(const StructureConstants& sc, const SymTensor3& ric,
                       const LeftInvariantField& X, double m, double A) {
  QEResidual r;
  r.A = A;
  r.tensor = bakry_emery_tensor({sc, ric, X, m}) - SymTensor3::diag(A, A, A);
  r.sup_norm = r.tensor.sup_norm();
  return r;
}

}  // namespace qe3
