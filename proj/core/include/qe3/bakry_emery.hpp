#pragma once

#include "qe3/algebra.hpp"
#include "qe3/curvature.hpp"

namespace qe3 {

/// (L_X g)(e_i,e_j) = sum_k a_k ( g([e_i,e_k],e_j) + g([e_j,e_k],e_i) )
/// for left-invariant X = sum a_k e_k.
SymTensor3 lie_derivative_metric(const StructureConstants& sc,
                                 const LeftInvariantField& X);

/// (X^* o X^*)(e_i,e_j) = a_i a_j.
SymTensor3 one_form_square(const LeftInvariantField& X);

struct BakryEmeryInput {
  StructureConstants sc;
  SymTensor3 ric;  // must equal ricci_tensor(sc); rechecked on assembly
  LeftInvariantField X;
  double m = 1.0;
};

/// ric + 1/2 L_Xg - (1/m) X^* o X^*.
/// Throws std::invalid_argument when m == 0 or when ric is inconsistent
/// with sc.
SymTensor3 bakry_emery_tensor(const BakryEmeryInput& input);

struct KillingCheck {
  bool killing = false;
  double residual = 0.0;  // sup norm of L_Xg (== sup norm of ad_X + ad_X^T)
};

KillingCheck is_killing(const StructureConstants& sc,
                        const LeftInvariantField& X, double tol = 1e-12);

/// tr(q . ad_X), q viewed as a matrix in the orthonormal frame.
double trace_q_ad(const SymTensor3& q, const StructureConstants& sc,
                  const LeftInvariantField& X);

struct KillingIdentityReport {
  double hypothesis_residual = 0.0;  // | 1/2 L_Xg - (1/m) X* o X* - q |
  double trace_q_ad = 0.0;
  double symmetrized_sq_term = 0.0;  // 1/4 tr((ad_X + ad_X^T)^2)
  double proj_term = 0.0;            // (|X|^2/m) tr(proj_X . ad_X)
  double identity_residual = 0.0;    // symmetrized_sq_term - proj_term
};

/// Evaluates the trace identity behind the Killing criterion:
/// tr(q.ad_X) = 1/4 tr((ad_X+ad_X^T)^2) - (|X|^2/m) tr(proj_X.ad_X),
/// for q = 1/2 L_Xg - (1/m) X* o X*.
/// Throws std::invalid_argument when the supplied q fails the hypothesis.
KillingIdentityReport killing_identity_check(const SymTensor3& q,
                                             const StructureConstants& sc,
                                             const LeftInvariantField& X,
                                             double m,
                                             double hypothesis_tol = 1e-9);

struct QEResidual {
  SymTensor3 tensor;  // ric_X^m - A g
  double A = 0.0;
  double sup_norm = 0.0;
};

/// Residual of ric_X^m = A g at the given data.
QEResidual qe_residual(const StructureConstants& sc, const SymTensor3& ric,
                       const LeftInvariantField& X, double m, double A);

}  // namespace qe3
