#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qe3/solver.hpp"

namespace qe3 {

/// Abstract Einstein factor: everything the product analysis consumes.
struct EinsteinFactor {
  int dim = 1;
  double rho = 0.0;  // Einstein constant, Ric = rho g
  bool periodic_geodesics = false;
  bool is_line = false;  // the factor is R (forces dim = 1, rho = 0)

  static EinsteinFactor line() { return {1, 0.0, false, true}; }
  static EinsteinFactor sphere(int dim, double rho) {
    return {dim, rho, true, false};
  }
  static EinsteinFactor generic(int dim, double rho) {
    return {dim, rho, false, false};
  }
};

/// Verdict for a product (or model space) with supporting data.
struct ProductVerdict {
  Verdict verdict = Verdict::None;
  double A = 0.0;          // Einstein-like constant when verdict != None
  double x_coeff = 0.0;    // |X| for the constant line field of an Exists
  bool tanh_branch = false;  // nonconstant bounded branch also present
  double block_residual = 0.0;  // blockwise sup |ric_X^m - A g|
  std::vector<std::string> reasoning;
};

/// Quasi-Einstein analysis of M x N for Einstein factors.  Fields tangent to
/// a line factor reduce to the scalar equation f' - f^2/m = A with A pinned
/// to the other factor's Einstein constant; with no line factor only X = 0
/// survives and the constants must match.  With compact_quotient set, the
/// nonconstant bounded branch is excluded and only constants are reported.
/// Throws std::invalid_argument when m == 0 or a factor is inconsistent.
ProductVerdict product_qe(const EinsteinFactor& M, const EinsteinFactor& N,
                          double m, bool compact_quotient = false);

/// Hyperbolic space form with Ric = -rho g (rho > 0).  Without a queried A:
/// the full verdict (TrivialOnly at A = -rho).  With A: TrivialOnly when
/// A = -rho, otherwise None with the eliminating sign argument recorded.
ProductVerdict space_form_verdict(double rho, double m,
                                  std::optional<double> A = std::nullopt);

/// Constant-coefficient circle field X = sqrt(-lambda m) d/dtheta solving
/// ric_X^m = lambda g on S^1.
struct CircleSolution {
  double coeff = 0.0;     // coefficient of d/dtheta
  double residual = 0.0;  // |(-coeff^2/m) - lambda|
};

/// Requires lambda m < 0, or lambda = 0 (trivial field).  Throws
/// std::domain_error when lambda m >= 0 with lambda != 0, and
/// std::invalid_argument when m == 0.
CircleSolution circle_solution(double lambda, double m);

/// Input to the compact constant-norm dichotomy.
struct CompactSpace {
  int dim = 1;
  double lambda = 0.0;  // constant in 1/2 L_Xg - (1/m) X* o X* = lambda g
  double m = 1.0;
  bool X_nonzero = false;
};

struct DichotomyVerdict {
  bool forces_zero = false;  // lambda = 0 (or lambda m >= 0): only X = 0
  bool is_circle = false;    // nonzero X with lambda m < 0 forces S^1
  bool none = false;         // dim > 1 with nonzero X: impossible
  double divergence_residual = 0.0;  // |div X - lambda (n-1)| for the witness
  std::vector<std::string> reasoning;
};

DichotomyVerdict compact_constant_norm_dichotomy(const CompactSpace& space);

/// Blockwise assembly of ric_X^m - A g on N^dim x R for the constant line
/// field with |X|^2 = x_sq; returns the sup over the two blocks.
double block_assembly_residual(double rho, int dim, double m, double A,
                               double x_sq);

}  // namespace qe3
