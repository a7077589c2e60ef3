#include "qe3/products.hpp"

#include <cmath>
#include <stdexcept>

namespace qe3 {

namespace {

void validate_factor(const EinsteinFactor& f, const char* which) {
  if (f.dim < 1)
    throw std::invalid_argument(std::string(which) + ": dim must be >= 1");
  if (f.is_line && (f.dim != 1 || f.rho != 0.0))
    throw std::invalid_argument(std::string(which) +
                                ": a line factor has dim 1 and rho 0");
}

}  // namespace

double block_assembly_residual(double rho, int dim, double m, double A,
                               double x_sq) {
  (void)dim;  // every N-block entry carries the same scalar equation
  // N block: rho g_N + 0 - 0 = A g_N;  line block: 0 + 0 - x_sq/m = A.
  double n_block = std::fabs(rho - A);
  double line_block = std::fabs(-x_sq / m - A);
  return std::max(n_block, line_block);
}

ProductVerdict product_qe(const EinsteinFactor& M, const EinsteinFactor& N,
                          double m, bool compact_quotient) {
  if (m == 0.0) throw std::invalid_argument("product_qe: m == 0");
  validate_factor(M, "product_qe: M");
  validate_factor(N, "product_qe: N");

  ProductVerdict v;
  const bool m_line = M.is_line, n_line = N.is_line;

  if (!m_line && !n_line) {
    // Neither factor is R: the field vanishes on both factors, so the product
    // is quasi-Einstein only as an Einstein manifold.
    v.reasoning.push_back(
        "neither factor is a line: X restricted to each factor vanishes, "
        "leaving Ric = A g blockwise");
    if (M.rho == N.rho) {
      v.verdict = Verdict::TrivialOnly;
      v.A = M.rho;
      v.reasoning.push_back("equal Einstein constants: X = 0 with A = rho");
    } else {
      v.verdict = Verdict::None;
      v.reasoning.push_back(
          "unequal Einstein constants: Ric = A g fails on one block");
    }
    return v;
  }
  if (m_line && n_line) {
    // R x R is flat R^2; same analysis as the flat case.
    v.verdict = Verdict::TrivialOnly;
    v.A = 0.0;
    v.reasoning.push_back("both factors flat lines: Ric = 0, only X = 0, A = 0");
    return v;
  }

  const EinsteinFactor& other = m_line ? N : M;
  const double rho = other.rho;
  v.A = rho;  // the Einstein block pins A
  v.reasoning.push_back(
      "line factor present: X = f(t) d/dt with the Einstein block forcing "
      "A = rho; f satisfies f' - f^2/m = A");

  if (rho == 0.0) {
    v.verdict = Verdict::TrivialOnly;
    v.reasoning.push_back("A = 0: the only global scalar solution is f == 0");
    return v;
  }
  if (rho * m > 0.0) {
    v.verdict = Verdict::None;
    v.reasoning.push_back(
        "A m > 0: every scalar branch escapes in finite time; no global f");
    return v;
  }
  // rho m < 0: constant branches f = +-sqrt(-rho m) always; the bounded
  // nonconstant branch only on the simply-connected total space.
  v.verdict = Verdict::Exists;
  v.x_coeff = std::sqrt(-rho * m);
  v.tanh_branch = !compact_quotient;
  v.reasoning.push_back(
      "A m < 0: constant solutions f = +-sqrt(-A m) give Killing line fields");
  if (compact_quotient)
    v.reasoning.push_back(
        "compact quotient: the nonconstant bounded branch is excluded, "
        "constants only");
  else
    v.reasoning.push_back(
        "simply-connected total space: the bounded tanh branch is also global");
  v.block_residual =
      block_assembly_residual(rho, other.dim, m, v.A, v.x_coeff * v.x_coeff);
  return v;
}

ProductVerdict space_form_verdict(double rho, double m,
                                  std::optional<double> A) {
  if (m == 0.0) throw std::invalid_argument("space_form_verdict: m == 0");
  if (rho <= 0.0)
    throw std::invalid_argument("space_form_verdict: rho must be > 0");
  ProductVerdict v;
  if (!A || *A == -rho) {
    v.verdict = Verdict::TrivialOnly;
    v.A = -rho;
    v.reasoning.push_back(
        "hyperbolic space form Ric = -rho g: solutions require A + rho = 0 "
        "and X = 0");
    return v;
  }
  v.verdict = Verdict::None;
  v.A = *A;
  if ((*A + rho) * m > 0.0)
    v.reasoning.push_back(
        "(A + rho) m > 0: the transport function blows up in finite time "
        "along every geodesic");
  else
    v.reasoning.push_back(
        "(A + rho) m < 0: a nonzero constant-norm solution would force the "
        "space to be a circle, contradicting dim 3");
  return v;
}

CircleSolution circle_solution(double lambda, double m) {
  if (m == 0.0) throw std::invalid_argument("circle_solution: m == 0");
  if (lambda == 0.0) return {0.0, 0.0};
  if (lambda * m >= 0.0)
    throw std::domain_error(
        "circle_solution: requires lambda m < 0 (or lambda = 0)");
  CircleSolution s;
  s.coeff = std::sqrt(-lambda * m);
  // On S^1: Ric = 0, the constant field is Killing, so the full equation is
  // -(coeff^2)/m = lambda.
  s.residual = std::fabs(-s.coeff * s.coeff / m - lambda);
  return s;
}

DichotomyVerdict compact_constant_norm_dichotomy(const CompactSpace& space) {
  if (space.m == 0.0)
    throw std::invalid_argument("compact_constant_norm_dichotomy: m == 0");
  if (space.dim < 1)
    throw std::invalid_argument("compact_constant_norm_dichotomy: dim < 1");
  DichotomyVerdict v;
  if (space.lambda == 0.0 || !space.X_nonzero) {
    v.forces_zero = true;
    v.reasoning.push_back("lambda = 0 or X = 0: the transport function "
                          "vanishes and X = 0 is the only member");
    return v;
  }
  if (space.lambda * space.m > 0.0) {
    v.forces_zero = true;
    v.reasoning.push_back(
        "lambda m > 0 on a compact space: blow-up excludes nonzero X");
    return v;
  }
  // lambda m < 0 with X != 0: |X|^2 is the constant -lambda m and the space
  // is one-dimensional.
  if (space.dim == 1) {
    v.is_circle = true;
    // div X = lambda (n - 1) must vanish for the circle witness (n = 1).
    v.divergence_residual = std::fabs(space.lambda * (space.dim - 1));
    v.reasoning.push_back(
        "nonzero X with lambda m < 0 on a compact space forces |X|^2 = "
        "-lambda m and dim 1: the space is a circle");
    return v;
  }
  v.none = true;
  v.reasoning.push_back(
      "nonzero X with lambda m < 0 needs a one-dimensional space; dim = " +
      std::to_string(space.dim) + " is impossible");
  return v;
}

}  // namespace qe3
