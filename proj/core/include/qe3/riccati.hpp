#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qe3 {

/// Scalar equation f'(t) - f(t)^2/m = lambda on all of R.
struct RiccatiProblem {
  double lambda = 0.0;
  double m = 1.0;
  std::optional<double> f0;  // initial value at t = 0
};

enum class RiccatiKind {
  IdenticallyZero,
  ConstantPlus,   // f = +sqrt(-lambda m)
  ConstantMinus,  // f = -sqrt(-lambda m)
  TanhBranch,     // f = -sqrt(-lambda m) tanh( sqrt(-lambda m)/m (t+C) )
  NoGlobalSolution,
};

std::string_view to_string(RiccatiKind kind);

struct RiccatiClassification {
  RiccatiKind kind = RiccatiKind::IdenticallyZero;
  double lambda = 0.0;
  double m = 1.0;
  double C = 0.0;  // phase of the tanh branch, meaningful for TanhBranch only

  /// Closed-form value; throws std::logic_error for NoGlobalSolution.
  double evaluate(double t) const;
  /// |f'(t) - f(t)^2/m - lambda| via the symbolic derivative.
  double ode_residual(double t) const;
};

/// Global-solution trichotomy:
///   lambda = 0            -> IdenticallyZero (the only global branch)
///   lambda m > 0          -> NoGlobalSolution (tan-type blow-up)
///   lambda m < 0          -> constants +-sqrt(-lambda m) and a bounded
///                            tanh branch through any |f0| < sqrt(-lambda m)
/// With f0 supplied, returns the branch through (0, f0), or
/// NoGlobalSolution when |f0| exceeds the constant bound (blow-up).
/// Throws std::invalid_argument when m == 0.
RiccatiClassification classify_global(const RiccatiProblem& problem);

double evaluate_closed_form(const RiccatiClassification& cls, double t);

struct Trajectory {
  std::vector<double> t;
  std::vector<double> f;
  bool blew_up = false;
  double blowup_time = 0.0;  // first t with |f| > threshold, if blew_up
};

/// Fixed-step RK4 on f' = f^2/m + lambda from t_begin to t_end, starting at
/// problem.f0 (required).  Blow-up is flagged when |f| exceeds 1e8 and is
/// confirmed by a half-step Richardson rerun.
Trajectory rk4_oracle(const RiccatiProblem& problem, double t_begin,
                      double t_end, double step);

/// Allowed values of the geodesic transport function phi for a unit-speed
/// geodesic, after the periodicity/zero eliminations.
struct TransportVerdict {
  bool identically_zero = false;     // the only member is phi == 0
  bool constants_allowed = false;    // phi == +-sqrt(-lambda m)
  bool tanh_branch_allowed = false;  // bounded nonconstant branch
  bool empty() const {
    return !identically_zero && !constants_allowed && !tanh_branch_allowed;
  }
  std::vector<std::string> reasoning;
};

/// Elimination logic for phi along geodesics:
///   lambda m > 0: empty; lambda = 0: {0};
///   lambda m < 0, periodic: constants only, and empty when phi has a zero;
///   lambda m < 0, non-periodic: constants and tanh branch.
TransportVerdict transport_verdict(double lambda, double m, bool periodic,
                                   bool has_zero);

}  // namespace qe3
