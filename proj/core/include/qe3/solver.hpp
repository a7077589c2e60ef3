#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qe3/algebra.hpp"
#include "qe3/bakry_emery.hpp"
#include "qe3/curvature.hpp"

namespace qe3 {

/// H^2 x R with the product metric normalized so Ric = diag(-rho,-rho,0);
/// realized by brackets [e1,e2] = sqrt(rho) e2 with e3 spanning the R factor.
struct H2xRMetric {
  double rho = 1.0;
};

/// A concrete left-invariant geometry the solver operates on.
struct SolverGeometry {
  std::variant<MilnorFrame, H2xRMetric> geom;

  static SolverGeometry milnor(MilnorFrame f) { return {std::move(f)}; }
  static SolverGeometry h2xr(double rho = 1.0) { return {H2xRMetric{rho}}; }

  bool is_h2xr() const { return std::holds_alternative<H2xRMetric>(geom); }
  const MilnorFrame& frame() const { return std::get<MilnorFrame>(geom); }
  StructureConstants structure() const;
  std::string name() const;
};

/// One (axis, lambda-constraint) pair solving L_Xg = 0 for X along that axis.
struct AxisFamily {
  int axis = 0;            // basis index carrying X
  std::string constraint;  // e.g. "l1*=l2*"; empty when unconstrained
  bool satisfied = true;   // whether this frame's numeric lambdas satisfy it
};

/// Admissible Killing directions for single-axis fields.  X = 0 is always
/// Killing and not listed.
std::vector<AxisFamily> killing_reduction(const SolverGeometry& geometry,
                                          double tol = 1e-12);

struct QESolution {
  int axis = -1;  // -1 for the trivial field X = 0
  LeftInvariantField X;
  double A = 0.0;
  double a_squared = 0.0;      // |X|^2, exact closed form m (r_axis - A)
  double residual = 0.0;       // sup norm of ric_X^m - A g
  double killing_residual = 0.0;
  bool exact = false;          // case-split ran in exact rational arithmetic
  std::string constraint;      // lambda-constraint of the family
  std::string provenance;      // "case-split" or "oracle"
};

/// Solves ric_X^m = A g over left-invariant X for a fixed metric, by axis
/// enumeration driven by the Killing reduction, in exact rational arithmetic
/// when the lambdas and m are rational.  Returns every solution (both signs
/// of each nontrivial witness, plus the trivial one when the metric is
/// Einstein).  Throws std::invalid_argument when m == 0.
std::vector<QESolution> solve_fixed_metric(const SolverGeometry& geometry,
                                           double m);

/// Multi-start damped least-squares on the full 6-equation residual over
/// (a1,a2,a3,A); converged points (residual < 1e-10) are clustered.
/// Independent check of solve_fixed_metric.
std::vector<QESolution> numeric_oracle(const SolverGeometry& geometry, double m,
                                       int n_starts = 200, unsigned seed = 0);

enum class Verdict { None, TrivialOnly, Exists };
std::string_view to_string(Verdict v);

/// (group, sign m, sign A) cell query; sign_m in {-1,+1}, sign_A in {-1,0,+1}.
struct CellVerdict {
  Verdict verdict = Verdict::None;
  /// Numeric witness data for Exists / TrivialOnly, at a sampled metric.
  std::vector<QESolution> witnesses;
  std::optional<SolverGeometry> witness_geometry;
  double witness_m = 0.0;
  /// For None (and the eliminated branches of other verdicts): one entry per
  /// eliminated case with the violated equation.
  std::vector<std::string> certificate;
  /// Extra context (e.g. flat-branch routing notes).
  std::vector<std::string> notes;
};

/// Decides existence of solutions over all metrics of the given geometry with
/// sign(m) = sign_m and sign(A) = sign_A.  The symbolic family analysis is
/// confirmed numerically at n_confirm sampled lambda draws per Exists verdict.
/// Covers the seven Lie-group geometries (including H^2 x R); products and
/// H^3 live in the products module.
CellVerdict classify_cell(GroupTag group, int sign_m, int sign_A,
                          unsigned seed = 0, int n_confirm = 10);
CellVerdict classify_cell_h2xr(int sign_m, int sign_A, unsigned seed = 0,
                               int n_confirm = 10);

}  // namespace qe3
