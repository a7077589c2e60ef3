#include "qe3/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace qe3 {

namespace {

using Rat = boost::multiprecision::cpp_rational;

// Recognizes doubles that are simple rationals (exact product with one of a
// fixed list of denominators).  Certificates must not depend on conditioning,
// so case-split decisions go through exact arithmetic whenever inputs allow.
std::optional<Rat> to_rational(double x) {
  if (!std::isfinite(x) || std::fabs(x) > 1e9) return std::nullopt;
  static constexpr long long kDens[] = {1,  2,  3,  4,   5,   6,    8,    10,
                                        12, 16, 20, 25,  32,  40,   50,   64,
                                        80, 100, 128, 200, 256, 500, 1000, 1024,
                                        10000, 100000, 1000000};
  for (long long d : kDens) {
    double scaled = x * static_cast<double>(d);
    if (scaled == std::floor(scaled) && std::fabs(scaled) < 9e15) {
      return Rat(static_cast<long long>(scaled), d);
    }
  }
  return std::nullopt;
}

int rat_sign(const Rat& r) { return r.sign(); }

struct DiagRicci {
  Vec3 r{};  // principal Ricci values from the Koszul route
  std::optional<std::array<Rat, 3>> exact;  // rational closed form, if inputs allow
};

std::array<Rat, 3> exact_principal_ricci(const std::array<Rat, 3>& l) {
  Rat s = (l[0] + l[1] + l[2]) / 2;
  std::array<Rat, 3> mu{s - l[0], s - l[1], s - l[2]};
  return {2 * mu[1] * mu[2], 2 * mu[0] * mu[2], 2 * mu[0] * mu[1]};
}

DiagRicci diag_ricci(const SolverGeometry& g) {
  DiagRicci out;
  SymTensor3 ric = ricci_tensor(g.structure());
  out.r = {ric(0, 0), ric(1, 1), ric(2, 2)};
  if (g.is_h2xr()) {
    if (auto rho = to_rational(std::get<H2xRMetric>(g.geom).rho))
      out.exact = std::array<Rat, 3>{-*rho, -*rho, Rat(0)};
    return out;
  }
  const Vec3& l = g.frame().lambda_star;
  std::array<Rat, 3> lr;
  bool ok = true;
  for (int i = 0; i < 3; ++i) {
    auto q = to_rational(l[i]);
    if (!q) {
      ok = false;
      break;
    }
    lr[i] = *q;
  }
  if (ok) {
    auto er = exact_principal_ricci(lr);
    // Dual-route consistency: rational closed form vs Koszul numerics.
    for (int i = 0; i < 3; ++i)
      if (std::fabs(static_cast<double>(er[i]) - out.r[i]) > 1e-9)
        throw std::logic_error("closed-form / Koszul Ricci mismatch");
    out.exact = er;
  }
  return out;
}

bool approx_eq(double x, double y) {
  return std::fabs(x - y) <= 1e-12 * std::max({1.0, std::fabs(x), std::fabs(y)});
}

int fuzzy_sign(double x) {
  if (std::fabs(x) <= 1e-12) return 0;
  return x > 0 ? 1 : -1;
}

}  // namespace

StructureConstants SolverGeometry::structure() const {
  if (is_h2xr())
    return h2xr_structure(std::sqrt(std::get<H2xRMetric>(geom).rho));
  return frame().structure();
}

std::string SolverGeometry::name() const {
  if (is_h2xr()) return "H2xR";
  return std::string(to_string(frame().tag));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::None: return "None";
    case Verdict::TrivialOnly: return "Trivial Solution";
    case Verdict::Exists: return "Exists";
  }
  return "?";
}

std::vector<AxisFamily> killing_reduction(const SolverGeometry& geometry,
                                          double tol) {
  std::vector<AxisFamily> out;
  if (geometry.is_h2xr()) {
    // L_Xg(e2,e2) = -2 a1 mu and L_Xg(e1,e2) = a2 mu kill a1, a2; the R axis
    // is always Killing.
    out.push_back({2, "", true});
    return out;
  }
  const Vec3& l = geometry.frame().lambda_star;
  auto sgn = [&](double x) { return fuzzy_sign(x); };
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    // X = a e_i is Killing iff a (l_j* - l_k*) = 0.
    if (sgn(l[j]) != sgn(l[k])) continue;  // equality impossible in pattern
    AxisFamily fam;
    fam.axis = i;
    if (sgn(l[j]) != 0) {
      fam.constraint =
          "l" + std::to_string(j + 1) + "*=l" + std::to_string(k + 1) + "*";
      fam.satisfied = std::fabs(l[j] - l[k]) <=
                      tol * std::max({1.0, std::fabs(l[j]), std::fabs(l[k])});
    }
    out.push_back(fam);
  }
  return out;
}

std::vector<QESolution> solve_fixed_metric(const SolverGeometry& geometry,
                                           double m) {
  if (m == 0.0) throw std::invalid_argument("solve_fixed_metric: m == 0");
  const StructureConstants sc = geometry.structure();
  const SymTensor3 ric = ricci_tensor(sc);
  const DiagRicci dr = diag_ricci(geometry);
  const auto m_rat = to_rational(m);
  const bool exact = dr.exact.has_value() && m_rat.has_value();

  auto equal_r = [&](int i, int j) {
    if (exact) return (*dr.exact)[i] == (*dr.exact)[j];
    return approx_eq(dr.r[i], dr.r[j]);
  };

  std::vector<QESolution> out;

  auto finalize = [&](QESolution s) {
    QEResidual res = qe_residual(sc, ric, s.X, m, s.A);
    s.residual = res.sup_norm;
    s.killing_residual = is_killing(sc, s.X).residual;
    s.exact = exact;
    s.provenance = "case-split";
    out.push_back(std::move(s));
  };

  // Trivial field: solution iff the metric is Einstein.
  if (equal_r(0, 1) && equal_r(1, 2)) {
    QESolution triv;
    triv.axis = -1;
    triv.A = dr.r[0];
    finalize(triv);
  }

  // Single-axis families.  Off-diagonal equations force at least two a_i to
  // vanish, so this enumeration is exhaustive (cross-checked by the oracle).
  for (const AxisFamily& fam : killing_reduction(geometry)) {
    if (!fam.satisfied) continue;
    int i = fam.axis, j = (i + 1) % 3, k = (i + 2) % 3;
    if (!equal_r(j, k)) continue;  // A would have to equal both r_j and r_k
    double A = dr.r[j];
    double asq;
    int asq_sign;
    if (exact) {
      Rat asq_rat = *m_rat * ((*dr.exact)[i] - (*dr.exact)[j]);
      asq = static_cast<double>(asq_rat);
      asq_sign = rat_sign(asq_rat);
      A = static_cast<double>((*dr.exact)[j]);
    } else {
      asq = m * (dr.r[i] - A);
      asq_sign = fuzzy_sign(asq);
    }
    if (asq_sign <= 0) continue;  // zero collapses to the trivial case
    double a = std::sqrt(asq);
    for (double coeff : {-a, a}) {
      QESolution s;
      s.axis = i;
      s.X = LeftInvariantField::axis(i, coeff);
      s.A = A;
      s.a_squared = asq;
      s.constraint = fam.constraint;
      finalize(s);
    }
  }

  std::sort(out.begin(), out.end(), [](const QESolution& x, const QESolution& y) {
    if (x.axis != y.axis) return x.axis < y.axis;
    return x.X.a[std::max(x.axis, 0)] < y.X.a[std::max(y.axis, 0)];
  });
  return out;
}

// --- numeric oracle ---------------------------------------------------------

namespace {

// 4x4 linear solve with partial pivoting; returns false when singular.
bool solve4(double A[4][4], double b[4], double x[4]) {
  int piv[4] = {0, 1, 2, 3};
  for (int col = 0; col < 4; ++col) {
    int best = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::fabs(A[piv[r]][col]) > std::fabs(A[piv[best]][col])) best = r;
    std::swap(piv[col], piv[best]);
    double p = A[piv[col]][col];
    if (std::fabs(p) < 1e-300) return false;
    for (int r = col + 1; r < 4; ++r) {
      double f = A[piv[r]][col] / p;
      for (int c2 = col; c2 < 4; ++c2) A[piv[r]][c2] -= f * A[piv[col]][c2];
      b[piv[r]] -= f * b[piv[col]];
    }
  }
  for (int row = 3; row >= 0; --row) {
    double s = b[piv[row]];
    for (int c2 = row + 1; c2 < 4; ++c2) s -= A[piv[row]][c2] * x[c2];
    x[row] = s / A[piv[row]][row];
  }
  return true;
}

struct ResidualSystem {
  const StructureConstants& sc;
  const SymTensor3& ric;
  double m;

  static constexpr int kPairs[6][2] = {{0, 0}, {1, 1}, {2, 2},
                                       {0, 1}, {0, 2}, {1, 2}};

  void eval(const double p[4], double F[6]) const {
    LeftInvariantField X{{p[0], p[1], p[2]}};
    SymTensor3 T = ric + 0.5 * lie_derivative_metric(sc, X) -
                   (1.0 / m) * one_form_square(X);
    for (int e = 0; e < 6; ++e) {
      int i = kPairs[e][0], j = kPairs[e][1];
      F[e] = T(i, j) - (i == j ? p[3] : 0.0);
    }
  }

  void jacobian(const double p[4], double J[6][4]) const {
    for (int e = 0; e < 6; ++e) {
      int i = kPairs[e][0], j = kPairs[e][1];
      for (int k = 0; k < 3; ++k) {
        double dL = 0.5 * (sc.pairing(i, k, j) + sc.pairing(j, k, i));
        double dQ = ((k == i) ? p[j] : 0.0) + ((k == j) ? p[i] : 0.0);
        J[e][k] = dL - dQ / m;
      }
      J[e][3] = (i == j) ? -1.0 : 0.0;
    }
  }

  double sup(const double F[6]) const {
    double s = 0;
    for (int e = 0; e < 6; ++e) s = std::max(s, std::fabs(F[e]));
    return s;
  }

  double ssq(const double F[6]) const {
    double s = 0;
    for (int e = 0; e < 6; ++e) s += F[e] * F[e];
    return s;
  }
};

bool levenberg_marquardt(const ResidualSystem& sys, double p[4]) {
  double F[6];
  sys.eval(p, F);
  double cost = sys.ssq(F);
  double mu = 1e-3;
  for (int iter = 0; iter < 400 && cost > 1e-28; ++iter) {
    double J[6][4];
    sys.jacobian(p, J);
    double JtJ[4][4] = {}, Jtf[4] = {};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int e = 0; e < 6; ++e) JtJ[a][b] += J[e][a] * J[e][b];
    for (int a = 0; a < 4; ++a)
      for (int e = 0; e < 6; ++e) Jtf[a] += J[e][a] * F[e];

    bool stepped = false;
    for (int tries = 0; tries < 25; ++tries) {
      double M[4][4], rhs[4], delta[4];
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) M[a][b] = JtJ[a][b];
        M[a][a] += mu;
        rhs[a] = -Jtf[a];
      }
      if (!solve4(M, rhs, delta)) {
        mu *= 10;
        continue;
      }
      double q[4];
      for (int a = 0; a < 4; ++a) q[a] = p[a] + delta[a];
      double Fq[6];
      sys.eval(q, Fq);
      double cq = sys.ssq(Fq);
      if (cq < cost) {
        for (int a = 0; a < 4; ++a) p[a] = q[a];
        for (int e = 0; e < 6; ++e) F[e] = Fq[e];
        cost = cq;
        mu = std::max(mu / 3.0, 1e-12);
        stepped = true;
        break;
      }
      mu *= 4;
    }
    if (!stepped) break;
  }
  sys.eval(p, F);
  return sys.sup(F) < 1e-10;
}

}  // namespace

std::vector<QESolution> numeric_oracle(const SolverGeometry& geometry, double m,
                                       int n_starts, unsigned seed) {
  if (m == 0.0) throw std::invalid_argument("numeric_oracle: m == 0");
  const StructureConstants sc = geometry.structure();
  const SymTensor3 ric = ricci_tensor(sc);
  ResidualSystem sys{sc, ric, m};

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-6.0, 6.0);

  std::vector<std::array<double, 4>> clusters;
  for (int s = 0; s < n_starts; ++s) {
    double p[4];
    for (double& x : p) x = dist(rng);
    if (s == 0) p[0] = p[1] = p[2] = 0.0;  // always probe the trivial branch
    if (!levenberg_marquardt(sys, p)) continue;
    std::array<double, 4> key;
    for (int a = 0; a < 4; ++a) {
      key[a] = std::round(p[a] * 1e6) / 1e6;
      if (key[a] == 0.0) key[a] = 0.0;  // normalize -0
    }
    bool dup = false;
    for (const auto& c : clusters) {
      double d = 0;
      for (int a = 0; a < 4; ++a) d = std::max(d, std::fabs(c[a] - key[a]));
      if (d < 1e-5) {
        dup = true;
        break;
      }
    }
    if (!dup) clusters.push_back(key);
  }

  std::vector<QESolution> out;
  for (const auto& c : clusters) {
    QESolution s;
    s.X.a = {c[0], c[1], c[2]};
    s.A = c[3];
    int nz = 0, axis = -1;
    for (int i = 0; i < 3; ++i)
      if (std::fabs(c[i]) > 1e-6) {
        ++nz;
        axis = i;
      }
    s.axis = (nz == 0) ? -1 : (nz == 1 ? axis : -2);  // -2: non-axis, flag it
    s.a_squared = s.X.norm2();
    QEResidual res = qe_residual(sc, ric, s.X, m, s.A);
    s.residual = res.sup_norm;
    s.killing_residual = is_killing(sc, s.X).residual;
    s.provenance = "oracle";
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const QESolution& x, const QESolution& y) {
    if (x.axis != y.axis) return x.axis < y.axis;
    return x.X.a[std::max(x.axis, 0)] < y.X.a[std::max(y.axis, 0)];
  });
  return out;
}

// --- sign-cell classification -----------------------------------------------

namespace {

std::string cell_name(int sign_m, int sign_A) {
  std::string s = sign_m > 0 ? "m>0" : "m<0";
  s += sign_A > 0 ? ", A>0" : (sign_A == 0 ? ", A=0" : ", A<0");
  return s;
}

double draw(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Confirms an Exists verdict numerically at sampled metrics from `sample`,
// which must return (geometry, m) pairs inside the cell.
void confirm_exists(CellVerdict& cv, unsigned seed, int n_confirm,
                    const std::function<std::pair<SolverGeometry, double>(
                        std::mt19937&)>& sample,
                    int sign_A) {
  std::mt19937 rng(seed);
  for (int i = 0; i < n_confirm; ++i) {
    auto [geo, m] = sample(rng);
    auto sols = solve_fixed_metric(geo, m);
    const QESolution* hit = nullptr;
    for (const auto& s : sols)
      if (s.axis >= 0 && fuzzy_sign(s.A) == sign_A && s.residual < 1e-10)
        hit = &s;
    if (!hit)
      throw std::logic_error("classify_cell: sampled confirmation failed for " +
                             geo.name());
    if (i == 0) {
      cv.witness_geometry = geo;
      cv.witness_m = m;
      for (const auto& s : sols)
        if (s.axis >= 0 && fuzzy_sign(s.A) == sign_A) cv.witnesses.push_back(s);
    }
  }
  cv.verdict = Verdict::Exists;
}

CellVerdict classify_r3(int sign_m, int sign_A, unsigned seed) {
  CellVerdict cv;
  if (sign_A == 0) {
    cv.verdict = Verdict::TrivialOnly;
    std::mt19937 rng(seed);
    double m = sign_m * draw(rng, 0.3, 4.0);
    SolverGeometry geo =
        SolverGeometry::milnor(MilnorFrame::make(GroupTag::R3, {0, 0, 0}));
    cv.witnesses = solve_fixed_metric(geo, m);
    cv.witness_geometry = geo;
    cv.witness_m = m;
    cv.certificate.push_back(
        "nontrivial X: diagonal equations -a_i^2/m = A with Ric = 0 force "
        "a_i = 0 once A = 0");
  } else {
    cv.verdict = Verdict::None;
    cv.certificate.push_back(
        "Ric = 0 and L_Xg = 0 for every X; diagonal equations read "
        "-a_i^2/m = A for i=1,2,3, which cannot share a nonzero value A "
        "across all axes unless every a_i^2 = -mA with the same sign; the "
        "three off-diagonal equations -a_ia_j/m = 0 then force at least two "
        "a_i = 0, leaving -a_i^2/m = A on one axis and 0 = A on the others");
  }
  return cv;
}

CellVerdict classify_nil(int sign_m, int sign_A, unsigned seed, int n_confirm) {
  CellVerdict cv;
  if (sign_m > 0 && sign_A < 0) {
    confirm_exists(
        cv, seed, n_confirm,
        [](std::mt19937& rng) {
          double u = draw(rng, 0.3, 4.0);
          return std::make_pair(SolverGeometry::milnor(MilnorFrame::make(
                                    GroupTag::Nil, {u, 0, 0})),
                                draw(rng, 0.3, 4.0));
        },
        -1);
    return cv;
  }
  cv.verdict = Verdict::None;
  cv.certificate.push_back(
      "trivial branch: Ric = diag(rho,-rho,-rho) with rho = l1^2/2 > 0 is "
      "never proportional to g");
  cv.certificate.push_back(
      "axes 2,3: L_Xg(e1,e3) = -a2 l1 and L_Xg(e1,e2) = a3 l1 force "
      "a2 = a3 = 0");
  cv.certificate.push_back(
      "axis 1 family: A = -rho < 0 and a1^2 = 2 m rho requires m > 0; "
      "cell " + cell_name(sign_m, sign_A) + " is outside that family");
  return cv;
}

CellVerdict classify_sl2r(int sign_m, int sign_A, unsigned seed,
                          int n_confirm) {
  CellVerdict cv;
  if (sign_m > 0 && sign_A < 0) {
    confirm_exists(
        cv, seed, n_confirm,
        [](std::mt19937& rng) {
          double u = draw(rng, 0.3, 4.0);
          double w = draw(rng, 0.3, 4.0);
          return std::make_pair(SolverGeometry::milnor(MilnorFrame::make(
                                    GroupTag::SL2R, {u, u, -w})),
                                draw(rng, 0.3, 4.0));
        },
        -1);
    cv.notes.push_back(
        "on the l1*=l2*=l, l3*=-l3 branch the principal Ricci is "
        "(-l3(l+l3/2), -l3(l+l3/2), l3^2/2): negative pair on the plane, "
        "positive on the Killing axis e3");
    return cv;
  }
  cv.verdict = Verdict::None;
  cv.certificate.push_back(
      "axis 1: L_Xg(e2,e3) = a1(l2*-l3*) with l2*>0>l3* forces a1 = 0");
  cv.certificate.push_back(
      "axis 2: L_Xg(e1,e3) = a2(l3*-l1*) with l3*<0<l1* forces a2 = 0");
  cv.certificate.push_back(
      "axis 3 family (requires l1*=l2*): A = r1 = -l3(l1+l3/2) < 0 and "
      "a3^2 = m(r3-r1) = m l3(l1+l3) requires m > 0; cell " +
      cell_name(sign_m, sign_A) + " is outside that family");
  cv.certificate.push_back(
      "trivial branch: r3 = l3^2/2 > 0 > r1 on the constrained branch and "
      "r1 = r2 = r3 is unattainable for the (+,+,-) pattern, so Ric is never "
      "proportional to g");
  if (sign_m < 0 && sign_A == 0) {
    cv.certificate.push_back(
        "(0,.,0) principal-Ricci branch (l1* = l2* - l3*, e.g. l* = "
        "(2,1,-1) with Ricci diag(0,-4,0)): the negative value sits on "
        "axis 2, whose Killing equation L_Xg(e1,e3) = a2(l3*-l1*) has "
        "l3* < 0 < l1*, so a2 = 0 and the branch admits no nonzero X; the "
        "a3 = sqrt(-m rho3) family with A = 0, m < 0 is therefore empty");
    cv.notes.push_back(
        "the (0,0,-) signature is attainable on SL2R only with the negative "
        "principal Ricci on a non-Killing-admissible axis");
  }
  return cv;
}

CellVerdict classify_e11(int sign_m, int sign_A, unsigned /*seed*/) {
  CellVerdict cv;
  cv.verdict = Verdict::None;
  cv.certificate.push_back(
      "axis 1: L_Xg(e2,e3) = a1(l2*-l3*) with l2*<0=l3* forces a1 = 0");
  cv.certificate.push_back(
      "axis 2: L_Xg(e1,e3) = a2(l3*-l1*) with l3*=0<l1* forces a2 = 0");
  cv.certificate.push_back(
      "axis 3: L_Xg(e1,e2) = a3(l1*-l2*) with l1*>0>l2* forces a3 = 0");
  cv.certificate.push_back(
      "trivial branch: principal Ricci ((l1+l2)s, -(l1+l2)s, -(l1+l2)^2/2) "
      "with s = (l1-l2)/2 has r3 < 0 and r1 = -r2, so Ric = Ag would force "
      "r1 = r2 = 0 and A = r3 < 0 = r1, a contradiction");
  (void)sign_m;
  (void)sign_A;
  return cv;
}

CellVerdict classify_e2(int sign_m, int sign_A, unsigned /*seed*/) {
  CellVerdict cv;
  cv.verdict = Verdict::None;
  cv.certificate.push_back(
      "axis 1: L_Xg(e2,e3) = a1(l2*-l3*) with l2*>0=l3* forces a1 = 0");
  cv.certificate.push_back(
      "axis 2: L_Xg(e1,e3) = a2(l3*-l1*) with l3*=0<l1* forces a2 = 0");
  cv.certificate.push_back(
      "axis 3 family (requires l1*=l2*): that constraint makes the metric "
      "flat (mu1 = mu2 = 0), so A = r1 = 0 and a3^2 = m(r3-r1) = 0; only "
      "X = 0, A = 0 survives and it is counted under the R3 row");
  cv.certificate.push_back(
      "generic l1* != l2*: signature is (+,-,-), and with X = 0 forced "
      "Ric = Ag fails on sign grounds");
  cv.notes.push_back(
      "flat branch l1*=l2* is isometric to R3 and routed to the R3 verdict");
  (void)sign_m;
  (void)sign_A;
  return cv;
}

CellVerdict classify_su2(int sign_m, int sign_A, unsigned seed,
                         int n_confirm) {
  CellVerdict cv;
  // Axis-3 family with l1=l2=u, l3=w: A = w(u - w/2), a3^2 = m w (w - u).
  auto sampler = [sign_m, sign_A](std::mt19937& rng) {
    double w = draw(rng, 0.8, 3.0);
    double u;
    if (sign_m > 0) {
      if (sign_A > 0)
        u = w * draw(rng, 0.55, 0.95);  // w/2 < u < w
      else if (sign_A == 0)
        u = w / 2;
      else
        u = w * draw(rng, 0.10, 0.45);  // u < w/2
    } else {
      u = w * draw(rng, 1.1, 3.0);  // u > w: A > 0, m < 0
    }
    double m = sign_m * draw(rng, 0.3, 4.0);
    return std::make_pair(
        SolverGeometry::milnor(MilnorFrame::make(GroupTag::SU2, {u, u, w})), m);
  };
  bool exists = (sign_m > 0) || (sign_m < 0 && sign_A > 0);
  if (exists) {
    confirm_exists(cv, seed, n_confirm, sampler, sign_A);
    return cv;
  }
  cv.verdict = Verdict::None;
  cv.certificate.push_back(
      "axis family with l_j* = l_k* = u, l_i* = w: A = w(u - w/2) and "
      "a^2 = m w (w - u); A <= 0 forces u <= w/2 < w, hence w - u > 0 and "
      "m > 0; cell " + cell_name(sign_m, sign_A) + " is outside every family");
  cv.certificate.push_back(
      "trivial branch: Ric = Ag holds only at l1*=l2*=l3*=l with "
      "A = l^2/2 > 0, not in this cell");
  return cv;
}

}  // namespace

CellVerdict classify_cell(GroupTag group, int sign_m, int sign_A, unsigned seed,
                          int n_confirm) {
  if (sign_m == 0)
    throw std::invalid_argument("classify_cell: sign_m must be +1 or -1");
  switch (group) {
    case GroupTag::R3: return classify_r3(sign_m, sign_A, seed);
    case GroupTag::Nil: return classify_nil(sign_m, sign_A, seed, n_confirm);
    case GroupTag::SL2R: return classify_sl2r(sign_m, sign_A, seed, n_confirm);
    case GroupTag::E11: return classify_e11(sign_m, sign_A, seed);
    case GroupTag::E2: return classify_e2(sign_m, sign_A, seed);
    case GroupTag::SU2: return classify_su2(sign_m, sign_A, seed, n_confirm);
  }
  throw std::invalid_argument("classify_cell: unknown group");
}

CellVerdict classify_cell_h2xr(int sign_m, int sign_A, unsigned seed,
                               int n_confirm) {
  if (sign_m == 0)
    throw std::invalid_argument("classify_cell_h2xr: sign_m must be +1 or -1");
  CellVerdict cv;
  if (sign_m > 0 && sign_A < 0) {
    confirm_exists(
        cv, seed, n_confirm,
        [](std::mt19937& rng) {
          return std::make_pair(SolverGeometry::h2xr(draw(rng, 0.3, 4.0)),
                                draw(rng, 0.3, 4.0));
        },
        -1);
    return cv;
  }
  cv.verdict = Verdict::None;
  cv.certificate.push_back(
      "plane directions: L_Xg(e2,e2) = -2 a1 mu and L_Xg(e1,e2) = a2 mu "
      "force a1 = a2 = 0");
  cv.certificate.push_back(
      "R-axis family: A = -rho < 0 and a3^2 = m rho requires m > 0; cell " +
      cell_name(sign_m, sign_A) + " is outside that family");
  cv.certificate.push_back(
      "trivial branch: Ric = diag(-rho,-rho,0) is never proportional to g");
  return cv;
}

}  // namespace qe3
