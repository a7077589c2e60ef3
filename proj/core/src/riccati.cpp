#include "qe3/riccati.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qe3 {

namespace {
constexpr double kBlowupThreshold = 1e8;
}

std::string_view to_string(RiccatiKind kind) {
  switch (kind) {
    case RiccatiKind::IdenticallyZero: return "identically zero";
    case RiccatiKind::ConstantPlus: return "constant +sqrt(-lambda m)";
    case RiccatiKind::ConstantMinus: return "constant -sqrt(-lambda m)";
    case RiccatiKind::TanhBranch: return "bounded tanh branch";
    case RiccatiKind::NoGlobalSolution: return "no global solutions";
  }
  return "?";
}

double RiccatiClassification::evaluate(double t) const {
  double s = std::sqrt(std::max(-lambda * m, 0.0));
  switch (kind) {
    case RiccatiKind::IdenticallyZero: return 0.0;
    case RiccatiKind::ConstantPlus: return s;
    case RiccatiKind::ConstantMinus: return -s;
    case RiccatiKind::TanhBranch: return -s * std::tanh(s / m * (t + C));
    case RiccatiKind::NoGlobalSolution:
      throw std::logic_error("no global solution to evaluate");
  }
  return 0.0;
}

double RiccatiClassification::ode_residual(double t) const {
  double f = evaluate(t);
  double df = 0.0;
  if (kind == RiccatiKind::TanhBranch) {
    double s = std::sqrt(-lambda * m);
    double sech = 1.0 / std::cosh(s / m * (t + C));
    df = -s * (s / m) * sech * sech;
  }
  return std::fabs(df - f * f / m - lambda);
}

RiccatiClassification classify_global(const RiccatiProblem& p) {
  if (p.m == 0.0) throw std::invalid_argument("classify_global: m == 0");
  RiccatiClassification cls;
  cls.lambda = p.lambda;
  cls.m = p.m;

  if (p.lambda == 0.0) {
    // f = 1/(C - t/m) blows up at t = mC for any nonzero start.
    cls.kind = (p.f0 && *p.f0 != 0.0) ? RiccatiKind::NoGlobalSolution
                                      : RiccatiKind::IdenticallyZero;
    return cls;
  }
  if (p.lambda * p.m > 0.0) {
    cls.kind = RiccatiKind::NoGlobalSolution;
    return cls;
  }

  const double s = std::sqrt(-p.lambda * p.m);
  if (!p.f0) {
    cls.kind = RiccatiKind::TanhBranch;
    return cls;
  }
  const double f0 = *p.f0;
  if (f0 == s) {
    cls.kind = RiccatiKind::ConstantPlus;
  } else if (f0 == -s) {
    cls.kind = RiccatiKind::ConstantMinus;
  } else if (std::fabs(f0) < s) {
    cls.kind = RiccatiKind::TanhBranch;
    // f(0) = -s tanh(s C / m) = f0
    cls.C = (p.m / s) * std::atanh(-f0 / s);
  } else {
    // outside the bounded funnel: finite-time escape
    cls.kind = RiccatiKind::NoGlobalSolution;
  }
  return cls;
}

double evaluate_closed_form(const RiccatiClassification& cls, double t) {
  return cls.evaluate(t);
}

namespace {

struct LegResult {
  std::vector<double> t, f;
  bool blew_up = false;
  double blowup_time = 0.0;
};

// One direction of fixed-step RK4 from (0, f0); h may be negative.
LegResult integrate_leg(double lambda, double m, double f0, double t_stop,
                        double h) {
  LegResult leg;
  auto rhs = [&](double f) { return f * f / m + lambda; };
  double t = 0.0, f = f0;
  leg.t.push_back(t);
  leg.f.push_back(f);
  const long nsteps = std::lround(std::fabs(t_stop) / std::fabs(h));
  for (long i = 0; i < nsteps; ++i) {
    double k1 = rhs(f);
    double k2 = rhs(f + 0.5 * h * k1);
    double k3 = rhs(f + 0.5 * h * k2);
    double k4 = rhs(f + h * k3);
    f += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += h;
    leg.t.push_back(t);
    leg.f.push_back(f);
    if (!std::isfinite(f) || std::fabs(f) > kBlowupThreshold) {
      leg.blew_up = true;
      leg.blowup_time = t;
      break;
    }
  }
  return leg;
}

}  // namespace

Trajectory rk4_oracle(const RiccatiProblem& p, double t_begin, double t_end,
                      double step) {
  if (p.m == 0.0) throw std::invalid_argument("rk4_oracle: m == 0");
  if (!p.f0) throw std::invalid_argument("rk4_oracle: f0 required");
  if (step <= 0.0) throw std::invalid_argument("rk4_oracle: step must be > 0");
  if (t_begin > 0.0 || t_end < 0.0)
    throw std::invalid_argument("rk4_oracle: span must contain t = 0");

  auto run = [&](double h) {
    std::pair<LegResult, LegResult> r;
    if (t_begin < 0.0) r.first = integrate_leg(p.lambda, p.m, *p.f0, t_begin, -h);
    if (t_end > 0.0) r.second = integrate_leg(p.lambda, p.m, *p.f0, t_end, h);
    return r;
  };

  auto [back, fwd] = run(step);
  Trajectory traj;
  for (size_t i = back.t.size(); i-- > 1;) {
    traj.t.push_back(back.t[i]);
    traj.f.push_back(back.f[i]);
  }
  traj.t.insert(traj.t.end(), fwd.t.begin(), fwd.t.end());
  traj.f.insert(traj.f.end(), fwd.f.begin(), fwd.f.end());
  if (traj.t.empty()) {
    traj.t.push_back(0.0);
    traj.f.push_back(*p.f0);
  }

  bool raw_blowup = back.blew_up || fwd.blew_up;
  if (raw_blowup) {
    // Richardson confirmation: a genuine tan-type escape persists at half step.
    auto [back2, fwd2] = run(0.5 * step);
    if (back2.blew_up || fwd2.blew_up) {
      traj.blew_up = true;
      traj.blowup_time = fwd2.blew_up ? fwd2.blowup_time : back2.blowup_time;
    }
  }
  return traj;
}

TransportVerdict transport_verdict(double lambda, double m, bool periodic,
                                   bool has_zero) {
  if (m == 0.0) throw std::invalid_argument("transport_verdict: m == 0");
  TransportVerdict v;
  if (lambda == 0.0) {
    v.identically_zero = true;
    v.reasoning.push_back("lambda = 0 forces phi == 0");
    return v;
  }
  if (lambda * m > 0.0) {
    v.reasoning.push_back("lambda m > 0: every branch escapes in finite time");
    return v;
  }
  // lambda m < 0
  if (periodic) {
    if (has_zero) {
      v.reasoning.push_back(
          "periodic geodesic excludes the tanh branch; a zero of phi excludes "
          "the nonzero constants");
      return v;
    }
    v.constants_allowed = true;
    v.reasoning.push_back(
        "periodic geodesic excludes the nonconstant tanh branch");
    return v;
  }
  v.constants_allowed = true;
  v.tanh_branch_allowed = true;
  v.reasoning.push_back("lambda m < 0: constants and bounded tanh branch");
  return v;
}

}  // namespace qe3
