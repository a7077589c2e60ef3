// Command-line front end: classification-table regeneration, single-metric
// solves, and the scalar Riccati classifier.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qe3/riccati.hpp"
#include "qe3/solver.hpp"
#include "qe3/table.hpp"

namespace {

constexpr int kExitUsage = 64;

struct SolveOptions {
  std::string group;
  std::vector<double> lambda;
  double m = 0.0;
  double rho = 1.0;
  std::string format = "md";
  double tolerance = 1e-10;
  unsigned seed = 0;
  bool certify = false;
};

qe3::SolverGeometry make_geometry(const SolveOptions& opt) {
  if (opt.group == "h2xr") {
    if (opt.rho <= 0.0)
      throw CLI::ValidationError("--rho", "must be positive for h2xr");
    return qe3::SolverGeometry::h2xr(opt.rho);
  }
  auto tag = qe3::group_from_string(opt.group);
  if (!tag) throw CLI::ValidationError("--group", "unknown group " + opt.group);
  qe3::Vec3 l{0.0, 0.0, 0.0};
  if (opt.lambda.empty()) {
    if (*tag != qe3::GroupTag::R3)
      throw CLI::ValidationError("--lambda", "required for this group");
  } else if (opt.lambda.size() == 3) {
    l = {opt.lambda[0], opt.lambda[1], opt.lambda[2]};
  } else {
    throw CLI::ValidationError("--lambda", "expects three comma-separated values");
  }
  return qe3::SolverGeometry::milnor(qe3::MilnorFrame::make(*tag, l));
}

int cmd_solve(const SolveOptions& opt) {
  qe3::SolverGeometry geo = make_geometry(opt);
  auto sols = qe3::solve_fixed_metric(geo, opt.m);

  std::vector<std::string> certificates;
  if (opt.certify) {
    // cross-check against the independent numeric path
    auto oracle = qe3::numeric_oracle(geo, opt.m, 200, opt.seed);
    std::ostringstream os;
    os << "numeric oracle (seed " << opt.seed << "): " << oracle.size()
       << " solution cluster(s), case-split found " << sols.size()
       << (oracle.size() == sols.size() ? " — agreement" : " — MISMATCH");
    certificates.push_back(os.str());
  }

  if (opt.format == "json") {
    nlohmann::json root;
    root["group"] = geo.name();
    if (geo.is_h2xr()) {
      root["rho"] = std::get<qe3::H2xRMetric>(geo.geom).rho;
    } else {
      const qe3::Vec3& l = geo.frame().lambda_star;
      root["lambda_star"] = {l[0], l[1], l[2]};
    }
    root["m"] = opt.m;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : sols) {
      nlohmann::json js;
      js["X"] = {s.X.a[0], s.X.a[1], s.X.a[2]};
      js["A"] = s.A;
      js["residual"] = s.residual;
      js["killing"] = s.killing_residual < 1e-12;
      if (!s.constraint.empty()) js["constraint"] = s.constraint;
      js["exact"] = s.exact;
      js["provenance"] = s.provenance;
      arr.push_back(std::move(js));
    }
    root["solutions"] = std::move(arr);
    root["certificates"] = certificates;
    std::cout << root.dump(2) << "\n";
  } else {
    std::cout << "group: " << geo.name() << "\n";
    if (geo.is_h2xr())
      std::cout << "rho: " << std::get<qe3::H2xRMetric>(geo.geom).rho << "\n";
    else {
      const qe3::Vec3& l = geo.frame().lambda_star;
      std::cout << "lambda*: (" << l[0] << ", " << l[1] << ", " << l[2] << ")\n";
    }
    std::cout << "m: " << opt.m << "\n";
    if (sols.empty()) std::cout << "no solutions\n";
    for (const auto& s : sols) {
      std::cout << "  X = (" << s.X.a[0] << ", " << s.X.a[1] << ", " << s.X.a[2]
                << "), A = " << s.A << ", residual = " << s.residual
                << ", killing = " << (s.killing_residual < 1e-12 ? "yes" : "no");
      if (!s.constraint.empty()) std::cout << " [" << s.constraint << "]";
      std::cout << " (" << s.provenance << (s.exact ? ", exact" : "") << ")\n";
    }
    for (const auto& c : certificates) std::cout << "  " << c << "\n";
  }

  for (const auto& s : sols)
    if (s.residual > opt.tolerance) return 1;
  return 0;
}

int cmd_table(const std::string& format, unsigned seed, bool certify) {
  qe3::ClassificationTable t = qe3::compute_table(seed);
  if (format == "json")
    std::cout << qe3::render_json(t, certify);
  else if (format == "csv")
    std::cout << qe3::render_csv(t);
  else
    std::cout << qe3::render_markdown(t, certify);
  return t.exit_code();
}

struct RiccatiOptions {
  double lambda = 0.0;
  double m = 1.0;
  std::optional<double> f0;
  bool integrate = false;
  double t_begin = -5.0, t_end = 5.0, step = 0.01;
  std::string out;  // empty = stdout
};

int cmd_riccati(const RiccatiOptions& opt) {
  qe3::RiccatiProblem p{opt.lambda, opt.m, opt.f0};
  qe3::RiccatiClassification cls = qe3::classify_global(p);
  std::cout << "lambda = " << opt.lambda << ", m = " << opt.m;
  if (opt.f0) std::cout << ", f0 = " << *opt.f0;
  std::cout << "\nclassification: " << qe3::to_string(cls.kind) << "\n";
  if (cls.kind == qe3::RiccatiKind::TanhBranch)
    std::cout << "phase C = " << cls.C << "\n";

  if (opt.integrate) {
    if (!opt.f0) {
      std::cerr << "--integrate requires --f0\n";
      return kExitUsage;
    }
    qe3::Trajectory traj = qe3::rk4_oracle(p, opt.t_begin, opt.t_end, opt.step);
    std::ostringstream csv;
    csv << "t,f\n";
    for (size_t i = 0; i < traj.t.size(); ++i)
      csv << traj.t[i] << "," << traj.f[i] << "\n";
    if (opt.out.empty()) {
      std::cout << csv.str();
    } else {
      std::ofstream f(opt.out);
      if (!f) {
        std::cerr << "cannot open " << opt.out << "\n";
        return 1;
      }
      f << csv.str();
    }
    if (traj.blew_up)
      std::cout << "# blow-up detected at t = " << traj.blowup_time << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left-invariant quasi-Einstein metrics on 3-dimensional "
               "homogeneous geometries: solver, classifier, and table"};
  app.require_subcommand(1);

  // table
  std::string table_format = "md";
  unsigned table_seed = 0;
  bool table_certify = false;
  auto* table = app.add_subcommand("table",
                                   "regenerate the 9x6 classification table");
  table->add_option("--format", table_format, "md|json|csv")
      ->check(CLI::IsMember({"md", "json", "csv"}));
  table->add_option("--seed", table_seed, "seed for sampled confirmations");
  table->add_flag("--certify", table_certify, "include elimination certificates");

  // solve
  SolveOptions sopt;
  auto* solve = app.add_subcommand("solve", "solve ric_X^m = Ag for one metric");
  solve->add_option("--group", sopt.group,
                    "nil|sl2r|e11|e2|r3|su2|h2xr")->required();
  solve->add_option("--lambda", sopt.lambda,
                    "lambda* triple a,b,c")->delimiter(',')->expected(0, 3);
  solve->add_option("--m", sopt.m, "nonzero m")->required();
  solve->add_option("--rho", sopt.rho, "curvature parameter for h2xr");
  solve->add_option("--format", sopt.format, "md|json")
      ->check(CLI::IsMember({"md", "json"}));
  solve->add_option("--tolerance", sopt.tolerance, "residual acceptance bound")
      ->check(CLI::Range(1e-300, 1e-4));
  solve->add_option("--seed", sopt.seed, "oracle seed");
  solve->add_flag("--certify", sopt.certify, "cross-check with numeric oracle");

  // riccati
  RiccatiOptions ropt;
  double f0_val = 0.0;
  auto* riccati = app.add_subcommand("riccati",
                                     "classify f' - f^2/m = lambda globally");
  riccati->add_option("--lambda", ropt.lambda, "constant lambda")->required();
  riccati->add_option("--m", ropt.m, "nonzero m");
  auto* f0_opt = riccati->add_option("--f0", f0_val, "initial value f(0)");
  riccati->add_flag("--integrate", ropt.integrate, "emit RK4 trajectory CSV");
  riccati->add_option("--t-begin", ropt.t_begin, "integration start");
  riccati->add_option("--t-end", ropt.t_end, "integration end");
  riccati->add_option("--step", ropt.step, "RK4 step size")
      ->check(CLI::PositiveNumber);
  riccati->add_option("--out", ropt.out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;  // usage errors map to 64
  }

  try {
    if (table->parsed()) return cmd_table(table_format, table_seed, table_certify);
    if (solve->parsed()) {
      if (sopt.m == 0.0) {
        std::cerr << "error: m must be nonzero\n";
        return kExitUsage;
      }
      return cmd_solve(sopt);
    }
    if (riccati->parsed()) {
      if (ropt.m == 0.0) {
        std::cerr << "error: m must be nonzero\n";
        return kExitUsage;
      }
      if (f0_opt->count() > 0) ropt.f0 = f0_val;
      return cmd_riccati(ropt);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
