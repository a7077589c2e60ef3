#include "qe3/table.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace qe3 {

namespace {

constexpr GeometryRow kRows[kNumRows] = {
    GeometryRow::R3,  GeometryRow::SU2, GeometryRow::SL2R,
    GeometryRow::Nil, GeometryRow::E11, GeometryRow::E2,
    GeometryRow::H2xR, GeometryRow::S2xR, GeometryRow::H3};

// Published verdicts, row-major in the table's own ordering.
// N = None, T = Trivial Solution, E = Exists.
constexpr char kExpected[kNumRows][kNumCols + 1] = {
    /* R3   */ "NTNNTN",
    /* SU2  */ "EEEENN",
    /* SL2R */ "NNNNEN",
    /* Nil  */ "NNENNN",
    /* E11  */ "NNNNNN",
    /* E2   */ "NNNNNN",
    /* H2xR */ "NNENNN",
    /* S2xR */ "NNNENN",
    /* H3   */ "NNTNNT",
};

Verdict decode(char c) {
  switch (c) {
    case 'N': return Verdict::None;
    case 'T': return Verdict::TrivialOnly;
    case 'E': return Verdict::Exists;
  }
  return Verdict::None;
}

int row_index(GeometryRow row) { return static_cast<int>(row); }

std::string describe_witness(const CellVerdict& cv) {
  if (!cv.witness_geometry) return "";
  std::ostringstream os;
  const SolverGeometry& g = *cv.witness_geometry;
  if (g.is_h2xr()) {
    os << "rho=" << std::get<H2xRMetric>(g.geom).rho;
  } else {
    const Vec3& l = g.frame().lambda_star;
    os << "l*=(" << l[0] << "," << l[1] << "," << l[2] << ")";
  }
  os << ", m=" << cv.witness_m;
  for (const QESolution& s : cv.witnesses) {
    os << "; ";
    if (s.axis < 0) {
      os << "X=0";
    } else {
      os << "X=" << s.X.a[s.axis] << " e" << (s.axis + 1);
    }
    os << ", A=" << s.A << " (residual " << s.residual << ")";
  }
  return os.str();
}

TableCell from_cell_verdict(const CellVerdict& cv) {
  TableCell cell;
  cell.computed = cv.verdict;
  cell.witness = describe_witness(cv);
  cell.certificate = cv.certificate;
  cell.notes = cv.notes;
  return cell;
}

TableCell compute_s2xr(int sign_m, int sign_A) {
  TableCell cell;
  // S^2(rho) x R: the Einstein block pins A = rho > 0, so only the A>0
  // columns can be inhabited; existence needs rho m < 0, i.e. m < 0.
  const double rho = 1.0;
  const double m = sign_m * 1.0;
  ProductVerdict pv = product_qe(EinsteinFactor::sphere(2, rho),
                                 EinsteinFactor::line(), m,
                                 /*compact_quotient=*/true);
  if (pv.verdict == Verdict::Exists && sign_A > 0) {
    cell.computed = Verdict::Exists;
    std::ostringstream os;
    os << "rho=" << rho << ", m=" << m << "; X=+-" << pv.x_coeff
       << " d/dt, A=" << pv.A << " (block residual " << pv.block_residual
       << ")";
    cell.witness = os.str();
  } else {
    cell.computed = Verdict::None;
    if (sign_A <= 0)
      cell.certificate.push_back(
          "the sphere block forces A = rho > 0; no metric in the family "
          "reaches A <= 0");
    else
      cell.certificate.push_back(
          "A = rho > 0 with m > 0 gives A m > 0: the line equation "
          "f' - f^2/m = A has no global solution");
  }
  cell.notes = pv.reasoning;
  return cell;
}

TableCell compute_h3(int sign_m, int sign_A) {
  TableCell cell;
  const double rho = 1.0;
  const double m = sign_m * 1.0;
  if (sign_A < 0) {
    ProductVerdict pv = space_form_verdict(rho, m, -rho);
    cell.computed = pv.verdict;  // TrivialOnly at A = -rho
    std::ostringstream os;
    os << "rho=" << rho << ", m=" << m << "; X=0, A=" << pv.A;
    cell.witness = os.str();
    cell.notes = pv.reasoning;
  } else {
    double A = (sign_A > 0) ? rho : 0.0;
    ProductVerdict pv = space_form_verdict(rho, m, A);
    cell.computed = Verdict::None;
    cell.certificate.push_back(
        "hyperbolic space form Ric = -rho g admits solutions only at "
        "A = -rho < 0");
    for (const auto& r : pv.reasoning) cell.certificate.push_back(r);
  }
  return cell;
}

}  // namespace

std::string_view row_name(GeometryRow row) {
  switch (row) {
    case GeometryRow::R3: return "R3";
    case GeometryRow::SU2: return "SU(2)";
    case GeometryRow::SL2R: return "SL2R~";
    case GeometryRow::Nil: return "Nil";
    case GeometryRow::E11: return "E(1,1)";
    case GeometryRow::E2: return "E(2)";
    case GeometryRow::H2xR: return "H2xR";
    case GeometryRow::S2xR: return "S2xR";
    case GeometryRow::H3: return "H3";
  }
  return "?";
}

int col_sign_m(int col) { return col < 3 ? 1 : -1; }
int col_sign_A(int col) {
  switch (col % 3) {
    case 0: return 1;
    case 1: return 0;
    default: return -1;
  }
}

std::string col_name(int col) {
  std::string s = col_sign_m(col) > 0 ? "m>0," : "m<0,";
  int a = col_sign_A(col);
  s += a > 0 ? "A>0" : (a == 0 ? "A=0" : "A<0");
  return s;
}

Verdict expected_verdict(GeometryRow row, int col) {
  return decode(kExpected[row_index(row)][col]);
}

bool cell_disputed(GeometryRow row, int col) {
  // The one cell where a machine-checked witness contradicts the published
  // verdict: SL2R~ with m>0, A<0 (column 2).
  return row == GeometryRow::SL2R && col == 2;
}

bool ClassificationTable::full_match() const {
  for (const auto& r : cells)
    for (const auto& c : r)
      if (!c.matches) return false;
  return true;
}

bool ClassificationTable::mismatches_all_disputed() const {
  for (const auto& r : cells)
    for (const auto& c : r)
      if (!c.matches && !c.disputed) return false;
  return true;
}

int ClassificationTable::exit_code() const {
  if (full_match()) return 0;
  return mismatches_all_disputed() ? 2 : 1;
}

ClassificationTable compute_table(unsigned seed, int n_confirm) {
  ClassificationTable t;
  for (int ri = 0; ri < kNumRows; ++ri) {
    GeometryRow row = kRows[ri];
    for (int col = 0; col < kNumCols; ++col) {
      int sm = col_sign_m(col), sa = col_sign_A(col);
      TableCell cell;
      switch (row) {
        case GeometryRow::R3:
          cell = from_cell_verdict(classify_cell(GroupTag::R3, sm, sa, seed,
                                                 n_confirm));
          break;
        case GeometryRow::SU2:
          cell = from_cell_verdict(classify_cell(GroupTag::SU2, sm, sa, seed,
                                                 n_confirm));
          break;
        case GeometryRow::SL2R:
          cell = from_cell_verdict(classify_cell(GroupTag::SL2R, sm, sa, seed,
                                                 n_confirm));
          break;
        case GeometryRow::Nil:
          cell = from_cell_verdict(classify_cell(GroupTag::Nil, sm, sa, seed,
                                                 n_confirm));
          break;
        case GeometryRow::E11:
          cell = from_cell_verdict(classify_cell(GroupTag::E11, sm, sa, seed,
                                                 n_confirm));
          break;
        case GeometryRow::E2:
          cell = from_cell_verdict(classify_cell(GroupTag::E2, sm, sa, seed,
                                                 n_confirm));
          break;
        case GeometryRow::H2xR:
          cell = from_cell_verdict(classify_cell_h2xr(sm, sa, seed, n_confirm));
          break;
        case GeometryRow::S2xR:
          cell = compute_s2xr(sm, sa);
          break;
        case GeometryRow::H3:
          cell = compute_h3(sm, sa);
          break;
      }
      cell.expected = expected_verdict(row, col);
      cell.disputed = cell_disputed(row, col);
      cell.matches = cell.computed == cell.expected;
      t.cells[row_index(row)][col] = std::move(cell);
    }
  }
  return t;
}

std::string render_markdown(const ClassificationTable& t, bool certificates) {
  std::ostringstream os;
  os << "| Manifold |";
  for (int c = 0; c < kNumCols; ++c) os << " " << col_name(c) << " |";
  os << "\n|---|";
  for (int c = 0; c < kNumCols; ++c) os << "---|";
  os << "\n";
  for (int r = 0; r < kNumRows; ++r) {
    os << "| " << row_name(static_cast<GeometryRow>(r)) << " |";
    for (int c = 0; c < kNumCols; ++c) {
      const TableCell& cell = t.cells[r][c];
      os << " " << to_string(cell.computed);
      if (!cell.matches)
        os << (cell.disputed ? " [disputed: published "
                             : " [MISMATCH: published ")
           << to_string(cell.expected) << "]";
      os << " |";
    }
    os << "\n";
  }
  os << "\nDiff: "
     << (t.full_match()
             ? "all 54 cells match the published table"
             : (t.mismatches_all_disputed()
                    ? "mismatches only in disputed cells"
                    : "mismatches outside the disputed set"))
     << "\n";
  for (int r = 0; r < kNumRows; ++r)
    for (int c = 0; c < kNumCols; ++c) {
      const TableCell& cell = t.cells[r][c];
      if (!cell.matches) {
        os << "  - " << row_name(static_cast<GeometryRow>(r)) << " / "
           << col_name(c) << ": computed " << to_string(cell.computed)
           << ", published " << to_string(cell.expected)
           << (cell.disputed ? " (disputed cell)" : "") << "\n";
        if (!cell.witness.empty()) os << "    witness: " << cell.witness << "\n";
      }
    }
  if (certificates) {
    os << "\nCertificates:\n";
    for (int r = 0; r < kNumRows; ++r)
      for (int c = 0; c < kNumCols; ++c) {
        const TableCell& cell = t.cells[r][c];
        if (cell.certificate.empty() && cell.witness.empty()) continue;
        os << "- " << row_name(static_cast<GeometryRow>(r)) << " / "
           << col_name(c) << " [" << to_string(cell.computed) << "]\n";
        if (!cell.witness.empty()) os << "    witness: " << cell.witness << "\n";
        for (const auto& line : cell.certificate) os << "    * " << line << "\n";
        for (const auto& line : cell.notes) os << "    note: " << line << "\n";
      }
  }
  return os.str();
}

std::string render_json(const ClassificationTable& t, bool certificates) {
  nlohmann::json root;
  root["exit_code"] = t.exit_code();
  root["full_match"] = t.full_match();
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < kNumRows; ++r) {
    nlohmann::json row;
    row["manifold"] = std::string(row_name(static_cast<GeometryRow>(r)));
    nlohmann::json cols = nlohmann::json::array();
    for (int c = 0; c < kNumCols; ++c) {
      const TableCell& cell = t.cells[r][c];
      nlohmann::json jc;
      jc["cell"] = col_name(c);
      jc["computed"] = std::string(to_string(cell.computed));
      jc["expected"] = std::string(to_string(cell.expected));
      jc["matches"] = cell.matches;
      jc["disputed"] = cell.disputed;
      if (!cell.witness.empty()) jc["witness"] = cell.witness;
      if (certificates) {
        jc["certificates"] = cell.certificate;
        if (!cell.notes.empty()) jc["notes"] = cell.notes;
      }
      cols.push_back(std::move(jc));
    }
    row["cells"] = std::move(cols);
    rows.push_back(std::move(row));
  }
  root["rows"] = std::move(rows);
  return root.dump(2) + "\n";
}

std::string render_csv(const ClassificationTable& t) {
  std::ostringstream os;
  os << "manifold";
  for (int c = 0; c < kNumCols; ++c) os << "," << col_name(c);
  os << "\n";
  for (int r = 0; r < kNumRows; ++r) {
    os << row_name(static_cast<GeometryRow>(r));
    for (int c = 0; c < kNumCols; ++c)
      os << "," << to_string(t.cells[r][c].computed);
    os << "\n";
  }
  return os.str();
}

}  // namespace qe3
