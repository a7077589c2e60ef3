#pragma once

#include <array>
#include <string>
#include <vector>

#include "qe3/products.hpp"
#include "qe3/solver.hpp"

namespace qe3 {

/// Row order of the classification table (nine Thurston geometries).
enum class GeometryRow { R3, SU2, SL2R, Nil, E11, E2, H2xR, S2xR, H3 };
inline constexpr int kNumRows = 9;
/// Column order: (m>0,A>0), (m>0,A=0), (m>0,A<0), (m<0,A>0), (m<0,A=0),
/// (m<0,A<0).
inline constexpr int kNumCols = 6;

std::string_view row_name(GeometryRow row);
/// sign_m in {+1,-1}, sign_A in {+1,0,-1} for column col.
int col_sign_m(int col);
int col_sign_A(int col);
std::string col_name(int col);

struct TableCell {
  Verdict computed = Verdict::None;
  Verdict expected = Verdict::None;
  bool disputed = false;  // documented-discrepancy marker for this cell
  bool matches = false;
  std::string witness;  // human-readable witness summary for Exists/TrivialOnly
  std::vector<std::string> certificate;
  std::vector<std::string> notes;
};

struct ClassificationTable {
  std::array<std::array<TableCell, kNumCols>, kNumRows> cells{};

  bool full_match() const;
  /// true when every mismatching cell carries the disputed marker
  bool mismatches_all_disputed() const;
  /// 0 full match, 2 disputed-only mismatches, 1 otherwise
  int exit_code() const;
};

/// The published reference verdicts, embedded as data.  The one cell whose
/// published value is contradicted by a machine-checked witness carries the
/// disputed marker (SL2R row, m>0 A<0 column).
Verdict expected_verdict(GeometryRow row, int col);
bool cell_disputed(GeometryRow row, int col);

/// Computes all 54 verdicts from the solver and product analyses and diffs
/// them against the embedded expectation.
ClassificationTable compute_table(unsigned seed = 0, int n_confirm = 10);

std::string render_markdown(const ClassificationTable& t,
                            bool certificates = false);
std::string render_json(const ClassificationTable& t, bool certificates = false);
std::string render_csv(const ClassificationTable& t);

}  // namespace qe3
