#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssp/schemes.hpp"

namespace ssp {

// Extremal data of one eigenmatrix column, all computed exactly.
// Ties are reported as full index sets.
struct ColumnStats {
  Int min_value;
  std::vector<long> argmin_set;      // i in 0..d attaining the minimum
  Int max_abs_tail;                  // max |P_ij| over 1 <= i <= d (0 when d = 0)
  std::vector<long> argmax_abs_set;  // i in 1..d attaining max_abs_tail
  std::vector<int> sign_vector;      // sign of P_ij, i = 0..d (+1 / 0 / -1)
  long distinct_count = 0;
};

struct ColumnAnalysis {
  SchemeId scheme;
  long j = 0;
  std::vector<Int> values;  // P_{0j} .. P_{dj}
  ColumnStats stats;
};

ColumnStats column_stats(const std::vector<Int>& values);

ColumnAnalysis analyze_column(const SchemeId& s, long j);
ColumnAnalysis analyze_column(const SchemeId& s, const EigenMatrix& P, long j);

// Registry-backed prediction of where column j attains its minimum, and
// whether |P_ij| over i >= 1 peaks at i = 1. `id` names the supporting
// result; conjectural marks predictions that rest on an unproved statement.
// When no registered result covers (scheme, j), id is "no-prediction" and
// argmin is empty.
struct ExtremalPrediction {
  std::string id = "no-prediction";
  std::vector<long> argmin;
  bool argmax_abs_at_1 = false;
  bool conjectural = false;
};

ExtremalPrediction predict_extremal(const SchemeId& s, long j);

// Smallest q0 such that for every q in [q0, floor(d^2/4)+2] and every
// j in 1..d, the entry at i = d-j+1 is the unique minimum of column j of
// the Hamming eigenmatrix. Larger q need not be tested: beyond the cap the
// property always holds. Requires 2 <= d <= 100.
long q0_threshold(long d);

// Per-beta conclusions for the classical-parameter family (d, b, alpha, beta)
// as beta grows:
//   sign_ok     entries positive on i+j <= d, sign (-1)^(i+j-d) below
//   min_ok      for every j >= 1 the entry at i = d-j+1 is a column minimum
//   monotone_ok for every j >= 1, |P_{i+1,j}| < |P_ij| for 0 <= i < d
struct LargeBetaRow {
  Int beta;
  bool valid = false;
  bool sign_ok = false;
  bool min_ok = false;
  bool monotone_ok = false;
  std::string note;
};

struct LargeBetaReport {
  long d = 0;
  Int b, alpha;
  std::vector<LargeBetaRow> rows;
  // Smallest tested beta from which the flag holds for every valid later
  // beta in the range; unset when no such beta exists in the range.
  std::optional<Int> onset_sign, onset_min, onset_monotone, onset_all;
};

LargeBetaReport largebeta_onset(long d, const Int& b, const Int& alpha, const Int& beta_lo,
                                const Int& beta_hi);

}  // namespace ssp
