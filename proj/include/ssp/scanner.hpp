#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssp/schemes.hpp"
#include "ssp/theorems.hpp"

namespace ssp {

long distinct_count(const EigenMatrix& P, long j);
long distinct_count(const SchemeId& s, long j);

// One column of a Hamming matrix with repeated values: the coinciding row
// pairs (chained within each group of equal entries) and, for each pair,
// the first matching explanation tag:
//   L-coin2-i..iv, L-coinq-i..iii, zero-pair, unexplained
struct CoincidenceRow {
  long d = 0, q = 0, j = 0;
  long distinct = 0;
  std::vector<std::pair<long, long>> pairs;
  std::vector<std::string> explanations;  // aligned with pairs
};

CoincidenceRow explain_coincidences(long d, long q, long j);

// Number of connected components of the distance-j graph: the sum of the
// multiplicities m_i over the rows i whose column-j entry equals the valency.
Int connected_components(const SchemeId& s, long j);

struct SrgParams {
  Int v, k, lambda, mu;
};

// Standard parameters when the distance-j graph is connected with exactly
// three distinct eigenvalues; absent otherwise.
std::optional<SrgParams> srg_params(const SchemeId& s, long j);

// Per-component parameters when the column has exactly three distinct values
// (each component then carries the same spectrum); v is the component order.
std::optional<SrgParams> component_srg_params(const SchemeId& s, long j);

struct CoincidenceScan {
  std::string box;
  long max_missing = 1;
  std::vector<CoincidenceRow> rows;  // sorted by (d, q, j)
};

// All Hamming columns in the box with 1 <= (d+1) - distinct <= max_missing.
// Box variables: q, d.
CoincidenceScan scan_coincidences(const Box& box, long max_missing, int jobs = 0);
CoincidenceScan scan_coincidences(long max_missing, int jobs = 0);  // default box

struct ZeroHit {
  long d = 0, j = 0, i = 0;
  std::string tag;  // L-zero-i..iv, transpose:<tag>, middle-column, unlisted
};

struct ZeroScan {
  long d_max = 0;
  std::vector<ZeroHit> hits;  // K_j(i) = 0 with i <= d/2, j <= d/2, sorted (d, j, i)
  std::vector<std::string> notes;
};

// Integral zeros of binary Krawtchouk columns, with each zero attributed to
// the known infinite families where possible.
ZeroScan krawtchouk_zero_scan(long d_max, int jobs = 0);

}  // namespace ssp
