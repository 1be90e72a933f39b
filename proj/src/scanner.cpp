#include "ssp/scanner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "ssp/families.hpp"

namespace ssp {

namespace {

SchemeId hamming_id(long d, long q) {
  return SchemeId(SchemeId::Variant(Hamming{d, q}));
}

std::vector<Int> column(const EigenMatrix& P, long j) {
  std::vector<Int> v;
  v.reserve(P.d + 1);
  for (long i = 0; i <= P.d; ++i) v.push_back(P.at(i, j));
  return v;
}

}  // namespace

long distinct_count(const EigenMatrix& P, long j) {
  if (j < 0 || j > P.d) throw std::invalid_argument("distinct_count: column out of range");
  std::set<Int> seen;
  for (long i = 0; i <= P.d; ++i) seen.insert(P.at(i, j));
  return (long)seen.size();
}

long distinct_count(const SchemeId& s, long j) {
  return distinct_count(p_matrix_recurrence(s), j);
}

namespace {

// first matching rule for P(h,j) == P(i,j) in H(d,q), h < i
std::string pair_tag(long d, long q, long j, long h, long i, const std::vector<Int>& colv) {
  if (q == 2) {
    if (j % 2 == 0 && i == d - h) return "L-coin2-i";
    if (d == 2 * j && h % 2 == 1 && i % 2 == 1) return "L-coin2-ii";
    if (d == 2 * j - 1 && i == h + 1 && h % 2 == 1 && (h + 1) / 2 <= j - 1)
      return "L-coin2-iii";
    if (j == d && (i - h) % 2 == 0) return "L-coin2-iv";
  }
  if (j == 0) return "L-coinq-i";
  if (j == 2 && q * (h + i - 1) == 2 * (d - 1) * (q - 1)) return "L-coinq-ii";
  if (q * j == (q - 1) * d + 1 && h == 1 && i == 2) return "L-coinq-iii";
  if (colv[h] == 0 && colv[i] == 0) return "zero-pair";
  return "unexplained";
}

}  // namespace

CoincidenceRow explain_coincidences(long d, long q, long j) {
  EigenMatrix P = p_matrix_recurrence(hamming_id(d, q));
  if (j < 0 || j > d) throw std::invalid_argument("explain_coincidences: column out of range");
  CoincidenceRow row;
  row.d = d;
  row.q = q;
  row.j = j;
  std::vector<Int> colv = column(P, j);
  row.distinct = distinct_count(P, j);
  // chain each group of equal entries through its consecutive members
  std::map<Int, std::vector<long>> groups;
  for (long i = 0; i <= d; ++i) groups[colv[i]].push_back(i);
  std::vector<std::pair<long, long>> pairs;
  for (const auto& [val, members] : groups)
    for (size_t t = 0; t + 1 < members.size(); ++t)
      pairs.emplace_back(members[t], members[t + 1]);
  std::sort(pairs.begin(), pairs.end());
  for (auto [h, i] : pairs) {
    row.pairs.emplace_back(h, i);
    row.explanations.push_back(pair_tag(d, q, j, h, i, colv));
  }
  return row;
}

Int connected_components(const SchemeId& s, long j) {
  EigenMatrix P = p_matrix_recurrence(s);
  if (j < 0 || j > P.d)
    throw std::invalid_argument("connected_components: column out of range");
  std::vector<Int> m = multiplicities(s, P);
  Int total = 0;
  for (long i = 0; i <= P.d; ++i)
    if (P.at(i, j) == P.at(0, j)) total += m[i];
  return total;
}

namespace {

std::optional<SrgParams> srg_from_column(const Int& v, const std::vector<Int>& colv) {
  std::set<Int> values(colv.begin(), colv.end());
  if (values.size() != 3) return std::nullopt;
  Int k = colv[0];
  std::vector<Int> rest;
  for (const Int& x : values)
    if (x != k) rest.push_back(x);
  if (rest.size() != 2) return std::nullopt;  // valency coincides with another value
  Int r = std::max(rest[0], rest[1]);
  Int s = std::min(rest[0], rest[1]);
  SrgParams p;
  p.v = v;
  p.k = k;
  p.mu = k + r * s;
  p.lambda = p.mu + r + s;
  if (p.k * (p.k - p.lambda - 1) != (p.v - p.k - 1) * p.mu)
    throw consistency_error("srg_params: parameter identity failed");
  return p;
}

}  // namespace

std::optional<SrgParams> srg_params(const SchemeId& s, long j) {
  EigenMatrix P = p_matrix_recurrence(s);
  if (j < 0 || j > P.d) throw std::invalid_argument("srg_params: column out of range");
  if (connected_components(s, j) != 1) return std::nullopt;
  return srg_from_column(vertex_count(s), column(P, j));
}

std::optional<SrgParams> component_srg_params(const SchemeId& s, long j) {
  EigenMatrix P = p_matrix_recurrence(s);
  if (j < 0 || j > P.d)
    throw std::invalid_argument("component_srg_params: column out of range");
  Int c = connected_components(s, j);
  Int v = vertex_count(s);
  if (v % c != 0) return std::nullopt;
  return srg_from_column(v / c, column(P, j));
}

CoincidenceScan scan_coincidences(const Box& box, long max_missing, int jobs) {
  if (max_missing < 1) throw std::invalid_argument("scan: max_missing must be >= 1");
  const auto* qs = box.find("q");
  const auto* ds = box.find("d");
  if (!qs || !ds) throw std::invalid_argument("scan: box needs variables q and d");
  for (const auto& [var, vals] : box.vars)
    if (var != "q" && var != "d")
      throw std::invalid_argument("scan: unknown box variable '" + var + "'");
  std::vector<std::pair<long, long>> grid;  // (d, q)
  for (HalfInt dh : *ds)
    for (HalfInt qh : *qs) grid.emplace_back(dh.integer(), qh.integer());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<std::vector<CoincidenceRow>> found(grid.size());
  auto run_range = [&](size_t lo, size_t hi) {
    for (size_t k = lo; k < hi; ++k) {
      auto [d, q] = grid[k];
      if (d < 1 || q < 2) continue;
      EigenMatrix P = p_matrix_recurrence(hamming_id(d, q));
      for (long j = 0; j <= d; ++j) {
        long missing = (d + 1) - distinct_count(P, j);
        if (missing >= 1 && missing <= max_missing)
          found[k].push_back(explain_coincidences(d, q, j));
      }
    }
  };
  size_t nthreads = std::min<size_t>(resolve_jobs(jobs), std::max<size_t>(grid.size(), 1));
  if (nthreads <= 1 || grid.size() <= 1) {
    run_range(0, grid.size());
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (grid.size() + nthreads - 1) / nthreads;
    for (size_t th = 0; th < nthreads; ++th) {
      size_t lo = th * chunk, hi = std::min(grid.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  CoincidenceScan scan;
  scan.box = box.str();
  scan.max_missing = max_missing;
  for (auto& rows : found)
    for (auto& r : rows) scan.rows.push_back(std::move(r));
  return scan;
}

CoincidenceScan scan_coincidences(long max_missing, int jobs) {
  // default box: every printed coincidence table row fits inside it
  Box box = Box::parse("q=2,d=1..19");
  CoincidenceScan a = scan_coincidences(box, max_missing, jobs);
  Box wide = Box::parse("q=3..10,d=1..12");
  CoincidenceScan b = scan_coincidences(wide, max_missing, jobs);
  CoincidenceScan scan;
  scan.box = box.str() + ";" + wide.str();
  scan.max_missing = max_missing;
  scan.rows = std::move(a.rows);
  for (auto& r : b.rows) scan.rows.push_back(std::move(r));
  std::sort(scan.rows.begin(), scan.rows.end(), [](const auto& x, const auto& y) {
    return std::tie(x.d, x.q, x.j) < std::tie(y.d, y.q, y.j);
  });
  return scan;
}

namespace {

bool zero_family_i(long d, long j, long i) { return j == 1 && d == 2 * i; }

bool zero_family_ii(long d, long j, long i) {
  if (j != 2) return false;
  for (long h = 3; h * h <= d; ++h)
    if (d == h * h && i == h * (h - 1) / 2) return true;
  return false;
}

bool zero_family_iii(long d, long j, long i) {
  if (j != 3) return false;
  for (long h = 2; 3 * h * h <= d; ++h) {
    if (d == 3 * h * h + 4 * h + 2 && i == h * (3 * h + 1) / 2) return true;
    if (d == 3 * h * h + 2 * h + 1 && i == h * (3 * h - 1) / 2) return true;
  }
  return false;
}

bool zero_family_iv(long d, long j, long i) {
  return j % 2 == 0 && j >= 2 && d == 4 * j + 1 && i == 2 * j - 1;
}

std::string zero_tag(long d, long j, long i) {
  if (zero_family_i(d, j, i)) return "L-zero-i";
  if (zero_family_ii(d, j, i)) return "L-zero-ii";
  if (zero_family_iii(d, j, i)) return "L-zero-iii";
  if (zero_family_iv(d, j, i)) return "L-zero-iv";
  if (zero_family_i(d, i, j)) return "transpose:L-zero-i";
  if (zero_family_ii(d, i, j)) return "transpose:L-zero-ii";
  if (zero_family_iii(d, i, j)) return "transpose:L-zero-iii";
  if (zero_family_iv(d, i, j)) return "transpose:L-zero-iv";
  if (d == 2 * j && i % 2 == 1) return "middle-column";
  if (d == 2 * i && j % 2 == 1) return "transpose:middle-column";
  return "unlisted";
}

}  // namespace

ZeroScan krawtchouk_zero_scan(long d_max, int jobs) {
  if (d_max < 1) throw std::invalid_argument("zero scan: d_max must be >= 1");
  ZeroScan scan;
  scan.d_max = d_max;
  std::vector<std::vector<ZeroHit>> hits(d_max + 1);
  std::vector<std::vector<std::string>> notes(d_max + 1);
  auto run_range = [&](long lo, long hi) {
    for (long d = lo; d < hi; ++d) {
      EigenMatrix P = p_matrix_recurrence(hamming_id(d, 2));
      for (long j = 0; 2 * j <= d; ++j)
        for (long i = 0; 2 * i <= d; ++i) {
          if (P.at(i, j) != 0) continue;
          // zero symmetry within the full column
          if (P.at(d - i, j) != 0)
            notes[d].push_back("zero symmetry broken at (d=" + std::to_string(d) +
                               ",j=" + std::to_string(j) + ",i=" + std::to_string(i) + ")");
          ZeroHit hit{d, j, i, zero_tag(d, j, i)};
          if (hit.tag == "unlisted")
            notes[d].push_back("unlisted zero at (d=" + std::to_string(d) +
                               ",j=" + std::to_string(j) + ",i=" + std::to_string(i) + ")");
          hits[d].push_back(hit);
        }
      // listed families must actually be zeros where they land in range
      auto expect_zero = [&](long j, long i, const std::string& fam) {
        if (j < 0 || i < 0 || 2 * j > d || 2 * i > d) return;
        if (P.at(i, j) != 0)
          notes[d].push_back(fam + " claims a zero at (d=" + std::to_string(d) +
                             ",j=" + std::to_string(j) + ",i=" + std::to_string(i) +
                             ") but the entry is nonzero");
      };
      if (d % 2 == 0) expect_zero(1, d / 2, "L-zero-i");
      for (long h = 3; h * h <= d; ++h)
        if (d == h * h) expect_zero(2, h * (h - 1) / 2, "L-zero-ii");
      for (long h = 2; 3 * h * h <= d; ++h) {
        if (d == 3 * h * h + 4 * h + 2) expect_zero(3, h * (3 * h + 1) / 2, "L-zero-iii");
        if (d == 3 * h * h + 2 * h + 1) expect_zero(3, h * (3 * h - 1) / 2, "L-zero-iii");
      }
      if (d % 8 == 1 && d >= 9) expect_zero((d - 1) / 4, (d - 3) / 2, "L-zero-iv");
    }
  };
  long lo = 1, hi = d_max + 1;
  size_t nthreads = std::min<size_t>(resolve_jobs(jobs), (size_t)(hi - lo));
  if (nthreads <= 1) {
    run_range(lo, hi);
  } else {
    std::vector<std::thread> pool;
    long chunk = (hi - lo + (long)nthreads - 1) / (long)nthreads;
    for (size_t th = 0; th < nthreads; ++th) {
      long a = lo + (long)th * chunk, b = std::min(hi, a + chunk);
      if (a >= b) break;
      pool.emplace_back(run_range, a, b);
    }
    for (auto& th : pool) th.join();
  }
  for (long d = 1; d <= d_max; ++d) {
    for (auto& h : hits[d]) scan.hits.push_back(std::move(h));
    for (auto& n : notes[d]) scan.notes.push_back(std::move(n));
  }
  return scan;
}

}  // namespace ssp
