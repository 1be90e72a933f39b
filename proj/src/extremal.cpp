#include "ssp/extremal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ssp/families.hpp"

namespace ssp {

ColumnStats column_stats(const std::vector<Int>& values) {
  if (values.empty()) throw std::invalid_argument("column_stats: empty column");
  ColumnStats st;
  st.min_value = values[0];
  for (const Int& v : values)
    if (v < st.min_value) st.min_value = v;
  for (long i = 0; i < (long)values.size(); ++i)
    if (values[i] == st.min_value) st.argmin_set.push_back(i);

  st.max_abs_tail = 0;
  for (long i = 1; i < (long)values.size(); ++i) {
    Int a = abs(values[i]);
    if (a > st.max_abs_tail) st.max_abs_tail = a;
  }
  for (long i = 1; i < (long)values.size(); ++i)
    if (abs(values[i]) == st.max_abs_tail) st.argmax_abs_set.push_back(i);

  for (const Int& v : values) st.sign_vector.push_back(sign_of(v));

  std::set<Int> distinct(values.begin(), values.end());
  st.distinct_count = (long)distinct.size();
  return st;
}

ColumnAnalysis analyze_column(const SchemeId& s, const EigenMatrix& P, long j) {
  if (j < 0 || j > P.d)
    throw std::invalid_argument("analyze_column: j out of range for " + s.str());
  ColumnAnalysis a{s, j, {}, {}};
  a.values.reserve(P.d + 1);
  for (long i = 0; i <= P.d; ++i) a.values.push_back(P.at(i, j));
  a.stats = column_stats(a.values);
  return a;
}

ColumnAnalysis analyze_column(const SchemeId& s, long j) {
  return analyze_column(s, eigenmatrix(s), j);
}

namespace {

ExtremalPrediction make(const char* id, std::vector<long> argmin, bool abs1, bool conj) {
  ExtremalPrediction p;
  p.id = id;
  p.argmin = std::move(argmin);
  p.argmax_abs_at_1 = abs1;
  p.conjectural = conj;
  return p;
}

ExtremalPrediction predict_hamming(const Hamming& s, long j) {
  long d = s.d, q = s.q;
  if (j < 1 || j > d) return {};
  if (q >= 3 && q * j >= q * d - d + 1) {
    // Column minimum sits at i = 1; |column| peaks at i = 1 except for the
    // single known exception column (q,d,j) = (3,4,3), where i = 3 wins.
    bool abs1 = !(q == 3 && d == 4 && j == 3);
    return make("H-THM-NONBINARY", {1}, abs1, false);
  }
  if (q == 2 && 2 * j >= d + 1) {
    if (j % 2 == 0 || j == d) return make("H-COR-BINARY", {1}, false, false);
    return make("H-COR-BINARY", {d}, false, false);
  }
  if (4 * (q - 1) > d * d)  // q > d^2/4 + 1
    return make("H-PROP-LARGE", {d - j + 1}, false, false);
  return {};
}

ExtremalPrediction predict_johnson(const Johnson& s, long j) {
  long n = s.n, d = s.d, e = n - d;
  if (j < 1 || j > d) return {};
  if (j == d) return make("J-PROP-D", {1}, true, false);
  if (n == 2 * d && 2 * j > d) return make("J-COR-KARLOFF", {1}, true, false);
  if (j * (n - 1) >= d * e) return make("J-THM-SMALLEST", {1}, true, false);
  return {};
}

ExtremalPrediction predict_grassmann(const Grassmann& s, long j) {
  long q = s.q, n = s.n, d = s.d;
  if (j < 1 || j > d) return {};
  if (j == d) return make("G-PROP-ABS", {1}, true, false);
  if (q >= 3 || n >= 2 * d + 1) return make("G-THM-SMALLEST-I", {d - j + 1}, true, false);
  // remaining case: q = 2, n = 2d
  if (j >= 7 && j <= d - 5) return make("G-THM-SMALLEST-II", {d - j}, false, false);
  if (d >= 6 && j >= 3 && j <= d - 2) return make("G-CONJ-II", {d - j}, false, true);
  return {};
}

ExtremalPrediction predict_dualpolar(const DualPolar& s, long j) {
  long d = s.d;
  const HalfInt& e = s.e;
  if (j < 1 || j > d) return {};
  if (d >= 3 && j < d && j % 2 == 1) {
    bool abs1 = e > HalfInt::whole(1);
    return make("C-COR", {d}, abs1, false);
  }
  // conjectured location of the column minimum, by case on parity of j, d
  // and the value of e; a small region at q = 2, e = 2 deviates.
  if (s.q == 2 && e == HalfInt::whole(2) && d % 2 == 0 && j >= d - 4) {
    if (j == d - 2 && d >= 6) return make("C-CONJ-IMIN", {2}, false, true);
    if (j == d - 4 && d >= 14) return make("C-CONJ-IMIN", {3}, false, true);
    return {};
  }
  const HalfInt half = HalfInt::parse("1/2");
  const HalfInt one = HalfInt::whole(1);
  const HalfInt three_half = HalfInt::parse("3/2");
  const HalfInt two = HalfInt::whole(2);
  bool abs1 = d >= 3 && (e > one || (j == d && e == one));
  if (j == d && (j % 2 == 0 || e >= one)) return make("C-CONJ-IMIN", {1}, abs1, true);
  if (j % 2 == 1 && (j < d || e <= one)) return make("C-CONJ-IMIN", {d}, abs1, true);
  if (j % 2 == 0) {
    if (e == HalfInt::whole(0)) return make("C-CONJ-IMIN", {(d - j + 2) / 2}, abs1, true);
    if (e == half || e == one) {
      if (d % 2 == 0) return make("C-CONJ-IMIN", {(d - j + 2) / 2}, abs1, true);
      return make("C-CONJ-IMIN", {(d + j - 1) / 2}, abs1, true);
    }
    if (e == three_half || e == two) {
      if (d % 2 == 0) return make("C-CONJ-IMIN", {(d + j) / 2}, abs1, true);
      return make("C-CONJ-IMIN", {(d - j + 3) / 2}, abs1, true);
    }
  }
  return {};
}

ExtremalPrediction predict_bilinear(const Bilinear& s, long j) {
  long q = s.q, d = s.d, e = s.e;
  if (j < 1 || j > d) return {};
  if (j == d) return make("B-PROP-NEG", {1}, true, false);
  if (q >= 4) return make("B-SIGN", {d - j + 1}, true, false);
  if (q == 3 || d != e) return make("B-CONJ", {d - j + 1}, false, true);
  return {};
}

ExtremalPrediction predict_alternating(const Alternating& s, long j) {
  long d = s.n / 2;
  if (j < 1 || j > d) return {};
  return make("A-THM", {d - j + 1}, true, false);
}

ExtremalPrediction predict_hermitian(const Hermitian& s, long j) {
  long q = s.q, d = s.d;
  if (j < 1 || j > d) return {};
  long im = (j % 2 == 1) ? 1 : d - j + 2;
  if (q >= 4) return make("Q-THM", {im}, d >= 3, false);
  return make("Q-CONJ-1", {im}, false, true);
}

}  // namespace

ExtremalPrediction predict_extremal(const SchemeId& s, long j) {
  if (j < 0 || j > s.diameter())
    throw std::invalid_argument("predict_extremal: j out of range for " + s.str());
  switch (s.kind()) {
    case Family::Hamming:
      return predict_hamming(*s.as<Hamming>(), j);
    case Family::Johnson:
      return predict_johnson(*s.as<Johnson>(), j);
    case Family::Grassmann:
      return predict_grassmann(*s.as<Grassmann>(), j);
    case Family::DualPolar:
      return predict_dualpolar(*s.as<DualPolar>(), j);
    case Family::Bilinear:
      return predict_bilinear(*s.as<Bilinear>(), j);
    case Family::Alternating:
      return predict_alternating(*s.as<Alternating>(), j);
    case Family::Hermitian:
      return predict_hermitian(*s.as<Hermitian>(), j);
  }
  return {};
}

long q0_threshold(long d) {
  if (d < 2 || d > 100) throw std::invalid_argument("q0_threshold: need 2 <= d <= 100");
  long cap = (d * d) / 4 + 2;
  long worst_fail = 1;
  for (long q = 2; q <= cap; ++q) {
    ClassicalParams cp{d, 1, 0, Int(q - 1)};
    EigenMatrix P = p_matrix_recurrence(cp);
    bool ok = true;
    for (long j = 1; j <= d && ok; ++j) {
      const Int& cand = P.at(d - j + 1, j);
      for (long i = 0; i <= d; ++i) {
        if (i == d - j + 1) continue;
        if (P.at(i, j) <= cand) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) worst_fail = q;
  }
  return worst_fail + 1;
}

LargeBetaReport largebeta_onset(long d, const Int& b, const Int& alpha, const Int& beta_lo,
                                const Int& beta_hi) {
  if (d < 1) throw std::invalid_argument("largebeta_onset: need d >= 1");
  if (beta_lo > beta_hi) throw std::invalid_argument("largebeta_onset: empty beta range");
  LargeBetaReport rep;
  rep.d = d;
  rep.b = b;
  rep.alpha = alpha;

  for (Int beta = beta_lo; beta <= beta_hi; ++beta) {
    LargeBetaRow row;
    row.beta = beta;
    ClassicalParams cp{d, b, alpha, beta};
    EigenMatrix P;
    try {
      P = p_matrix_recurrence(cp);
      row.valid = true;
    } catch (const invalid_parameters& ex) {
      row.note = ex.what();
      rep.rows.push_back(row);
      continue;
    }

    row.sign_ok = true;
    for (long i = 0; i <= d && row.sign_ok; ++i)
      for (long j = 0; j <= d; ++j) {
        int sg = sign_of(P.at(i, j));
        int want = (i + j <= d) ? 1 : ((i + j - d) % 2 == 0 ? 1 : -1);
        if (sg != want) {
          row.sign_ok = false;
          break;
        }
      }

    row.min_ok = true;
    for (long j = 1; j <= d && row.min_ok; ++j) {
      const Int& cand = P.at(d - j + 1, j);
      for (long i = 0; i <= d; ++i)
        if (P.at(i, j) < cand) {
          row.min_ok = false;
          break;
        }
    }

    row.monotone_ok = true;
    for (long j = 1; j <= d && row.monotone_ok; ++j)
      for (long i = 0; i < d; ++i)
        if (!(abs(P.at(i + 1, j)) < abs(P.at(i, j)))) {
          row.monotone_ok = false;
          break;
        }

    rep.rows.push_back(row);
  }

  auto onset = [&](auto flag) -> std::optional<Int> {
    std::optional<Int> best;
    // walk from the top; once a valid row fails, everything below is ruled out
    for (auto it = rep.rows.rbegin(); it != rep.rows.rend(); ++it) {
      if (!it->valid) continue;
      if (!flag(*it)) break;
      best = it->beta;
    }
    return best;
  };
  rep.onset_sign = onset([](const LargeBetaRow& r) { return r.sign_ok; });
  rep.onset_min = onset([](const LargeBetaRow& r) { return r.min_ok; });
  rep.onset_monotone = onset([](const LargeBetaRow& r) { return r.monotone_ok; });
  rep.onset_all =
      onset([](const LargeBetaRow& r) { return r.sign_ok && r.min_ok && r.monotone_ok; });
  return rep;
}

}  // namespace ssp
