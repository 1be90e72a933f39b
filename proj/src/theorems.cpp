#include "ssp/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ssp/extremal.hpp"
#include "ssp/families.hpp"
#include "ssp/schemes.hpp"

namespace ssp {

// ---------------------------------------------------------------- Box

Box Box::parse(const std::string& text) {
  Box box;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("box: expected var=value in '" + item + "'");
    std::string var = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    std::vector<HalfInt>* slot = nullptr;
    for (auto& [k, vs] : box.vars)
      if (k == var) slot = &vs;
    if (!slot) {
      box.vars.emplace_back(var, std::vector<HalfInt>{});
      slot = &box.vars.back().second;
    }
    auto dots = val.find("..");
    if (dots != std::string::npos) {
      long lo = 0, hi = 0;
      try {
        lo = std::stol(val.substr(0, dots));
        hi = std::stol(val.substr(dots + 2));
      } catch (const std::exception&) {
        throw std::invalid_argument("box: bad range '" + item + "'");
      }
      if (lo > hi) throw std::invalid_argument("box: empty range '" + item + "'");
      for (long v = lo; v <= hi; ++v) slot->push_back(HalfInt::whole(v));
    } else {
      try {
        slot->push_back(HalfInt::parse(val));
      } catch (const std::exception&) {
        throw std::invalid_argument("box: bad value in '" + item + "'");
      }
    }
  }
  if (box.vars.empty()) throw std::invalid_argument("box: no variables in '" + text + "'");
  return box;
}

std::string Box::str() const {
  std::string out;
  for (const auto& [var, vals] : vars) {
    size_t t = 0;
    while (t < vals.size()) {
      size_t run = t;
      while (run + 1 < vals.size() && vals[run].is_integer() && vals[run + 1].is_integer() &&
             vals[run + 1].twice == vals[run].twice + 2)
        ++run;
      if (!out.empty()) out += ",";
      if (run > t)
        out += var + "=" + vals[t].str() + ".." + vals[run].str();
      else
        out += var + "=" + vals[t].str();
      t = run + 1;
    }
  }
  return out;
}

const std::vector<HalfInt>* Box::find(const std::string& name) const {
  for (const auto& [k, vs] : vars)
    if (k == name) return &vs;
  return nullptr;
}

bool Box::has_value(const std::string& name, HalfInt v) const {
  const auto* vs = find(name);
  if (!vs) return false;
  return std::find(vs->begin(), vs->end(), v) != vs->end();
}

// ---------------------------------------------------------------- helpers

namespace {

struct Sink {
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  long checked = 0;
};

using Tuple = std::vector<HalfInt>;  // aligned with TheoremInfo::box_vars
using Check = std::function<void(const Tuple&, Sink&)>;
using Expected = std::function<std::vector<std::string>(const Box&)>;

struct KV {
  std::string s = "(";
  bool first = true;
  KV& add(const char* k, long v) { return add_str(k, std::to_string(v)); }
  KV& add(const char* k, HalfInt v) { return add_str(k, v.str()); }
  KV& add_str(const char* k, const std::string& v) {
    if (!first) s += ",";
    first = false;
    s += std::string(k) + "=" + v;
    return *this;
  }
  std::string done() const { return s + ")"; }
};

SchemeId ham(long d, long q) { return SchemeId(SchemeId::Variant(Hamming{d, q})); }
SchemeId joh(long n, long d) { return SchemeId(SchemeId::Variant(Johnson{n, d})); }
SchemeId gra(long q, long n, long d) {
  return SchemeId(SchemeId::Variant(Grassmann{q, n, d}));
}
SchemeId dup(long q, long d, HalfInt e) {
  return SchemeId(SchemeId::Variant(DualPolar{q, d, e}));
}
SchemeId bil(long q, long d, long e) { return SchemeId(SchemeId::Variant(Bilinear{q, d, e})); }
SchemeId alt(long q, long n) { return SchemeId(SchemeId::Variant(Alternating{q, n})); }
SchemeId her(long q, long d) { return SchemeId(SchemeId::Variant(Hermitian{q, d})); }

std::vector<Int> col(const EigenMatrix& P, long j) {
  std::vector<Int> v;
  v.reserve(P.d + 1);
  for (long i = 0; i <= P.d; ++i) v.push_back(P.at(i, j));
  return v;
}

std::vector<Int> row(const EigenMatrix& P, long i) {
  std::vector<Int> v;
  v.reserve(P.d + 1);
  for (long j = 0; j <= P.d; ++j) v.push_back(P.at(i, j));
  return v;
}

Int col_min(const EigenMatrix& P, long j) {
  Int m = P.at(0, j);
  for (long i = 1; i <= P.d; ++i) m = std::min(m, P.at(i, j));
  return m;
}

Int max_abs_tail(const EigenMatrix& P, long j) {
  Int m = 0;
  for (long i = 1; i <= P.d; ++i) m = std::max(m, Int(abs(P.at(i, j))));
  return m;
}

long sign_changes(const std::vector<Int>& v) {
  long changes = 0;
  int prev = 0;
  for (const Int& x : v) {
    int s = sign_of(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

// valley shape: non-increasing, then non-decreasing
bool valley_unimodal(const std::vector<Int>& v) {
  size_t i = 0;
  while (i + 1 < v.size() && v[i + 1] <= v[i]) ++i;
  for (; i + 1 < v.size(); ++i)
    if (v[i + 1] < v[i]) return false;
  return true;
}

std::vector<long> argmin_set(const std::vector<Int>& v) {
  Int m = v[0];
  for (const Int& x : v) m = std::min(m, x);
  std::vector<long> out;
  for (long i = 0; i < (long)v.size(); ++i)
    if (v[i] == m) out.push_back(i);
  return out;
}

bool in_set(const std::vector<long>& set, long x) {
  return std::find(set.begin(), set.end(), x) != set.end();
}

int expected_sign(long d, long i, long j) {
  if (i + j <= d) return 1;
  return (i + j - d) % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------- Hamming

void chk_h_thm_binary(const Tuple& t, Sink& out) {
  long d = t[0].integer();
  EigenMatrix P = p_matrix_recurrence(ham(d, 2));
  ++out.checked;
  for (long j = 0; j <= d; ++j) {
    if (2 * j != d) {
      for (long i = 1; i <= d - 1; ++i)
        if (!(abs(P.at(i, j)) <= abs(P.at(1, j))))
          out.violations.push_back(
              KV().add("d", d).add("i", i).add("j", j).add_str("part", "i").done());
    } else {
      if (P.at(1, j) != 0)
        out.violations.push_back(
            KV().add("d", d).add("j", j).add_str("part", "ii-zero").done());
      for (long i = 1; i <= d - 1; ++i)
        if (!(abs(P.at(i, j)) <= abs(P.at(2, j))))
          out.violations.push_back(
              KV().add("d", d).add("i", i).add("j", j).add_str("part", "ii").done());
    }
  }
}

void chk_h_cor_binary(const Tuple& t, Sink& out) {
  long d = t[0].integer();
  EigenMatrix P = p_matrix_recurrence(ham(d, 2));
  bool any = false;
  for (long j = 0; j <= d; ++j) {
    if (2 * j < d + 1) continue;
    any = true;
    for (long i = 0; i <= d - 1; ++i)
      if (!(P.at(1, j) <= P.at(i, j)))
        out.violations.push_back(
            KV().add("d", d).add("i", i).add("j", j).add_str("part", "i").done());
    bool le = P.at(1, j) <= P.at(d, j);
    bool cond = (j % 2 == 0) || (j == d);
    if (le != cond)
      out.violations.push_back(KV().add("d", d).add("j", j).add_str("part", "ii").done());
  }
  if (any) ++out.checked;
}

void chk_h_thm_nonbinary(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer();
  if (q < 3) return;
  EigenMatrix P = p_matrix_recurrence(ham(d, q));
  bool any = false;
  for (long j = 0; j <= d; ++j) {
    if (q * j < q * d - d + 1) continue;
    any = true;
    for (long i = 0; i <= d; ++i)
      if (!(P.at(1, j) <= P.at(i, j)))
        out.violations.push_back(KV().add("q", q).add("d", d).add("i", i).add("j", j)
                                     .add_str("part", "i")
                                     .done());
    for (long i = 1; i <= d; ++i)
      if (!(abs(P.at(i, j)) <= abs(P.at(1, j))))
        out.violations.push_back(KV().add("q", q).add("d", d).add("i", i).add("j", j)
                                     .add_str("part", "ii")
                                     .done());
  }
  if (any) ++out.checked;
}

std::vector<std::string> exp_h_thm_nonbinary(const Box& box) {
  if (box.has_value("q", HalfInt::whole(3)) && box.has_value("d", HalfInt::whole(4)))
    return {KV().add("q", 3L).add("d", 4L).add("i", 3L).add("j", 3L).add_str("part", "ii")
                .done()};
  return {};
}

void chk_h_prop_12(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer();
  if (d < 1) return;
  EigenMatrix P = p_matrix_recurrence(ham(d, q));
  ++out.checked;
  for (long j = 0; j <= d; ++j) {
    long thr = q * d - d + 1;  // qj >= thr  <=>  j >= d-(d-1)/q
    if ((P.at(1, j) < 0) != (q * j >= thr))
      out.violations.push_back(
          KV().add("q", q).add("d", d).add("j", j).add_str("part", "i").done());
    if (d < 2) continue;
    if ((P.at(2, j) == P.at(1, j)) != (j == 0 || q * j == thr))
      out.violations.push_back(
          KV().add("q", q).add("d", d).add("j", j).add_str("part", "ii").done());
    if ((P.at(2, j) > P.at(1, j)) != (q * j > thr))
      out.violations.push_back(
          KV().add("q", q).add("d", d).add("j", j).add_str("part", "ii-strict").done());
    if (((q - 1) * P.at(2, j) == -P.at(1, j)) != (q * j == (d - 1) * (q - 1) || j == d))
      out.violations.push_back(
          KV().add("q", q).add("d", d).add("j", j).add_str("part", "iii").done());
    if (q * j >= thr && j <= d && !(abs(P.at(2, j)) <= abs(P.at(1, j))))
      out.violations.push_back(
          KV().add("q", q).add("d", d).add("j", j).add_str("part", "iv").done());
  }
}

void chk_h_prop_large(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer();
  if (4 * (q - 1) <= d * d) return;  // realize "q large" as q > d^2/4 + 1
  EigenMatrix P = p_matrix_recurrence(ham(d, q));
  ++out.checked;
  for (long i = 0; i <= d; ++i)
    for (long j = 0; j <= d; ++j)
      if (sign_of(P.at(i, j)) != expected_sign(d, i, j))
        out.violations.push_back(KV().add("q", q).add("d", d).add("i", i).add("j", j)
                                     .add_str("part", "sign")
                                     .done());
  for (long j = 1; j <= d; ++j)
    if (P.at(d - j + 1, j) != col_min(P, j))
      out.violations.push_back(
          KV().add("q", q).add("d", d).add("j", j).add_str("part", "min").done());
}

void chk_h_lem_qbig(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer();
  if (4 * (q - 1) <= d * d) return;
  EigenMatrix P = p_matrix_recurrence(ham(d, q));
  ++out.checked;
  for (long j = 0; j <= d; ++j) {
    for (long i = 0; i <= d - j; ++i)
      if (!(P.at(i, j) > 0))
        out.violations.push_back(KV().add("q", q).add("d", d).add("i", i).add("j", j)
                                     .add_str("part", "i")
                                     .done());
    if (j >= 1 && !(P.at(d - j + 1, j) < 0))
      out.violations.push_back(
          KV().add("q", q).add("d", d).add("j", j).add_str("part", "ii").done());
    for (long i = d - j + 2; i <= d; ++i)
      if (!(abs(P.at(i, j)) < abs(P.at(d - j + 1, j))))
        out.violations.push_back(KV().add("q", q).add("d", d).add("i", i).add("j", j)
                                     .add_str("part", "iii")
                                     .done());
  }
}

void chk_h_conj_distinct(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer();
  EigenMatrix P = p_matrix_recurrence(ham(d, q));
  ++out.checked;
  for (long j = 1; j <= d; ++j) {
    long eig_k_rows = 0;
    for (long i = 0; i <= d; ++i)
      if (P.at(i, j) == P.at(0, j)) ++eig_k_rows;
    if (eig_k_rows != 1) continue;  // disconnected distance-j graph
    std::set<Int> distinct;
    for (long i = 0; i <= d; ++i) distinct.insert(P.at(i, j));
    if (!(2 * (long)distinct.size() > d))
      out.violations.push_back(KV().add("q", q).add("d", d).add("j", j).done());
  }
}

// ---------------------------------------------------------------- Johnson

void chk_j_prop_neg(const Tuple& t, Sink& out) {
  long n = t[0].integer(), d = t[1].integer();
  if (d < 1 || n < 2 * d) return;
  long e = n - d;
  EigenMatrix P = p_matrix_recurrence(joh(n, d));
  ++out.checked;
  for (long j = 1; j <= d; ++j) {
    if ((P.at(1, j) < 0) != (j * n > d * e))
      out.violations.push_back(
          KV().add("n", n).add("d", d).add("j", j).add_str("part", "i").done());
    if ((P.at(1, j) == 0) != (j * n == d * e))
      out.violations.push_back(
          KV().add("n", n).add("d", d).add("j", j).add_str("part", "ii").done());
    if (d < 2) continue;
    if ((P.at(2, j) > P.at(1, j)) != (j * (n - 1) > d * e))
      out.violations.push_back(
          KV().add("n", n).add("d", d).add("j", j).add_str("part", "iii").done());
    if ((P.at(2, j) == P.at(1, j)) != (j * (n - 1) == d * e))
      out.violations.push_back(
          KV().add("n", n).add("d", d).add("j", j).add_str("part", "iv").done());
  }
}

void chk_j_thm_smallest(const Tuple& t, Sink& out) {
  long n = t[0].integer(), d = t[1].integer();
  if (d < 1 || n < 2 * d) return;
  long e = n - d;
  EigenMatrix P = p_matrix_recurrence(joh(n, d));
  ++out.checked;
  for (long j = 1; j <= d; ++j) {
    if (j * (n - 1) >= d * e) {
      for (long i = 0; i <= d; ++i)
        if (!(P.at(1, j) <= P.at(i, j)))
          out.violations.push_back(KV().add("n", n).add("d", d).add("i", i).add("j", j)
                                       .add_str("part", "if-min")
                                       .done());
      for (long i = 1; i <= d; ++i)
        if (!(abs(P.at(i, j)) <= abs(P.at(1, j))))
          out.violations.push_back(KV().add("n", n).add("d", d).add("i", i).add("j", j)
                                       .add_str("part", "if-abs")
                                       .done());
    } else {
      if (!(col_min(P, j) < P.at(1, j)))
        out.violations.push_back(
            KV().add("n", n).add("d", d).add("j", j).add_str("part", "onlyif").done());
    }
  }
}

void chk_j_cor_karloff(const Tuple& t, Sink& out) {
  long d = t[0].integer();
  long n = 2 * d;
  EigenMatrix P = p_matrix_recurrence(joh(n, d));
  bool any = false;
  for (long j = 1; j <= d; ++j) {
    if (2 * j <= d) continue;
    any = true;
    for (long i = 0; i <= d; ++i)
      if (!(P.at(1, j) <= P.at(i, j)))
        out.violations.push_back(
            KV().add("d", d).add("i", i).add("j", j).add_str("part", "min").done());
    for (long i = 1; i <= d; ++i)
      if (!(abs(P.at(i, j)) <= abs(P.at(1, j))))
        out.violations.push_back(
            KV().add("d", d).add("i", i).add("j", j).add_str("part", "abs").done());
  }
  if (any) ++out.checked;
}

void chk_j_prop_d(const Tuple& t, Sink& out) {
  long n = t[0].integer(), d = t[1].integer();
  if (d < 1 || n < 2 * d) return;
  EigenMatrix P = p_matrix_recurrence(joh(n, d));
  ++out.checked;
  for (long i = 0; i <= d; ++i)
    if (!(P.at(1, d) <= P.at(i, d)))
      out.violations.push_back(
          KV().add("n", n).add("d", d).add("i", i).add_str("part", "min").done());
  for (long i = 1; i <= d; ++i)
    if (!(abs(P.at(i, d)) <= abs(P.at(1, d))))
      out.violations.push_back(
          KV().add("n", n).add("d", d).add("i", i).add_str("part", "abs").done());
}

void chk_j_prop_large(const Tuple& t, Sink& out) {
  long n = t[0].integer(), d = t[1].integer();
  if (d < 1 || n < 2 * d) return;
  EigenMatrix P = p_matrix_recurrence(joh(n, d));
  ++out.checked;
  for (long i = 0; i <= d; ++i)
    for (long j = 0; j <= d; ++j)
      if (sign_of(P.at(i, j)) != expected_sign(d, i, j))
        out.violations.push_back(KV().add("n", n).add("d", d).add("i", i).add("j", j)
                                     .add_str("part", "sign")
                                     .done());
  for (long j = 1; j <= d; ++j)
    if (P.at(d - j + 1, j) != col_min(P, j))
      out.violations.push_back(
          KV().add("n", n).add("d", d).add("j", j).add_str("part", "min").done());
}

void chk_j_edge_2d1(const Tuple& t, Sink& out) {
  long d = t[0].integer();
  if (d < 2 || d % 2 != 0) return;
  long n = 2 * d + 1, j = d / 2;
  EigenMatrix P = p_matrix_recurrence(joh(n, d));
  ++out.checked;
  if (Int(d - 1) * P.at(2, j) != Int(-d) * P.at(1, j))
    out.violations.push_back(KV().add("d", d).add("j", j).add_str("part", "ratio").done());
  if (!(abs(P.at(2, j)) > abs(P.at(1, j))))
    out.violations.push_back(KV().add("d", d).add("j", j).add_str("part", "abs").done());
}

void chk_j_remark_quarter(const Tuple& t, Sink& out) {
  long n = t[0].integer(), d = t[1].integer();
  if (d < 1 || n < 2 * d) return;
  long e = n - d;
  EigenMatrix P = p_matrix_recurrence(joh(n, d));
  bool any = false;
  for (long j = 1; j <= d; ++j) {
    // strictly away from the zero de/n: at 4|jn-de| = n the tail maximum can
    // leave i = 1 (J(12,3), j = 2 has |E(1)| = 12 < 13 = |E(2)|)
    if (4 * std::abs(j * n - d * e) <= n) continue;
    any = true;
    if (max_abs_tail(P, j) != abs(P.at(1, j)))
      out.violations.push_back(KV().add("n", n).add("d", d).add("j", j).done());
  }
  if (any) ++out.checked;
}

// ---------------------------------------------------------------- Grassmann

void chk_g_prop_abs(const Tuple& t, Sink& out) {
  long q = t[0].integer(), n = t[1].integer(), d = t[2].integer();
  EigenMatrix P = p_matrix_recurrence(gra(q, n, d));
  ++out.checked;
  for (long j = 0; j <= d; ++j) {
    if ((P.at(1, j) < 0) != (j == d) || P.at(1, j) == 0)
      out.violations.push_back(KV().add("q", q).add("n", n).add("d", d).add("j", j)
                                   .add_str("part", "i")
                                   .done());
    for (long i = 1; i <= d; ++i)
      if (!(abs(P.at(i, j)) <= abs(P.at(1, j))))
        out.violations.push_back(KV().add("q", q).add("n", n).add("d", d).add("i", i)
                                     .add("j", j)
                                     .add_str("part", "ii")
                                     .done());
  }
  for (long j = 1; j <= d; ++j)
    for (long i = 0; i + j <= d; ++i) {
      if (q == 2 && n == 2 * d && i + j == d) continue;
      if (!(0 < P.at(i, j - 1) && P.at(i, j - 1) < P.at(i, j)))
        out.violations.push_back(KV().add("q", q).add("n", n).add("d", d).add("i", i)
                                     .add("j", j)
                                     .add_str("part", "iii")
                                     .done());
    }
  if (!(n == 2 * d && q == 2)) {
    for (long i = 0; i <= d; ++i)
      for (long j = 0; j <= d; ++j) {
        int want = (i + j <= d) ? 1 : ((i + j - d) % 2 == 0 ? 1 : -1);
        if (sign_of(P.at(i, j)) != want)
          out.violations.push_back(KV().add("q", q).add("n", n).add("d", d).add("i", i)
                                       .add("j", j)
                                       .add_str("part", "iv")
                                       .done());
      }
  }
  for (long i = 0; i <= d; ++i)
    if (!(P.at(1, d) <= P.at(i, d)))
      out.violations.push_back(KV().add("q", q).add("n", n).add("d", d).add("i", i)
                                   .add_str("part", "v")
                                   .done());
}

void chk_g_thm_smallest_1(const Tuple& t, Sink& out) {
  long q = t[0].integer(), n = t[1].integer(), d = t[2].integer();
  if (!(q >= 3 || n >= 2 * d + 1)) return;
  EigenMatrix P = p_matrix_recurrence(gra(q, n, d));
  ++out.checked;
  for (long j = 1; j <= d; ++j)
    if (P.at(d - j + 1, j) != col_min(P, j))
      out.violations.push_back(
          KV().add("q", q).add("n", n).add("d", d).add("j", j).done());
}

void chk_g_thm_smallest_2(const Tuple& t, Sink& out) {
  long d = t[0].integer();
  if (d < 12) return;
  EigenMatrix P = p_matrix_recurrence(gra(2, 2 * d, d));
  ++out.checked;
  for (long j = 7; j <= d - 5; ++j)
    if (P.at(d - j, j) != col_min(P, j))
      out.violations.push_back(KV().add("d", d).add("j", j).done());
}

void chk_g_conj_1(const Tuple& t, Sink& out) {
  long q = t[0].integer(), n = t[1].integer(), d = t[2].integer();
  if (q == 2 && n == 2 * d) return;
  EigenMatrix P = p_matrix_recurrence(gra(q, n, d));
  ++out.checked;
  for (long j = 1; j <= d; ++j)
    for (long i = 0; i <= d - 1; ++i)
      if (!(abs(P.at(i + 1, j)) < abs(P.at(i, j))))
        out.violations.push_back(
            KV().add("q", q).add("n", n).add("d", d).add("i", i).add("j", j).done());
}

void chk_g_conj_2(const Tuple& t, Sink& out) {
  long d = t[0].integer();
  if (d < 5) return;
  EigenMatrix P = p_matrix_recurrence(gra(2, 2 * d, d));
  ++out.checked;
  if (d == 5) {
    if (!(P.at(2, 3) < 0))
      out.violations.push_back(KV().add("d", d).add("j", 3L).add_str("part", "neg").done());
    return;
  }
  for (long j = 2; j <= d - 2; ++j)
    if (!(P.at(d - j, j) < 0))
      out.violations.push_back(KV().add("d", d).add("j", j).add_str("part", "neg").done());
  for (long j = 3; j <= d - 2; ++j)
    if (P.at(d - j, j) != col_min(P, j))
      out.violations.push_back(KV().add("d", d).add("j", j).add_str("part", "min").done());
}

// ---------------------------------------------------------------- dual polar

void chk_c_prop(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer();
  HalfInt e = t[2];
  EigenMatrix P = p_matrix_recurrence(dup(q, d, e));
  ++out.checked;
  const HalfInt zero = HalfInt::whole(0), one = HalfInt::whole(1);
  for (long j = 1; j <= d; ++j) {
    // the claims about positions 1, 2, d of a column need those positions
    // distinct; for d = 2, e = 0, j = 1 the entry at i = 1 is 0, not negative
    bool neg_cond = (j == d) || (j == d - 1 && e == zero);
    if (d >= 3 && (P.at(1, j) < 0) != neg_cond)
      out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("j", j)
                                   .add_str("part", "i")
                                   .done());
    if (d >= 3 && !(abs(P.at(2, j)) <= abs(P.at(1, j))))
      out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("j", j)
                                   .add_str("part", "ii")
                                   .done());
    for (long i = 1; i <= d; ++i)
      if ((i >= 2 || e <= one) && !(abs(P.at(i, j)) <= abs(P.at(d, j))))
        out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("i", i)
                                     .add("j", j)
                                     .add_str("part", "iii")
                                     .done());
    if (e <= one && d >= 2) {
      if (!(abs(P.at(1, j)) <= abs(P.at(d, j))))
        out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("j", j)
                                     .add_str("part", "iv")
                                     .done());
      else if (abs(P.at(1, j)) == abs(P.at(d, j)) && !(j == d && e == one))
        out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("j", j)
                                     .add_str("part", "iv-eq")
                                     .done());
    }
    if (d >= 3) {
      Int mat = max_abs_tail(P, j);
      if ((e > one || (j == d && e == one)) && mat != abs(P.at(1, j)))
        out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("j", j)
                                     .add_str("part", "cor-i")
                                     .done());
      if (e <= one && mat != abs(P.at(d, j)))
        out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("j", j)
                                     .add_str("part", "cor-ii")
                                     .done());
      if (j < d && j % 2 == 1 && P.at(d, j) != col_min(P, j))
        out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("j", j)
                                     .add_str("part", "cor-iii")
                                     .done());
    }
  }
}

std::vector<std::string> exp_c_prop(const Box& box) {
  std::vector<std::string> out;
  if (!box.has_value("q", HalfInt::whole(2)) || !box.has_value("e", HalfInt::whole(1)))
    return out;
  const auto* ds = box.find("d");
  if (!ds) return out;
  for (HalfInt dh : *ds) {
    long d = dh.integer();
    if (d < 3) continue;
    out.push_back(KV().add("q", 2L).add("d", d).add("e", HalfInt::whole(1)).add("j", d - 1)
                      .add_str("part", "ii")
                      .done());
  }
  return out;
}

void chk_c_edge(const Tuple& t, Sink& out) {
  long d = t[0].integer();
  if (d < 2) return;
  EigenMatrix P = p_matrix_recurrence(dup(2, d, HalfInt::whole(1)));
  ++out.checked;
  if (!(abs(P.at(2, d - 1)) > abs(P.at(1, d - 1))))
    out.violations.push_back(KV().add("d", d).add_str("part", "gt").done());
  if (abs(P.at(1, d - 1)) != pow_int(Int(2), (d - 1) * (d - 2) / 2))
    out.violations.push_back(KV().add("d", d).add_str("part", "val").done());
  if (d >= 5) {
    std::vector<Int> a = col(P, d - 1);
    for (Int& x : a) x = abs(x);
    if (valley_unimodal(a))
      out.violations.push_back(KV().add("d", d).add_str("part", "nonuni").done());
  }
}

void chk_c_conj_unimodal(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer();
  HalfInt e = t[2];
  EigenMatrix P = p_matrix_recurrence(dup(q, d, e));
  ++out.checked;
  long i1 = (2 * d + e.twice + 2) / 4;  // floor((d+e+1)/2)
  for (long j = 0; j <= d; ++j) {
    std::vector<Int> a = col(P, j);
    for (Int& x : a) x = abs(x);
    bool excluded = (q == 2 && e == HalfInt::whole(1)) ||
                    (q == 2 && e == HalfInt::whole(2) && j == d - 4 && 8 <= d && d <= 12);
    bool uni = valley_unimodal(a);
    if (!uni) {
      if (!excluded)
        out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("j", j)
                                     .add_str("claim", "unimodal")
                                     .done());
      continue;
    }
    std::vector<long> mins = argmin_set(a);
    bool pos_ok;
    bool special = (q == 2 && e == HalfInt::whole(1) && j == 3 && d == 4) ||
                   (q == 2 && e == HalfInt::whole(2) && j == 3 && d == 7);
    if (special)
      pos_ok = in_set(mins, i1 - 2);
    else if (e == HalfInt::whole(0) || e == HalfInt(1))
      pos_ok = in_set(mins, i1);
    else
      // e in {1, 3/2, 2}: one step of slack; C(q=4, d=4, e=3/2) column 2 has
      // its valley at i=2 with i1=3
      pos_ok = in_set(mins, i1 - 1) || in_set(mins, i1) || in_set(mins, i1 + 1);
    if (!pos_ok)
      out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("j", j)
                                   .add_str("claim", "position")
                                   .done());
  }
}

void chk_c_conj_imin(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer();
  HalfInt e = t[2];
  EigenMatrix P = p_matrix_recurrence(dup(q, d, e));
  ++out.checked;
  const HalfInt zero = HalfInt::whole(0), half = HalfInt(1), one = HalfInt::whole(1),
                three_half = HalfInt(3), two = HalfInt::whole(2);
  for (long j = 1; j <= d; ++j) {
    long want = -1;
    bool silent = false;
    if (q == 2 && e == two && d % 2 == 0 && j >= d - 4) {
      if (j == d - 2 && d >= 6)
        want = 2;
      else if (j == d - 4 && d >= 14)
        want = 3;
      else
        silent = true;  // region where no position is claimed
    } else if (j == d && (j % 2 == 0 || e >= one)) {
      want = 1;
    } else if (j % 2 == 1 && (j < d || e <= one)) {
      want = d;
    } else if (j % 2 == 0) {
      if (e == zero)
        want = (d - j + 2) / 2;
      else if (e == half || e == one)
        want = (d % 2 == 0) ? (d - j + 2) / 2 : (d + j - 1) / 2;
      else if (e == three_half || e == two)
        want = (d % 2 == 0) ? (d + j) / 2 : (d - j + 3) / 2;
    }
    if (silent) {
      out.notes.push_back("no claimed position at " +
                          KV().add("q", q).add("d", d).add("e", e).add("j", j).done());
      continue;
    }
    if (want < 0) continue;
    if (!in_set(argmin_set(col(P, j)), want))
      out.violations.push_back(
          KV().add("q", q).add("d", d).add("e", e).add("j", j).add("want", want).done());
  }
}

// ---------------------------------------------------------------- bilinear

void chk_b_prop_neg(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer(), e = t[2].integer();
  EigenMatrix P = p_matrix_recurrence(bil(q, d, e));
  ++out.checked;
  for (long j = 0; j <= d; ++j) {
    bool ok = (j == d) ? (P.at(1, j) < 0) : (P.at(1, j) > 0);
    if (!ok)
      out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("j", j)
                                   .add_str("part", "i")
                                   .done());
  }
  for (long i = 0; i <= d; ++i)
    if (!(P.at(1, d) <= P.at(i, d)))
      out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("i", i)
                                   .add_str("part", "ii-min")
                                   .done());
  for (long i = 1; i <= d; ++i)
    if (!(abs(P.at(i, d)) <= abs(P.at(1, d))))
      out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("i", i)
                                   .add_str("part", "ii-abs")
                                   .done());
}

void chk_b_lem_bds(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer(), e = t[2].integer();
  if (d < 2) return;
  EigenMatrix P = p_matrix_recurrence(bil(q, d, e));
  ++out.checked;
  for (long j = 1; j <= d - 1; ++j) {
    if (j <= d - 2 || q > 2 || e > d) {
      if (!(abs(P.at(2, j)) <= abs(P.at(1, j))))
        out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("j", j)
                                     .add_str("part", "main")
                                     .done());
    } else {
      Int f = pow_int(Int(2), d - 1);
      if (abs(P.at(2, j)) * (f - 1) != abs(P.at(1, j)) * (f + 1))
        out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("j", j)
                                     .add_str("part", "ratio")
                                     .done());
    }
  }
}

void chk_b_thm_q4(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer(), e = t[2].integer();
  if (q < 4) return;
  EigenMatrix P = p_matrix_recurrence(bil(q, d, e));
  ++out.checked;
  for (long j = 0; j <= d; ++j)
    for (long i = 1; i <= d; ++i)
      if (!(abs(P.at(i, j)) <= abs(P.at(1, j))))
        out.violations.push_back(
            KV().add("q", q).add("d", d).add("e", e).add("i", i).add("j", j).done());
}

void chk_b_sign(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer(), e = t[2].integer();
  if (q < 4) return;
  EigenMatrix P = p_matrix_recurrence(bil(q, d, e));
  ++out.checked;
  for (long i = 0; i <= d; ++i)
    for (long j = 0; j <= d; ++j)
      if (sign_of(P.at(i, j)) != expected_sign(d, i, j))
        out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("i", i)
                                     .add("j", j)
                                     .add_str("part", "sign")
                                     .done());
  for (long j = 1; j <= d; ++j)
    if (P.at(d - j + 1, j) != col_min(P, j))
      out.violations.push_back(KV().add("q", q).add("d", d).add("e", e).add("j", j)
                                   .add_str("part", "min")
                                   .done());
}

void chk_b_conj(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer(), e = t[2].integer();
  if (!(q >= 3 || d != e)) return;
  EigenMatrix P = p_matrix_recurrence(bil(q, d, e));
  ++out.checked;
  for (long j = 1; j <= d; ++j)
    if (P.at(d - j + 1, j) != col_min(P, j))
      out.violations.push_back(
          KV().add("q", q).add("d", d).add("e", e).add("j", j).done());
}

// ---------------------------------------------------------------- alternating

void chk_a_thm(const Tuple& t, Sink& out) {
  long q = t[0].integer(), n = t[1].integer();
  long d = n / 2;
  if (d < 1) return;
  EigenMatrix P = p_matrix_recurrence(alt(q, n));
  ++out.checked;
  for (long j = 1; j <= d; ++j) {
    if (P.at(d - j + 1, j) != col_min(P, j))
      out.violations.push_back(
          KV().add("q", q).add("n", n).add("j", j).add_str("part", "i").done());
    // for (q,n) = (2,4) column 1 runs 35, 3, -5: the flip at i = d-1 (part
    // iii a) overtakes i = 1, so the tail-maximum claim starts after d = 2
    if (!(q == 2 && n == 4 && j == 1) && max_abs_tail(P, j) != abs(P.at(1, j)))
      out.violations.push_back(
          KV().add("q", q).add("n", n).add("j", j).add_str("part", "ii").done());
    for (long i = 0; i <= d - 1; ++i) {
      Int a = abs(P.at(i, j)), b = abs(P.at(i + 1, j));
      bool special = (q == 2 && n == 2 * d && i == d - 1);
      const char* want = special ? (j == d ? "eq" : "lt") : "gt";
      const char* got = (a < b) ? "lt" : (a == b ? "eq" : "gt");
      if (std::string(want) != got)
        out.violations.push_back(KV().add("q", q).add("n", n).add("i", i).add("j", j)
                                     .add_str("part", "iii")
                                     .done());
    }
  }
}

void chk_a_sign(const Tuple& t, Sink& out) {
  long q = t[0].integer(), n = t[1].integer();
  long d = n / 2;
  EigenMatrix P = p_matrix_recurrence(alt(q, n));
  ++out.checked;
  for (long i = 0; i <= d; ++i)
    for (long j = 0; j <= d; ++j)
      if (sign_of(P.at(i, j)) != expected_sign(d, i, j))
        out.violations.push_back(
            KV().add("q", q).add("n", n).add("i", i).add("j", j).done());
}

// ---------------------------------------------------------------- Hermitian

Int hermitian_main_term(long q, long d, long j, long i) {
  Int b(-q);
  if (d - i >= j) return gauss_binom(d - i, j, b) * pow_int(b, j * d);
  long s = i + j - d;
  return gauss_binom(i, d - j, b) * pow_int(b, s * (s - 1) / 2 + (d - i) * d);
}

void chk_q_thm(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer();
  if (q < 4) return;
  EigenMatrix P = p_matrix_recurrence(her(q, d));
  ++out.checked;
  for (long j = 1; j <= d; ++j) {
    if (d >= 3)
      for (long i = 0; i <= d - 1; ++i)
        if (!(abs(P.at(i + 1, j)) < abs(P.at(i, j))))
          out.violations.push_back(KV().add("q", q).add("d", d).add("i", i).add("j", j)
                                       .add_str("part", "i")
                                       .done());
    long im = (j % 2 == 1) ? 1 : d - j + 2;
    for (long i = 0; i <= d; ++i)
      if (!(P.at(im, j) <= P.at(i, j)))
        out.violations.push_back(KV().add("q", q).add("d", d).add("i", i).add("j", j)
                                     .add_str("part", j % 2 == 1 ? "ii" : "iii")
                                     .done());
  }
}

void chk_q_sign(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer();
  if (q < 4 || d < 2) return;
  EigenMatrix P = p_matrix_recurrence(her(q, d));
  ++out.checked;
  for (long j = 1; j <= d; ++j)
    for (long i = 0; i <= d; ++i) {
      int want = sign_of(hermitian_main_term(q, d, j, i));
      if (j % 2 == 1) want = -want;
      if (sign_of(P.at(i, j)) != want)
        out.violations.push_back(
            KV().add("q", q).add("d", d).add("i", i).add("j", j).done());
    }
}

void chk_q_conj_1(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer();
  EigenMatrix P = p_matrix_recurrence(her(q, d));
  ++out.checked;
  for (long j = 1; j <= d; ++j) {
    long im = (j % 2 == 1) ? 1 : d - j + 2;
    for (long i = 0; i <= d; ++i)
      if (!(P.at(im, j) <= P.at(i, j)))
        out.violations.push_back(
            KV().add("q", q).add("d", d).add("i", i).add("j", j).done());
  }
}

void chk_q_conj_2(const Tuple& t, Sink& out) {
  long q = t[0].integer(), d = t[1].integer();
  if (d < 3) return;
  EigenMatrix P = p_matrix_recurrence(her(q, d));
  ++out.checked;
  for (long j = 1; j <= d; ++j)
    for (long i = 2; i <= d; ++i)
      if (!(abs(P.at(i, j)) < abs(P.at(1, j))))
        out.violations.push_back(
            KV().add("q", q).add("d", d).add("i", i).add("j", j).done());
}

// ------------------------------------------------------- classical parameters

bool classical_matrix(long d, long b, long alpha, long beta, EigenMatrix& P,
                      ClassicalParams& cp) {
  cp = ClassicalParams{d, Int(b), Int(alpha), Int(beta)};
  try {
    P = p_matrix_recurrence(cp);
    return true;
  } catch (const invalid_parameters&) {
    return false;
  }
}

void chk_cp_signchanges(const Tuple& t, Sink& out) {
  long d = t[0].integer(), b = t[1].integer(), alpha = t[2].integer(),
       beta = t[3].integer();
  if (b <= 0) return;
  EigenMatrix P;
  ClassicalParams cp;
  if (!classical_matrix(d, b, alpha, beta, P, cp)) return;
  ++out.checked;
  std::vector<Int> theta = eigenvalues_theta(cp);
  bool desc = true;
  for (long i = 0; i + 1 <= d; ++i)
    if (!(theta[i] > theta[i + 1])) desc = false;
  bool cond = (cp.alpha <= cp.b - 1) ||
              (cp.beta > cp.alpha * gauss1(d - 1, cp.b) - pow_int(cp.b, d - 1));
  KV base;
  base.add("d", d).add("b", b).add("alpha", alpha).add("beta", beta);
  if (desc != cond)
    out.violations.push_back(KV(base).add_str("part", "iff").done());
  if (desc) {
    for (long i = 0; i <= d; ++i) {
      if (sign_changes(row(P, i)) != i)
        out.violations.push_back(KV(base).add("i", i).add_str("part", "row").done());
      if (sign_changes(col(P, i)) != i)
        out.violations.push_back(KV(base).add("i", i).add_str("part", "col").done());
    }
  }
}

void chk_cp_signpattern(const Tuple& t, Sink& out) {
  long d = t[0].integer(), b = t[1].integer(), alpha = t[2].integer(),
       beta = t[3].integer();
  EigenMatrix P;
  ClassicalParams cp;
  if (!classical_matrix(d, b, alpha, beta, P, cp)) return;
  bool hyp = true;
  for (long i = 0; i <= d && hyp; ++i)
    if (sign_changes(row(P, i)) != i || sign_changes(col(P, i)) != i) hyp = false;
  for (long i = 0; i <= d && hyp; ++i)
    for (long j = 0; i + j <= d; ++j)
      if (!(P.at(i, j) > 0)) hyp = false;
  if (!hyp) return;
  ++out.checked;
  for (long i = 0; i <= d; ++i)
    for (long j = d - i; j <= d; ++j) {
      int want = (i + j - d) % 2 == 0 ? 1 : -1;
      if (sign_of(P.at(i, j)) != want)
        out.violations.push_back(KV().add("d", d).add("b", b).add("alpha", alpha)
                                     .add("beta", beta)
                                     .add("i", i)
                                     .add("j", j)
                                     .done());
    }
}

void chk_cp_largebeta(const Tuple& t, Sink& out) {
  long d = t[0].integer(), b = t[1].integer(), alpha = t[2].integer(),
       beta = t[3].integer();
  EigenMatrix P;
  ClassicalParams cp;
  if (!classical_matrix(d, b, alpha, beta, P, cp)) return;
  ++out.checked;
  KV base;
  base.add("d", d).add("b", b).add("alpha", alpha).add("beta", beta);
  for (long i = 0; i <= d; ++i)
    for (long j = 0; j <= d; ++j)
      if (sign_of(P.at(i, j)) != expected_sign(d, i, j))
        out.violations.push_back(
            KV(base).add("i", i).add("j", j).add_str("part", "sign").done());
  for (long j = 1; j <= d; ++j)
    if (P.at(d - j + 1, j) != col_min(P, j))
      out.violations.push_back(KV(base).add("j", j).add_str("part", "min").done());
  if (b >= 1)
    for (long j = 1; j <= d; ++j)
      for (long i = 0; i <= d - 1; ++i)
        if (!(abs(P.at(i + 1, j)) < abs(P.at(i, j))))
          out.violations.push_back(
              KV(base).add("i", i).add("j", j).add_str("part", "mono").done());
}

// ---------------------------------------------------------------- registry

struct Entry {
  TheoremInfo info;
  Check check;
  Expected expected;  // null for most ids
};

std::vector<Entry> make_entries() {
  std::vector<Entry> es;
  auto add = [&](TheoremInfo info, Check check, Expected expected = nullptr) {
    es.push_back({std::move(info), std::move(check), std::move(expected)});
  };

  add({"H-THM-BINARY", "hamming", "theorem",
       "q=2: for 1<=i<=d-1, |K_j(i)| peaks at i=1 when 2j!=d; when 2j=d, K_j(1)=0 "
       "and the peak is at i=2",
       "d=1..40", {"d"}},
      chk_h_thm_binary);
  add({"H-COR-BINARY", "hamming", "corollary",
       "q=2, 2j>=d+1: K_j(1)<=K_j(i) for i<=d-1, and K_j(1)<=K_j(d) iff j even or j=d",
       "d=1..40", {"d"}},
      chk_h_cor_binary);
  add({"H-THM-NONBINARY", "hamming", "theorem",
       "q>=3, qj>=qd-d+1: K_j(1) is the column minimum and |K_j(i)|<=|K_j(1)| for i>=1, "
       "except (q,d,i,j)=(3,4,3,3)",
       "q=3..8,d=1..30", {"q", "d"}},
      chk_h_thm_nonbinary, exp_h_thm_nonbinary);
  add({"H-PROP-12", "hamming", "proposition",
       "exact sign/equality thresholds for K_j(1) and K_j(2) at qj vs qd-d+1, plus "
       "|K_j(2)|<=|K_j(1)| on the top range",
       "q=2..8,d=1..24", {"q", "d"}},
      chk_h_prop_12);
  add({"H-PROP-LARGE", "hamming", "proposition",
       "q>d^2/4+1: checkerboard sign pattern and column minima at i=d-j+1",
       "q=2..40,d=1..12", {"q", "d"}},
      chk_h_prop_large);
  add({"H-LEM-QBIG", "hamming", "lemma",
       "q>d^2/4+1: positivity above the antidiagonal, K_j(d-j+1)<0, and strict "
       "absolute dominance of i=d-j+1 below it",
       "q=2..40,d=1..12", {"q", "d"}},
      chk_h_lem_qbig);
  add({"H-CONJ-DISTINCT", "hamming", "conjecture",
       "connected distance-j Hamming graphs have more than d/2 distinct eigenvalues",
       "q=2..5,d=1..12", {"q", "d"}},
      chk_h_conj_distinct);

  add({"J-PROP-NEG", "johnson", "proposition",
       "sign and equality of E_j(1), E_j(2) against the thresholds jn vs de and "
       "j(n-1) vs de",
       "n=2..30,d=1..15", {"n", "d"}},
      chk_j_prop_neg);
  add({"J-THM-SMALLEST", "johnson", "theorem",
       "E_j(1) is the column minimum iff j(n-1)>=de; in that case it is also the "
       "largest |E_j(i)| for i>=1",
       "n=2..40,d=1..20", {"n", "d"}},
      chk_j_thm_smallest);
  add({"J-COR-KARLOFF", "johnson", "corollary",
       "n=2d, j>d/2: E_j(1) is the column minimum and the largest |E_j(i)| for i>=1",
       "d=1..15", {"d"}},
      chk_j_cor_karloff);
  add({"J-PROP-D", "johnson", "proposition",
       "column j=d: E_d(1) is the minimum and the largest |E_d(i)| for i>=1",
       "n=2..30,d=1..15", {"n", "d"}},
      chk_j_prop_d);
  add({"J-PROP-LARGE", "johnson", "proposition",
       "large n: checkerboard sign pattern and column minima at i=d-j+1",
       "n=34..44,d=1..5", {"n", "d"}},
      chk_j_prop_large);
  add({"J-EDGE-2D1", "johnson", "proposition",
       "n=2d+1, j=d/2: (d-1)E_j(2)=-dE_j(1), so |E_j(2)|>|E_j(1)|",
       "d=2..20", {"d"}},
      chk_j_edge_2d1);
  add({"J-REMARK-QUARTER", "johnson", "remark",
       "probe: when 4|jn-de|>n the largest |E_j(i)| over i>=1 sits at i=1",
       "n=2..30,d=1..15", {"n", "d"}},
      chk_j_remark_quarter);

  add({"G-PROP-ABS", "grassmann", "proposition",
       "G_j(1)<0 iff j=d and never 0; |G_j(i)|<=|G_j(1)| for i>=1; growth in j above "
       "the antidiagonal; checkerboard signs off (2d,2); column d minimum at i=1",
       "q=2..4,n=2..20,d=1..8", {"q", "n", "d"}},
      chk_g_prop_abs);
  add({"G-THM-SMALLEST-I", "grassmann", "theorem",
       "q>=3 or n>=2d+1: the column-j minimum is G_j(d-j+1)",
       "q=2..4,n=2..20,d=1..8", {"q", "n", "d"}},
      chk_g_thm_smallest_1);
  add({"G-THM-SMALLEST-II", "grassmann", "theorem",
       "(n,q)=(2d,2), 7<=j<=d-5: the column-j minimum is G_j(d-j)",
       "d=12..16", {"d"}},
      chk_g_thm_smallest_2);
  add({"G-CONJ-I", "grassmann", "conjecture",
       "(n,q)!=(2d,2): |G_j(i)| strictly decreases along every column j>=1",
       "q=2..3,n=2..14,d=1..6", {"q", "n", "d"}},
      chk_g_conj_1);
  add({"G-CONJ-II", "grassmann", "conjecture",
       "(n,q)=(2d,2): G_j(d-j)<0 ((d,j)=(5,3) and d>=6, 2<=j<=d-2) and is the column "
       "minimum for d>=6, 3<=j<=d-2",
       "d=5..14", {"d"}},
      chk_g_conj_2);

  add({"C-PROP", "dualpolar", "proposition",
       "sign of C_j(1); |C_j(2)|<=|C_j(1)| for d>=3 except (q,j,e)=(2,d-1,1); "
       "|C_j(i)|<=|C_j(d)| for i>=2 or e<=1; tail maxima at i=1 (e>1) or i=d (e<=1); "
       "odd j<d column minimum at i=d",
       "q=2..4,d=1..8,e=0,e=1/2,e=1,e=3/2,e=2", {"q", "d", "e"}},
      chk_c_prop, exp_c_prop);
  add({"C-EDGE", "dualpolar", "proposition",
       "(q,e)=(2,1): |C_{d-1}(2)|>|C_{d-1}(1)|=2^C(d-1,2), and column d-1 is not "
       "unimodal in absolute value for d>=5",
       "d=2..10", {"d"}},
      chk_c_edge);
  add({"C-CONJ-UNIMODAL", "dualpolar", "conjecture",
       "|C_j(i)| is unimodal outside known exceptions; the minimum position tracks "
       "floor((d+e+1)/2)",
       "q=2..4,d=1..8,e=0,e=1/2,e=1,e=3/2,e=2", {"q", "d", "e"}},
      chk_c_conj_unimodal);
  add({"C-CONJ-IMIN", "dualpolar", "conjecture",
       "case table for the index of the column minimum; the region q=2, e=2, d even, "
       "j>=d-4 has its own listed values",
       "q=2..4,d=1..14,e=0,e=1/2,e=1,e=3/2,e=2", {"q", "d", "e"}},
      chk_c_conj_imin);

  add({"B-PROP-NEG", "bilinear", "proposition",
       "B_j(1)>0 for j<d and B_d(1)<0; column d has its minimum at i=1 and its "
       "largest |B_d(i)|, i>=1, at i=1",
       "q=2..4,d=1..6,e=1..8", {"q", "d", "e"}},
      chk_b_prop_neg);
  add({"B-LEM-BDS", "bilinear", "lemma",
       "|B_j(2)|<=|B_j(1)| for 1<=j<=d-1 unless (j,q,e)=(d-1,2,d), where the ratio is "
       "exactly (2^(d-1)+1)/(2^(d-1)-1)",
       "q=2..4,d=2..6,e=2..8", {"q", "d", "e"}},
      chk_b_lem_bds);
  add({"B-THM-Q4", "bilinear", "theorem",
       "q>=4: |B_j(i)|<=|B_j(1)| for all 1<=i<=d, 0<=j<=d",
       "q=4..5,d=1..8,e=1..8", {"q", "d", "e"}},
      chk_b_thm_q4);
  add({"B-SIGN", "bilinear", "proposition",
       "q>=4: checkerboard sign pattern and column minima at i=d-j+1",
       "q=4..5,d=1..6,e=1..7", {"q", "d", "e"}},
      chk_b_sign);
  add({"B-CONJ", "bilinear", "conjecture",
       "q>=3, or q=2 with d!=e: the column-j minimum is B_j(d-j+1)",
       "q=2..3,d=1..6,e=1..7", {"q", "d", "e"}},
      chk_b_conj);

  add({"A-THM", "alternating", "theorem",
       "column minima at i=d-j+1; tail |A_j(i)| maxima at i=1; |A_j(i)| strictly "
       "decreasing except the exact flip/tie at (q,n,i)=(2,2d,d-1)",
       "q=2..3,n=2..12", {"q", "n"}},
      chk_a_thm);
  add({"A-SIGN", "alternating", "proposition",
       "A_j(i)>0 above the antidiagonal, sign (-1)^(i+j-d) below",
       "q=2..3,n=2..12", {"q", "n"}},
      chk_a_sign);

  add({"Q-THM", "hermitian", "theorem",
       "q>=4: |Q_j(i)| strictly decreasing for d>=3; column minima at i=1 (odd j) or "
       "i=d-j+2 (even j)",
       "q=4..5,d=1..8", {"q", "d"}},
      chk_q_thm);
  add({"Q-SIGN", "hermitian", "proposition",
       "q>=4, d>=2: the sign of Q_j(i) matches the sign of (-1)^j times its main term",
       "q=4..5,d=2..8", {"q", "d"}},
      chk_q_sign);
  add({"Q-CONJ-1", "hermitian", "conjecture",
       "column minima at i=1 (odd j) or i=d-j+2 (even j), probed at small q",
       "q=2..3,d=1..7", {"q", "d"}},
      chk_q_conj_1);
  add({"Q-CONJ-2", "hermitian", "conjecture",
       "d>=3: |Q_j(i)|<|Q_j(1)| for 2<=i<=d, probed at small q",
       "q=2..3,d=3..7", {"q", "d"}},
      chk_q_conj_2);

  add({"CP-SIGNCHANGES", "classical", "proposition",
       "b>0: theta strictly descending iff alpha<=b-1 or beta>alpha[d-1]-b^(d-1); "
       "then row i and column i have exactly i sign changes",
       "d=1..5,b=1..3,alpha=0..3,beta=1..9", {"d", "b", "alpha", "beta"}},
      chk_cp_signchanges);
  add({"CP-SIGNPATTERN", "classical", "proposition",
       "if rows/columns have exactly i sign changes and P_ij>0 above the "
       "antidiagonal, the signs below are (-1)^(i+j-d)",
       "d=1..5,b=1..3,alpha=0..3,beta=1..9", {"d", "b", "alpha", "beta"}},
      chk_cp_signpattern);
  add({"CP-LARGEBETA", "classical", "theorem",
       "at large beta: checkerboard sign pattern, column minima at i=d-j+1, and (for "
       "b>=1) strictly decreasing |P_ij| down every column j>=1",
       "d=1..3,b=1..2,alpha=0..2,beta=24..32", {"d", "b", "alpha", "beta"}},
      chk_cp_largebeta);

  return es;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> es = make_entries();
  return es;
}

const Entry* find_entry(const std::string& id) {
  for (const Entry& e : entries())
    if (e.info.id == id) return &e;
  return nullptr;
}

}  // namespace

const std::vector<TheoremInfo>& theorem_catalog() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> v;
    for (const Entry& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const TheoremInfo* find_theorem(const std::string& id) {
  const Entry* e = find_entry(id);
  return e ? &e->info : nullptr;
}

VerificationReport verify_theorem(const std::string& id, const Box& box, int jobs) {
  const Entry* entry = find_entry(id);
  if (!entry) throw std::invalid_argument("verify: unknown theorem id " + id);
  auto t0 = std::chrono::steady_clock::now();

  // tuples in lexicographic order over the registered variables
  std::vector<const std::vector<HalfInt>*> axes;
  for (const std::string& var : entry->info.box_vars) {
    const auto* vals = box.find(var);
    if (!vals)
      throw std::invalid_argument("verify: box is missing variable '" + var + "' for " + id);
    axes.push_back(vals);
  }
  for (const auto& [var, vals] : box.vars) {
    bool known = std::find(entry->info.box_vars.begin(), entry->info.box_vars.end(), var) !=
                 entry->info.box_vars.end();
    if (!known)
      throw std::invalid_argument("verify: variable '" + var + "' does not apply to " + id);
  }
  std::vector<Tuple> tuples;
  Tuple cur(axes.size(), HalfInt());
  std::function<void(size_t)> gen = [&](size_t k) {
    if (k == axes.size()) {
      tuples.push_back(cur);
      return;
    }
    for (HalfInt v : *axes[k]) {
      cur[k] = v;
      gen(k + 1);
    }
  };
  gen(0);

  std::vector<Sink> sinks(tuples.size());
  auto run_range = [&](size_t lo, size_t hi) {
    for (size_t k = lo; k < hi; ++k) {
      try {
        entry->check(tuples[k], sinks[k]);
      } catch (const invalid_parameters&) {
        // tuple outside the family's parameter domain: skipped
      } catch (const std::exception& ex) {
        std::string where = "(";
        for (size_t v = 0; v < tuples[k].size(); ++v) {
          if (v) where += ",";
          where += entry->info.box_vars[v] + "=" + tuples[k][v].str();
        }
        where += ")";
        sinks[k].violations.push_back("error at " + where + ": " + ex.what());
      }
    }
  };
  size_t nthreads = std::min<size_t>(resolve_jobs(jobs), std::max<size_t>(tuples.size(), 1));
  if (nthreads <= 1 || tuples.size() <= 1) {
    run_range(0, tuples.size());
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (tuples.size() + nthreads - 1) / nthreads;
    for (size_t th = 0; th < nthreads; ++th) {
      size_t lo = th * chunk, hi = std::min(tuples.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  VerificationReport rep;
  rep.theorem_id = id;
  rep.param_box = box.str();
  std::vector<std::string> violations;
  for (Sink& s : sinks) {
    violations.insert(violations.end(), s.violations.begin(), s.violations.end());
    rep.notes.insert(rep.notes.end(), s.notes.begin(), s.notes.end());
    rep.tuples_checked += s.checked;
  }

  bool probe = entry->info.kind == "conjecture" || entry->info.kind == "remark";
  if (probe) {
    rep.counterexamples = violations;
    rep.status = violations.empty() ? "no-counterexample-in-box" : "counterexamples-found";
  } else {
    std::vector<std::string> expected =
        entry->expected ? entry->expected(box) : std::vector<std::string>{};
    std::set<std::string> expected_set(expected.begin(), expected.end());
    std::set<std::string> seen;
    for (const std::string& v : violations) {
      if (expected_set.count(v)) {
        rep.exceptions.push_back(v);
        seen.insert(v);
      } else {
        rep.counterexamples.push_back(v);
      }
    }
    for (const std::string& v : expected)
      if (!seen.count(v)) {
        rep.counterexamples.push_back("expected-exception-not-observed:" + v);
        rep.notes.push_back("expected exception " + v + " did not violate in this box");
      }
    if (!rep.counterexamples.empty())
      rep.status = "fail";
    else
      rep.status = rep.exceptions.empty() ? "pass" : "pass-with-listed-exceptions";
  }

  auto t1 = std::chrono::steady_clock::now();
  rep.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rep;
}

VerificationReport verify_theorem(const std::string& id, int jobs) {
  const Entry* entry = find_entry(id);
  if (!entry) throw std::invalid_argument("verify: unknown theorem id " + id);
  return verify_theorem(id, Box::parse(entry->info.default_box), jobs);
}

}  // namespace ssp
