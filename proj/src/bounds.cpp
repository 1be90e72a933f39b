#include "ssp/bounds.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ssp/families.hpp"
#include "ssp/schemes.hpp"

namespace ssp {

namespace {

long get(const BoundParams& params, const char* key) {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  throw std::invalid_argument(std::string("check_bound_lemma: missing parameter ") + key);
}

void require(bool ok, const std::string& id, const std::string& what) {
  if (!ok) throw hypothesis_error(id + ": hypothesis violated: " + what);
}

std::string render_params(const BoundParams& params) {
  std::string out = "(";
  for (size_t t = 0; t < params.size(); ++t) {
    if (t) out += ",";
    out += params[t].first + "=" + std::to_string(params[t].second);
  }
  return out + ")";
}

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

void push(BoundReport& rep, const std::string& label, const Rat& lhs, const char* rel,
          const Rat& rhs) {
  bool ok = false;
  if (rel == std::string("<="))
    ok = lhs <= rhs;
  else if (rel == std::string("<"))
    ok = lhs < rhs;
  else if (rel == std::string(">="))
    ok = lhs >= rhs;
  else if (rel == std::string(">"))
    ok = lhs > rhs;
  else if (rel == std::string("=="))
    ok = lhs == rhs;
  rep.checks.push_back({label, lhs, rel, rhs, ok});
  rep.holds = rep.holds && ok;
}

void aux_put(BoundReport& rep, const std::string& name, const std::string& value) {
  rep.aux.emplace_back(name, value);
}

BoundReport hamming_qpow(const BoundParams& p) {
  long q = get(p, "q"), d = get(p, "d"), i = get(p, "i"), j = get(p, "j");
  const std::string id = "H-LEM-QPOW";
  require(q >= 2, id, "q >= 2");
  require(d >= 0 && 0 <= i && i <= d && 0 <= j && j <= d, id, "0 <= i,j <= d");
  BoundReport rep{id, render_params(p), {}, 0, {}, true};
  Int K = krawtchouk(d, q, j, i);
  push(rep, "|K_j(i)| <= (q-1)^(d-i) C(d,j)", Rat(abs(K)), "<=",
       Rat(pow_int(Int(q - 1), d - i) * binom(d, j)));
  return rep;
}

BoundReport hamming_3term(const BoundParams& p) {
  long q = get(p, "q"), d = get(p, "d"), i = get(p, "i"), j = get(p, "j");
  const std::string id = "H-LEM-3TERM";
  require(q >= 2, id, "q >= 2");
  require(1 < i && i < d, id, "1 < i < d");
  require(j <= d, id, "j <= d");
  require(q * j >= q * d - d + 1, id, "qj >= qd-d+1");
  require(q * j <= 2 * (q - 1) * (d - i), id, "qj <= 2(q-1)(d-i)");
  BoundReport rep{id, render_params(p), {}, 0, {}, true};
  Int lo = abs(krawtchouk(d, q, j, i - 1));
  Int mid = abs(krawtchouk(d, q, j, i));
  Int hi = abs(krawtchouk(d, q, j, i + 1));
  push(rep, "|K_j(i+1)| <= max(|K_j(i-1)|,|K_j(i)|)", Rat(hi), "<=", Rat(std::max(lo, mid)));
  return rep;
}

BoundReport hamming_bd(const BoundParams& p) {
  long d = get(p, "d"), i = get(p, "i"), j = get(p, "j");
  const std::string id = "H-LEM-BD";
  require(0 < i && i < d, id, "0 < i < d");
  require(j >= 0 && 2 * j < d, id, "0 <= j < d/2");
  BoundReport rep{id, render_params(p), {}, 0, {}, true};
  Int mid = 0;
  for (long g = 0; 2 * g <= j; ++g) mid += binom(i, 2 * g) * binom(d - i, j - 2 * g);
  push(rep, "C(d-1,j-1) <= sum", Rat(binom(d - 1, j - 1)), "<=", Rat(mid));
  push(rep, "sum <= C(d-1,j)", Rat(mid), "<=", Rat(binom(d - 1, j)));
  return rep;
}

BoundReport johnson_ineq(const BoundParams& p) {
  long n = get(p, "n"), d = get(p, "d"), j = get(p, "j");
  long e = n - d;
  const std::string id = "J-LEM-INEQ";
  require(d >= 1 && n >= 2 * d, id, "n >= 2d >= 2");
  require(1 <= j && j <= d, id, "1 <= j <= d");
  require((j - 1) * (n + 1) >= d * e, id, "(j-1)(n+1) >= de");
  BoundReport rep{id, render_params(p), {}, 0, {}, true};
  Int lhs = eberlein(n, d, j, 0) + abs(eberlein(n, d, j - 1, 1)) + abs(eberlein(n, d, j, 1));
  push(rep, "E_j(0)+|E_{j-1}(1)|+|E_j(1)| <= E_{j-1}(0)", Rat(lhs), "<=",
       Rat(eberlein(n, d, j - 1, 0)));
  return rep;
}

BoundReport johnson_eji(const BoundParams& p) {
  long n = get(p, "n"), d = get(p, "d"), i = get(p, "i"), j = get(p, "j");
  long e = n - d;
  const std::string id = "J-LEM-EJI";
  require(d >= 1 && n >= 2 * d, id, "n >= 2d >= 2");
  require(j >= 0 && j < d, id, "j < d");
  require(j * n >= d * e, id, "jn >= de");
  require(2 * (j * n - d * e) < 3 * n, id, "2(jn-de) < 3n");
  require(j * (n - 1) >= d * e, id, "j(n-1) >= de");
  require(3 <= i && i <= d, id, "3 <= i <= d");
  BoundReport rep{id, render_params(p), {}, 0, {}, true};
  push(rep, "|E_j(i)| <= |E_j(1)|", Rat(abs(eberlein(n, d, j, i))), "<=",
       Rat(abs(eberlein(n, d, j, 1))));
  return rep;
}

BoundReport grassmann_bound(const BoundParams& p) {
  long q = get(p, "q"), n = get(p, "n"), d = get(p, "d"), i = get(p, "i"), j = get(p, "j");
  const std::string id = "G-LEM-BOUND";
  require(d >= 1 && n >= 2 * d, id, "n >= 2d >= 2");
  require(0 <= i && i <= d && 0 <= j && j <= d, id, "0 <= i,j <= d");
  require(q >= 3 || n > 2 * d, id, "q >= 3 or (q = 2 and n > 2d)");
  require(q >= 2, id, "q >= 2");
  BoundReport rep{id, render_params(p), {}, 0, {}, true};
  Int Q(q);
  long s;
  Int T;
  if (i + j <= d) {
    s = 1;
    T = pow_int(Q, j * j) * gauss_binom(d - i, j, Q) * gauss_binom(n - d, n - d - j, Q);
    aux_put(rep, "branch", "i+j<=d");
  } else {
    s = i + j - d;
    T = pow_int(Q, j * (d - i) + s * (s - 1) / 2) * gauss_binom(i, d - j, Q) *
        gauss_binom(n - i - j, n - d - j, Q);
    if (s % 2 != 0) T = -T;
    aux_put(rep, "branch", "i+j>d");
  }
  rep.main_term = T;
  aux_put(rep, "s", std::to_string(s));
  Int G = grassmann_eigen(q, n, d, j, i);
  Rat rel_err = Rat(abs(G - T)) / Rat(abs(T));
  push(rep, "|G_j(i)/T - 1| < q^(2d+1-n)/(q-1)^2", rel_err, "<",
       rat_pow(Q, 2 * d + 1 - n) / Rat((q - 1) * (q - 1)));
  if (q == 2 && i >= d - j + 1)
    push(rep, "|G_j(i)/T - 1| < q^(2d+2-n)/((q-1)(q^2-1))", rel_err, "<",
         rat_pow(Q, 2 * d + 2 - n) / Rat((q - 1) * (q * q - 1)));
  return rep;
}

BoundReport grassmann_sp(const BoundParams& p) {
  long d = get(p, "d"), i = get(p, "i"), j = get(p, "j");
  const std::string id = "G-LEM-SP";
  require(d >= 13, id, "d >= 13");
  require(5 <= j && j <= d - 5, id, "5 <= j <= d-5");
  require(d - j <= i && i < d, id, "d-j <= i < d");
  BoundReport rep{id, render_params(p), {}, 0, {}, true};
  const long q = 2, n = 2 * d;
  Int Q(q);
  long s = i + j - d + 1;
  Int T = pow_int(Q, j * (d - i - 1) + s * (s - 1) / 2) * gauss_binom(i, d - j - 1, Q) *
          gauss1(j + 1, Q) * gauss_binom(2 * d - i - j - 1, d - j, Q);
  if (s % 2 != 0) T = -T;
  rep.main_term = T;
  aux_put(rep, "s", std::to_string(s));
  Int G = grassmann_eigen(q, n, d, j, i);
  push(rep, "|G_j(i)| <= (3/2)|T|", Rat(abs(G)), "<=", Rat(3, 2) * Rat(abs(T)));
  if (i == d - j) {
    push(rep, "G_j(d-j) < 0", Rat(G), "<", Rat(0));
    push(rep, "|G_j(d-j)| >= (5/171)|T|", Rat(abs(G)), ">=", Rat(5, 171) * Rat(abs(T)));
  }
  return rep;
}

BoundReport bilinear_main(const BoundParams& p) {
  long q = get(p, "q"), d = get(p, "d"), e = get(p, "e"), i = get(p, "i"), j = get(p, "j");
  const std::string id = "B-LEM-MAIN";
  require(q >= 4, id, "q >= 4");
  require(1 <= d && d <= e, id, "1 <= d <= e");
  require(0 <= i && i <= d && 0 <= j && j <= d, id, "0 <= i,j <= d");
  BoundReport rep{id, render_params(p), {}, 0, {}, true};
  long hmax = std::min(j, d - i);
  long s = hmax * (d + e - i - hmax) + (d - j) * (j - hmax) +
           (j - hmax) * (j - hmax - 1) / 2;
  Int qs = pow_int(Int(q), s);
  rep.main_term = qs;
  aux_put(rep, "s", std::to_string(s));
  aux_put(rep, "h_max", std::to_string(hmax));
  aux_put(rep, "h0", HalfInt(2 * (e - i) + 1).str());
  Int B = abs(bilinear_eigen(q, d, e, j, i));
  push(rep, "(5/9) q^s < |B_j(i)|", Rat(5, 9) * Rat(qs), "<", Rat(B));
  push(rep, "|B_j(i)| < (13/4) q^s", Rat(B), "<", Rat(13, 4) * Rat(qs));
  return rep;
}

BoundReport alternating_up(const BoundParams& p) {
  long q = get(p, "q"), n = get(p, "n"), i = get(p, "i"), j = get(p, "j");
  const std::string id = "A-PROP-UP";
  require(q >= 2 && n >= 2, id, "q >= 2, n >= 2");
  long d = n / 2, m = 2 * n - 2 * d - 1;
  require(0 <= i && 0 <= j && i + j <= d, id, "i+j <= d");
  BoundReport rep{id, render_params(p), {}, 0, {}, true};
  Int b = Int(q) * q;
  Int T0 = pow_int(Int(q), j * m) * gauss_binom(d - i, j, b);
  rep.main_term = T0;
  aux_put(rep, "m", std::to_string(m));
  Rat x = Rat(1) - Rat(alternating_eigen(q, n, j, i)) / Rat(T0);
  push(rep, "0 <= 1 - A_j(i)/T0", Rat(0), "<=", x);
  push(rep, "1 - A_j(i)/T0 < 2 q^(2i+2j-m-2)", x, "<",
       Rat(2) * rat_pow(Int(q), 2 * i + 2 * j - m - 2));
  return rep;
}

BoundReport alternating_down(const BoundParams& p) {
  long q = get(p, "q"), n = get(p, "n"), i = get(p, "i"), j = get(p, "j");
  const std::string id = "A-PROP-DOWN";
  require(q >= 2 && n >= 2, id, "q >= 2, n >= 2");
  long d = n / 2, m = 2 * n - 2 * d - 1;
  require(i <= d && j <= d, id, "i,j <= d");
  long s = i + j - d;
  require(s >= 0, id, "i+j >= d");
  BoundReport rep{id, render_params(p), {}, 0, {}, true};
  Int b = Int(q) * q;
  Int D = pow_int(Int(q), s * (s - 1) + (d - i) * m) * gauss_binom(i, d - j, b);
  if (s % 2 != 0) D = -D;
  rep.main_term = D;
  aux_put(rep, "s", std::to_string(s));
  aux_put(rep, "m", std::to_string(m));
  Rat x = Rat(1) - Rat(alternating_eigen(q, n, j, i)) / Rat(D);
  Rat midbound = Rat(gauss_binom(i + 1, d - j, b) * gauss1(d - i, b)) /
                 (rat_pow(Int(q), m - 2 * s) * Rat(gauss_binom(i, d - j, b)));
  Rat tail = Rat(Int(q) * q * q) /
             (Rat(Int(q * q - 1) * (q * q - 1)) * rat_pow(Int(q), 2 * n - 4 * d));
  push(rep, "0 <= 1 - A_j(i)/D", Rat(0), "<=", x);
  push(rep, "1 - A_j(i)/D <= mid", x, "<=", midbound);
  push(rep, "mid < q^3/((q^2-1)^2 q^(2n-4d))", midbound, "<", tail);
  push(rep, "tail < 1", tail, "<", Rat(1));
  return rep;
}

BoundReport hermitian_est(const BoundParams& p) {
  long q = get(p, "q"), d = get(p, "d"), i = get(p, "i"), j = get(p, "j");
  const std::string id = "Q-PROP-EST";
  require(d >= 2, id, "d >= 2");
  require(1 <= j && j <= d, id, "j >= 1");
  require(q >= 4, id, "q >= 4");
  require(0 <= i && i <= d, id, "0 <= i <= d");
  BoundReport rep{id, render_params(p), {}, 0, {}, true};
  Int b(-q);
  Int S;
  if (d - i >= j) {
    S = gauss_binom(d - i, j, b) * pow_int(b, j * d);
    aux_put(rep, "branch", "d-i>=j");
  } else {
    long s = i + j - d;
    S = gauss_binom(i, d - j, b) * pow_int(b, s * (s - 1) / 2 + (d - i) * d);
    aux_put(rep, "branch", "d-i<j");
  }
  rep.main_term = S;
  aux_put(rep, "h_max", std::to_string(std::min(j, d - i)));
  Int Qv = hermitian_eigen(q, d, j, i);
  Int ref = (j % 2 == 0) ? S : -S;
  push(rep, "|Q_j(i) - (-1)^j S| <= (11/27)|S|", Rat(abs(Qv - ref)), "<=",
       Rat(11, 27) * Rat(abs(S)));
  return rep;
}

BoundReport gauss_bounds(const BoundParams& p) {
  long part = get(p, "part");
  long b = get(p, "b");
  const std::string id = "E-LEM-GAUSS";
  BoundReport rep{id, render_params(p), {}, 0, {}, true};
  Int B(b);
  if (part == 1) {
    long n = get(p, "n"), m = get(p, "m");
    require(b >= 2, id, "b > 1");
    require(m >= 1 && 0 <= n && n <= m, id, "0 <= n <= m, m >= 1");
    push(rep, "(b^n-1)/(b^m-1) <= b^(n-m)",
         Rat(pow_int(B, n) - 1) / Rat(pow_int(B, m) - 1), "<=", rat_pow(B, n - m));
  } else if (part == 2) {
    long n = get(p, "n"), m = get(p, "m");
    require(b >= 2, id, "b > 1");
    require(m >= 1 && n >= 0, id, "m >= 1, n >= 0");
    push(rep, "(b^n-1)/(b^m-1) < b^(n-m+1)/(b-1)",
         Rat(pow_int(B, n) - 1) / Rat(pow_int(B, m) - 1), "<",
         rat_pow(B, n - m + 1) / Rat(b - 1));
  } else if (part == 3) {
    long n = get(p, "n"), k = get(p, "k");
    require(b >= 2, id, "b > 1");
    require(0 <= k && k <= n, id, "0 <= k <= n");
    push(rep, "[n,k]_b >= b^(k(n-k))", Rat(gauss_binom(n, k, B)), ">=",
         Rat(pow_int(B, k * (n - k))));
  } else if (part == 4) {
    long n = get(p, "n"), k = get(p, "k");
    require(b >= 2, id, "b > 1");
    require(0 < k && k < n, id, "0 < k < n");
    push(rep, "[n,k]_b >= (1+1/b) b^(k(n-k))", Rat(gauss_binom(n, k, B)), ">=",
         (Rat(1) + Rat(1) / Rat(b)) * Rat(pow_int(B, k * (n - k))));
  } else if (part == 5) {
    long n = get(p, "n"), k = get(p, "k");
    require(b >= 4, id, "b >= 4");
    require(0 <= k && k <= n, id, "0 <= k <= n");
    push(rep, "[n,k]_b < (1+2/b) b^(k(n-k))", Rat(gauss_binom(n, k, B)), "<",
         (Rat(1) + Rat(2) / Rat(b)) * Rat(pow_int(B, k * (n - k))));
  } else {
    throw std::invalid_argument("E-LEM-GAUSS: part must be 1..5");
  }
  return rep;
}

using Checker = BoundReport (*)(const BoundParams&);

const std::map<std::string, Checker>& registry() {
  static const std::map<std::string, Checker> reg = {
      {"H-LEM-QPOW", hamming_qpow},   {"H-LEM-3TERM", hamming_3term},
      {"H-LEM-BD", hamming_bd},       {"J-LEM-INEQ", johnson_ineq},
      {"J-LEM-EJI", johnson_eji},     {"G-LEM-BOUND", grassmann_bound},
      {"G-LEM-SP", grassmann_sp},     {"B-LEM-MAIN", bilinear_main},
      {"A-PROP-UP", alternating_up},  {"A-PROP-DOWN", alternating_down},
      {"Q-PROP-EST", hermitian_est},  {"E-LEM-GAUSS", gauss_bounds},
  };
  return reg;
}

}  // namespace

BoundReport check_bound_lemma(const std::string& lemma_id, const BoundParams& params) {
  auto it = registry().find(lemma_id);
  if (it == registry().end())
    throw std::invalid_argument("check_bound_lemma: unknown lemma id " + lemma_id);
  return it->second(params);
}

bool bound_lemma_applicable(const std::string& lemma_id, const BoundParams& params) {
  auto it = registry().find(lemma_id);
  if (it == registry().end())
    throw std::invalid_argument("bound_lemma_applicable: unknown lemma id " + lemma_id);
  try {
    it->second(params);
    return true;
  } catch (const hypothesis_error&) {
    return false;
  }
}

std::vector<std::string> bound_lemma_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

BoundReport chvatal_concentration_check(long n, long d) {
  if (!(d >= 1 && n >= 2 * d))
    throw hypothesis_error("J-LEM-CONC: hypothesis violated: n >= 2d >= 2");
  long e = n - d;
  BoundReport rep{"J-LEM-CONC",
                  "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")",
                  {},
                  0,
                  {},
                  true};
  Rat j0 = Rat(d * e, n);
  j0.canonicalize();
  aux_put(rep, "j0", rat_str(j0));
  Int v = binom(n, d);
  Int sum = 0;
  long j_low = -1, j_high = -1;
  for (long j = 0; j <= d; ++j) {
    Int gap = Int(j) * n - Int(d) * e;
    if (gap * gap < Int(d) * n * n) {
      sum += binom(d, j) * binom(e, j);
      if (j_low < 0) j_low = j;
      j_high = j;
    }
  }
  aux_put(rep, "j_range", std::to_string(j_low) + ".." + std::to_string(j_high));
  push(rep, "11 sum(k_j) >= 8 v", Rat(11 * sum), ">=", Rat(8 * v));
  return rep;
}

}  // namespace ssp
