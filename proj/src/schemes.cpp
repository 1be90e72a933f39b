#include "ssp/schemes.hpp"

#include <map>
#include <sstream>

namespace ssp {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw invalid_parameters(msg); }

std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) bad("malformed parameter '" + item + "'");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

long get_long(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) bad("missing parameter '" + key + "'");
  try {
    size_t pos = 0;
    long v = std::stol(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    bad("parameter '" + key + "' is not an integer: '" + it->second + "'");
  }
}

}  // namespace

SchemeId::SchemeId(Variant v) : v_(std::move(v)) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Hamming>) {
          if (s.d < 1 || s.q < 2) bad("hamming needs d >= 1, q >= 2");
        } else if constexpr (std::is_same_v<T, Johnson>) {
          if (s.d < 1 || s.n < 2 * s.d) bad("johnson needs d >= 1, n >= 2d");
        } else if constexpr (std::is_same_v<T, Grassmann>) {
          if (s.d < 1 || s.n < 2 * s.d) bad("grassmann needs d >= 1, n >= 2d");
          if (!is_prime_power(s.q)) bad("grassmann needs q a prime power");
        } else if constexpr (std::is_same_v<T, DualPolar>) {
          if (s.d < 1 || s.q < 2) bad("dualpolar needs d >= 1, q >= 2");
          if (s.e.twice < 0 || s.e.twice > 4)
            bad("dualpolar needs e in {0, 1/2, 1, 3/2, 2}");
          if (!s.e.is_integer() && !is_perfect_square(Int(s.q)))
            bad("dualpolar with half-integral e needs q a perfect square");
        } else if constexpr (std::is_same_v<T, Bilinear>) {
          if (s.q < 2 || s.d < 1 || s.e < s.d) bad("bilinear needs q >= 2, 1 <= d <= e");
        } else if constexpr (std::is_same_v<T, Alternating>) {
          if (s.q < 2 || s.n < 2) bad("alternating needs q >= 2, n >= 2");
        } else if constexpr (std::is_same_v<T, Hermitian>) {
          if (s.q < 2 || s.d < 1) bad("hermitian needs q >= 2, d >= 1");
        }
      },
      v_);
}

SchemeId SchemeId::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) bad("scheme must look like family:k=v,...: '" + text + "'");
  std::string fam = text.substr(0, colon);
  auto kv = parse_kv(text.substr(colon + 1));
  if (fam == "hamming") return SchemeId(Hamming{get_long(kv, "d"), get_long(kv, "q")});
  if (fam == "johnson") return SchemeId(Johnson{get_long(kv, "n"), get_long(kv, "d")});
  if (fam == "grassmann")
    return SchemeId(Grassmann{get_long(kv, "q"), get_long(kv, "n"), get_long(kv, "d")});
  if (fam == "dualpolar") {
    auto it = kv.find("e");
    if (it == kv.end()) bad("missing parameter 'e'");
    HalfInt e = HalfInt::parse(it->second);
    return SchemeId(DualPolar{get_long(kv, "q"), get_long(kv, "d"), e});
  }
  if (fam == "bilinear")
    return SchemeId(Bilinear{get_long(kv, "q"), get_long(kv, "d"), get_long(kv, "e")});
  if (fam == "alternating") return SchemeId(Alternating{get_long(kv, "q"), get_long(kv, "n")});
  if (fam == "hermitian") return SchemeId(Hermitian{get_long(kv, "q"), get_long(kv, "d")});
  bad("unknown family '" + fam + "'");
}

long SchemeId::diameter() const {
  return std::visit(
      [](const auto& s) -> long {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Hamming>) return s.d;
        else if constexpr (std::is_same_v<T, Johnson>) return s.d;
        else if constexpr (std::is_same_v<T, Grassmann>) return s.d;
        else if constexpr (std::is_same_v<T, DualPolar>) return s.d;
        else if constexpr (std::is_same_v<T, Bilinear>) return s.d;
        else if constexpr (std::is_same_v<T, Alternating>) return s.n / 2;
        else return s.d;
      },
      v_);
}

std::string SchemeId::family() const {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Hamming>) return "hamming";
        else if constexpr (std::is_same_v<T, Johnson>) return "johnson";
        else if constexpr (std::is_same_v<T, Grassmann>) return "grassmann";
        else if constexpr (std::is_same_v<T, DualPolar>) return "dualpolar";
        else if constexpr (std::is_same_v<T, Bilinear>) return "bilinear";
        else if constexpr (std::is_same_v<T, Alternating>) return "alternating";
        else return "hermitian";
      },
      v_);
}

std::string SchemeId::str() const {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Hamming>)
          return "hamming:d=" + std::to_string(s.d) + ",q=" + std::to_string(s.q);
        else if constexpr (std::is_same_v<T, Johnson>)
          return "johnson:n=" + std::to_string(s.n) + ",d=" + std::to_string(s.d);
        else if constexpr (std::is_same_v<T, Grassmann>)
          return "grassmann:q=" + std::to_string(s.q) + ",n=" + std::to_string(s.n) +
                 ",d=" + std::to_string(s.d);
        else if constexpr (std::is_same_v<T, DualPolar>)
          return "dualpolar:q=" + std::to_string(s.q) + ",d=" + std::to_string(s.d) +
                 ",e=" + s.e.str();
        else if constexpr (std::is_same_v<T, Bilinear>)
          return "bilinear:q=" + std::to_string(s.q) + ",d=" + std::to_string(s.d) +
                 ",e=" + std::to_string(s.e);
        else if constexpr (std::is_same_v<T, Alternating>)
          return "alternating:q=" + std::to_string(s.q) + ",n=" + std::to_string(s.n);
        else
          return "hermitian:q=" + std::to_string(s.q) + ",d=" + std::to_string(s.d);
      },
      v_);
}

bool is_prime_power(long q) {
  if (q < 2) return false;
  for (long p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  }
  return true;  // prime
}

std::optional<ClassicalParams> family_to_classical(const SchemeId& s) {
  ClassicalParams cp;
  std::visit(
      [&cp](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Hamming>) {
          cp = {x.d, 1, 0, Int(x.q - 1)};
        } else if constexpr (std::is_same_v<T, Johnson>) {
          cp = {x.d, 1, 1, Int(x.n - x.d)};
        } else if constexpr (std::is_same_v<T, Grassmann>) {
          cp = {x.d, Int(x.q), Int(x.q), Int(x.q) * gauss1(x.n - x.d, Int(x.q))};
        } else if constexpr (std::is_same_v<T, DualPolar>) {
          cp = {x.d, Int(x.q), 0, pow_halfint(Int(x.q), x.e)};
        } else if constexpr (std::is_same_v<T, Bilinear>) {
          cp = {x.d, Int(x.q), Int(x.q - 1), pow_int(Int(x.q), x.e) - 1};
        } else if constexpr (std::is_same_v<T, Alternating>) {
          long d = x.n / 2;
          Int b = Int(x.q) * Int(x.q);
          cp = {d, b, b - 1, pow_int(Int(x.q), 2 * x.n - 2 * d - 1) - 1};
        } else {  // Hermitian
          Int b(-x.q);
          cp = {x.d, b, b - 1, -pow_int(b, x.d) - 1};
        }
      },
      s.v());
  return cp;
}

bool self_dual_params(const ClassicalParams& cp) { return cp.alpha == cp.b - 1; }

IntersectionArray intersection_numbers(const ClassicalParams& cp) {
  IntersectionArray ia;
  Int bd = gauss1(cp.d, cp.b);
  ia.k = cp.beta * bd;
  for (long i = 0; i <= cp.d; ++i) {
    Int gi = gauss1(i, cp.b);
    Int gim1 = i >= 1 ? gauss1(i - 1, cp.b) : Int(0);
    Int bi = (bd - gi) * (cp.beta - cp.alpha * gi);
    Int ci = gi * (1 + cp.alpha * gim1);
    Int ai = gi * (cp.beta - 1 + cp.alpha * (bd - gi - gim1));
    if (i < cp.d) ia.b_list.push_back(bi);
    if (i >= 1) ia.c_list.push_back(ci);
    ia.a_list.push_back(ai);
    if (ai < 0 || (i < cp.d && bi < 0) || (i >= 1 && ci < 0))
      throw invalid_parameters("negative intersection number at i=" + std::to_string(i));
    if (ai + ci + (i < cp.d ? bi : Int(0)) != ia.k)
      throw invalid_parameters("a_i + b_i + c_i != k at i=" + std::to_string(i));
  }
  return ia;
}

std::vector<Int> eigenvalues_theta(const ClassicalParams& cp) {
  std::vector<Int> theta;
  theta.reserve(cp.d + 1);
  for (long i = 0; i <= cp.d; ++i)
    theta.push_back(gauss1(cp.d - i, cp.b) * (cp.beta - cp.alpha * gauss1(i, cp.b)) -
                    gauss1(i, cp.b));
  return theta;
}

EigenMatrix p_matrix_recurrence(const ClassicalParams& cp) {
  IntersectionArray ia = intersection_numbers(cp);
  std::vector<Int> theta = eigenvalues_theta(cp);
  EigenMatrix P(cp.d);
  for (long i = 0; i <= cp.d; ++i) {
    P.at(i, 0) = 1;
    if (cp.d >= 1) P.at(i, 1) = theta[i];
    for (long j = 1; j < cp.d; ++j) {
      Int num = (theta[i] - ia.a_list[j]) * P.at(i, j) - ia.b_list[j - 1] * P.at(i, j - 1);
      const Int& c = ia.c_list[j];  // c_{j+1}
      Int quo, rem;
      mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), c.get_mpz_t());
      if (rem != 0)
        throw invalid_parameters("non-exact division in P recurrence at (i=" +
                                 std::to_string(i) + ", j=" + std::to_string(j + 1) + ")");
      P.at(i, j + 1) = quo;
    }
  }
  return P;
}

EigenMatrix p_matrix_recurrence(const SchemeId& s) {
  return p_matrix_recurrence(*family_to_classical(s));
}

std::vector<Int> last_row(const ClassicalParams& cp) {
  std::vector<Int> row;
  row.reserve(cp.d + 1);
  for (long j = 0; j <= cp.d; ++j) {
    Int v = gauss_binom(cp.d, j, cp.b) * pow_int(cp.b, j * (j - 1) / 2);
    row.push_back(j % 2 == 0 ? v : -v);
  }
  return row;
}

Int vertex_count(const SchemeId& s) {
  return std::visit(
      [](const auto& x) -> Int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Hamming>) {
          return pow_int(Int(x.q), x.d);
        } else if constexpr (std::is_same_v<T, Johnson>) {
          return binom(x.n, x.d);
        } else if constexpr (std::is_same_v<T, Grassmann>) {
          return gauss_binom(x.n, x.d, Int(x.q));
        } else if constexpr (std::is_same_v<T, DualPolar>) {
          Int v = 1;
          for (long i = 0; i < x.d; ++i) v *= 1 + pow_halfint(Int(x.q), x.e + HalfInt::whole(i));
          return v;
        } else if constexpr (std::is_same_v<T, Bilinear>) {
          return pow_int(Int(x.q), x.d * x.e);
        } else if constexpr (std::is_same_v<T, Alternating>) {
          return pow_int(Int(x.q), x.n * (x.n - 1) / 2);
        } else {
          return pow_int(Int(x.q), x.d * x.d);
        }
      },
      s.v());
}

std::vector<Int> multiplicities(const SchemeId& s, const EigenMatrix& P) {
  long d = P.d;
  Int v = vertex_count(s);
  std::vector<Int> m;
  m.reserve(d + 1);
  Int total = 0;
  for (long i = 0; i <= d; ++i) {
    Rat denom = 0;
    for (long j = 0; j <= d; ++j) {
      Rat term(P.at(i, j) * P.at(i, j), P.at(0, j));
      term.canonicalize();
      denom += term;
    }
    Rat mi = Rat(v) / denom;
    mi.canonicalize();
    Int mz = rat_to_int_exact(mi, "multiplicity m_" + std::to_string(i));
    if (mz <= 0)
      throw consistency_error("multiplicity m_" + std::to_string(i) + " not positive");
    total += mz;
    m.push_back(mz);
  }
  if (total != v) throw consistency_error("multiplicities do not sum to vertex count");
  return m;
}

std::vector<Int> multiplicities(const SchemeId& s) {
  return multiplicities(s, p_matrix_recurrence(*family_to_classical(s)));
}

SpectrumData spectrum(const SchemeId& s, const EigenMatrix& P) {
  SpectrumData sd;
  sd.v = vertex_count(s);
  Int sum = 0;
  for (long j = 0; j <= P.d; ++j) {
    sd.valencies.push_back(P.at(0, j));
    sum += P.at(0, j);
  }
  if (sum != sd.v) throw consistency_error("valencies do not sum to vertex count");
  sd.multiplicities = multiplicities(s, P);
  return sd;
}

}  // namespace ssp
