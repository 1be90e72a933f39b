#include "ssp/families.hpp"

namespace ssp {

namespace {

long c2(long n) { return n * (n - 1) / 2; }

[[noreturn]] void bad_form(const char* fam, int form) {
  throw domain_error(std::string(fam) + ": no form " + std::to_string(form));
}

void check_range(long d, long j, long i, const char* fam) {
  if (j < 0 || j > d || i < 0 || i > d)
    throw domain_error(std::string(fam) + ": index out of range (j=" + std::to_string(j) +
                       ", i=" + std::to_string(i) + ", d=" + std::to_string(d) + ")");
}

}  // namespace

Int krawtchouk(long d, long q, long j, long i, int form) {
  check_range(d, j, i, "krawtchouk");
  Int qm1(q - 1), acc = 0;
  switch (form) {
    case 1:
      for (long h = 0; h <= j; ++h) {
        Int t = pow_int(qm1, j - h) * binom(i, h) * binom(d - i, j - h);
        acc += h % 2 == 0 ? t : -t;
      }
      return acc;
    case 2:
      for (long h = 0; h <= j; ++h) {
        Int t = pow_int(Int(-q), h) * pow_int(qm1, j - h) * binom(i, h) * binom(d - h, j - h);
        acc += t;
      }
      return acc;
    case 3:
      for (long h = 0; h <= j; ++h) {
        Int t = pow_int(Int(q), j - h) * binom(d - i, j - h) * binom(d - j + h, h);
        acc += h % 2 == 0 ? t : -t;
      }
      return acc;
    default:
      bad_form("krawtchouk", form);
  }
}

Int eberlein(long n, long d, long j, long i, int form) {
  check_range(d, j, i, "eberlein");
  Int acc = 0;
  switch (form) {
    case 1:
      for (long h = 0; h <= j; ++h) {
        Int t = binom(i, h) * binom(d - i, j - h) * binom(n - d - i, j - h);
        acc += h % 2 == 0 ? t : -t;
      }
      return acc;
    case 2:
      for (long h = 0; h <= j; ++h) {
        Int t = binom(d - i, h) * binom(d - h, j - h) * binom(n - d - i + h, h);
        acc += (j - h) % 2 == 0 ? t : -t;
      }
      return acc;
    case 3:
      for (long h = 0; h <= i; ++h) {
        Int t = binom(i, h) * binom(d - h, j) * binom(n - d - i + h, n - d - j);
        acc += (i - h) % 2 == 0 ? t : -t;
      }
      return acc;
    default:
      bad_form("eberlein", form);
  }
}

Int kneser_eigen(long n, long d, long i) {
  check_range(d, d, i, "kneser");
  Int v = binom(n - d - i, d - i);
  return i % 2 == 0 ? v : -v;
}

Int grassmann_eigen(long q, long n, long d, long j, long i, int form) {
  check_range(d, j, i, "grassmann");
  Int b(q), acc = 0;
  switch (form) {
    case 1:
      for (long h = 0; h <= j; ++h) {
        Int f = gauss_binom(d - i, h, b) * gauss_binom(d - h, j - h, b) *
                gauss_binom(n - d - i + h, h, b);
        if (f == 0) continue;
        Int t = pow_int(b, h * i + c2(j - h)) * f;
        acc += (j - h) % 2 == 0 ? t : -t;
      }
      return acc;
    case 2:
      for (long h = 0; h <= i; ++h) {
        Int f = gauss_binom(i, h, b) * gauss_binom(d - h, j, b) *
                gauss_binom(n - d - i + h, n - d - j, b);
        if (f == 0) continue;
        // Nonzero factors force j - i + h >= 0, so the exponent is genuine.
        long e = j * (j - i + h) + c2(i - h);
        Int t = pow_int(b, e) * f;
        acc += (i - h) % 2 == 0 ? t : -t;
      }
      return acc;
    default:
      bad_form("grassmann", form);
  }
}

Int dualpolar_eigen(long q, long d, HalfInt e, long j, long i) {
  check_range(d, j, i, "dualpolar");
  Int b(q), acc = 0;
  long lo = std::max(i - j, 0L), hi = std::min(d - j, i);
  for (long h = lo; h <= hi; ++h) {
    Int f = gauss_binom(d - i, d - j - h, b) * gauss_binom(i, h, b);
    if (f == 0) continue;
    HalfInt expo = HalfInt::whole(c2(i - h) + c2(j - i + h)) + (j - i + h) * e;
    Int t = pow_halfint(b, expo) * f;
    acc += (i - h) % 2 == 0 ? t : -t;
  }
  return acc;
}

Int bilinear_eigen(long q, long d, long e, long j, long i) {
  check_range(d, j, i, "bilinear");
  Int b(q), acc = 0;
  for (long h = 0; h <= j; ++h) {
    Int f = gauss_binom(d - h, d - j, b) * gauss_binom(d - i, h, b);
    if (f == 0) continue;
    Int t = pow_int(b, e * h + c2(j - h)) * f;
    acc += (j - h) % 2 == 0 ? t : -t;
  }
  return acc;
}

Int alternating_eigen(long q, long n, long j, long i) {
  long d = n / 2, m = 2 * n - 2 * d - 1;
  check_range(d, j, i, "alternating");
  Int b = Int(q) * Int(q), acc = 0;
  for (long h = 0; h <= j; ++h) {
    Int f = gauss_binom(d - h, d - j, b) * gauss_binom(d - i, h, b);
    if (f == 0) continue;
    Int t = pow_int(Int(q), (j - h) * (j - h - 1) + h * m) * f;
    acc += (j - h) % 2 == 0 ? t : -t;
  }
  return acc;
}

Int hermitian_eigen(long q, long d, long j, long i) {
  check_range(d, j, i, "hermitian");
  Int b(-q), acc = 0;
  for (long h = 0; h <= j; ++h) {
    Int f = gauss_binom(d - h, d - j, b) * gauss_binom(d - i, h, b);
    if (f == 0) continue;
    acc += pow_int(b, c2(j - h) + h * d) * f;
  }
  return j % 2 == 0 ? acc : -acc;
}

int form_count(const SchemeId& s) {
  std::string f = s.family();
  if (f == "hamming" || f == "johnson") return 3;
  if (f == "grassmann") return 2;
  return 1;
}

Int eigen_entry(const SchemeId& s, long j, long i, int form) {
  return std::visit(
      [&](const auto& x) -> Int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Hamming>) return krawtchouk(x.d, x.q, j, i, form);
        else if constexpr (std::is_same_v<T, Johnson>) return eberlein(x.n, x.d, j, i, form);
        else if constexpr (std::is_same_v<T, Grassmann>)
          return grassmann_eigen(x.q, x.n, x.d, j, i, form);
        else if constexpr (std::is_same_v<T, DualPolar>)
          return dualpolar_eigen(x.q, x.d, x.e, j, i);
        else if constexpr (std::is_same_v<T, Bilinear>)
          return bilinear_eigen(x.q, x.d, x.e, j, i);
        else if constexpr (std::is_same_v<T, Alternating>)
          return alternating_eigen(x.q, x.n, j, i);
        else
          return hermitian_eigen(x.q, x.d, j, i);
      },
      s.v());
}

EigenMatrix eigenmatrix_unchecked(const SchemeId& s) {
  return p_matrix_recurrence(*family_to_classical(s));
}

EigenMatrix eigenmatrix(const SchemeId& s) {
  long d = s.diameter();
  EigenMatrix P(d);
  for (long i = 0; i <= d; ++i)
    for (long j = 0; j <= d; ++j) P.at(i, j) = eigen_entry(s, j, i);
  EigenMatrix R = eigenmatrix_unchecked(s);
  for (long i = 0; i <= d; ++i)
    for (long j = 0; j <= d; ++j)
      if (P.at(i, j) != R.at(i, j))
        throw consistency_error(s.str() + ": formula and recurrence disagree at (i=" +
                                std::to_string(i) + ", j=" + std::to_string(j) + "): " +
                                P.at(i, j).get_str() + " vs " + R.at(i, j).get_str());
  return P;
}

}  // namespace ssp
