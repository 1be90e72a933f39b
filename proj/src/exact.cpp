#include "ssp/exact.hpp"

#include <cstdlib>
#include <thread>

namespace ssp {

HalfInt HalfInt::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return HalfInt::whole(std::stol(s));
    long num = std::stol(s.substr(0, slash));
    long den = std::stol(s.substr(slash + 1));
    if (den == 2) return HalfInt(num);
    if (den == 1) return HalfInt::whole(num);
  } catch (const std::exception&) {
  }
  throw domain_error("not a half-integer: '" + s + "'");
}

long HalfInt::integer() const {
  if (!is_integer()) throw domain_error("half-integer " + str() + " is not integral");
  return twice / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

Int binom(long n, long k) {
  if (n < 0) throw domain_error("binom: negative n = " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int pow_int(const Int& base, long e) {
  if (e < 0) throw domain_error("pow_int: negative exponent " + std::to_string(e));
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Rat rat_pow(const Int& base, long e) {
  if (e >= 0) return Rat(pow_int(base, e));
  if (base == 0) throw domain_error("rat_pow: 0 with negative exponent");
  Rat r(1, pow_int(base, -e));
  r.canonicalize();
  return r;
}

Int gauss1(long n, const Int& b) {
  if (n < 0) throw domain_error("gauss1: negative n = " + std::to_string(n));
  if (b == 1) return Int(n);
  Int num = pow_int(b, n) - 1;
  Int den = b - 1;
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw consistency_error("gauss1: non-exact division");
  return q;
}

Int gauss_binom(long n, long m, const Int& b) {
  if (n < 0) throw domain_error("gauss_binom: negative n = " + std::to_string(n));
  if (m < 0) return 0;
  if (b == 1) return binom(n, m);
  if (m == 0) return 1;
  if (b == 0 || b == -1)
    throw domain_error("gauss_binom: base " + b.get_str() + " with m >= 1 is degenerate");
  if (m > n) return 0;
  Int num = 1, den = 1;
  for (long h = 0; h < m; ++h) {
    num *= pow_int(b, n - h) - 1;
    den *= pow_int(b, m - h) - 1;
  }
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw consistency_error("gauss_binom: non-integral value");
  return q;
}

bool is_perfect_square(const Int& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_mpz_t()) != 0;
}

Int isqrt_exact(const Int& q) {
  if (!is_perfect_square(q))
    throw domain_error("isqrt_exact: " + q.get_str() + " is not a perfect square");
  Int r;
  mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());
  return r;
}

Int pow_halfint(const Int& q, HalfInt e) {
  if (e.twice < 0)
    throw domain_error("pow_halfint: negative exponent " + e.str());
  if (e.is_integer()) return pow_int(q, e.twice / 2);
  // q^{t/2} = sqrt(q)^t; half-integral exponents require a square base.
  return pow_int(isqrt_exact(q), e.twice);
}

Int rat_to_int_exact(const Rat& r, const std::string& what) {
  if (r.get_den() != 1)
    throw consistency_error(what + ": expected an integer, got " + r.get_str());
  return r.get_num();
}

int sign_of(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  if (const char* env = std::getenv("SCHEME_SPECTRA_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

}  // namespace ssp
