#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ssp {

using Int = mpz_class;
using Rat = mpq_class;

struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Raised when a value that must be exact (a division in a recurrence, a
// multiplicity, ...) fails its integrality check.
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Half-integers, stored as twice the value. Dual polar schemes take
// e in {0, 1/2, 1, 3/2, 2}; all arithmetic on exponents stays exact.
struct HalfInt {
  long twice = 0;

  HalfInt() = default;
  explicit HalfInt(long twice_value) : twice(twice_value) {}
  static HalfInt whole(long v) { return HalfInt(2 * v); }
  static HalfInt parse(const std::string& s);

  bool is_integer() const { return twice % 2 == 0; }
  long integer() const;
  std::string str() const;

  friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
  friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
  friend HalfInt operator*(long c, HalfInt a) { return HalfInt(c * a.twice); }
  friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
  friend auto operator<=>(HalfInt a, HalfInt b) { return a.twice <=> b.twice; }
};

// binomial(n, k); n >= 0, out-of-range k gives 0.
Int binom(long n, long k);

// base^e for e >= 0.
Int pow_int(const Int& base, long e);

// base^e as a rational; negative e allowed, base must be nonzero then.
Rat rat_pow(const Int& base, long e);

// [n over 1]_b: the b-analog of n, (b^n - 1)/(b - 1); equals n at b = 1.
Int gauss1(long n, const Int& b);

// Gaussian binomial [n over m]_b over any integer base b (negative bases
// included, so Hermitian b = -q works unchanged):
//   0 for m < 0 or m > n, binom(n, m) at b = 1, otherwise
//   prod_{h=0}^{m-1} (b^{n-h} - 1)/(b^{m-h} - 1), checked to be integral.
// Bases 0 and -1 make the product degenerate and are rejected for m >= 1.
Int gauss_binom(long n, long m, const Int& b);

// q^e for half-integral e >= 0. Odd twice requires q to be a perfect
// square (the unitary dual polar families guarantee this).
Int pow_halfint(const Int& q, HalfInt e);

bool is_perfect_square(const Int& q);

// Exact square root; throws if q is not a perfect square.
Int isqrt_exact(const Int& q);

// Numerator of an exact integer rational; throws consistency_error otherwise.
Int rat_to_int_exact(const Rat& r, const std::string& what);

int sign_of(const Int& x);

// Parallel map with deterministic merge: slot i always receives f(i).
// jobs <= 0 resolves to SCHEME_SPECTRA_JOBS or hardware concurrency.
int resolve_jobs(int jobs);

}  // namespace ssp
