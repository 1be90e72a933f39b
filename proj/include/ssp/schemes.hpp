#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ssp/exact.hpp"

namespace ssp {

struct invalid_parameters : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Family { Hamming, Johnson, Grassmann, DualPolar, Bilinear, Alternating, Hermitian };

struct Hamming {
  long d, q;
};
struct Johnson {
  long n, d;
};
struct Grassmann {
  long q, n, d;
};
struct DualPolar {
  long q, d;
  HalfInt e;
};
struct Bilinear {
  long q, d, e;
};
struct Alternating {
  long q, n;
};
struct Hermitian {
  long q, d;
};

// One of the seven classical families, validated on construction:
//   hamming:d=4,q=3      d>=1, q>=2
//   johnson:n=8,d=3      n>=2d, d>=1
//   grassmann:q=2,n=8,d=3  q a prime power, n>=2d, d>=1
//   dualpolar:q=2,d=5,e=1  e in {0,1/2,1,3/2,2}; half-integral e needs square q
//   bilinear:q=2,d=2,e=3   1<=d<=e
//   alternating:q=2,n=5    n>=2
//   hermitian:q=2,d=3      d>=1
class SchemeId {
 public:
  using Variant = std::variant<Hamming, Johnson, Grassmann, DualPolar, Bilinear,
                               Alternating, Hermitian>;

  explicit SchemeId(Variant v);
  static SchemeId parse(const std::string& text);

  const Variant& v() const { return v_; }
  long diameter() const;
  Family kind() const { return static_cast<Family>(v_.index()); }
  std::string family() const;
  std::string str() const;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&v_);
  }

  friend bool operator==(const SchemeId& a, const SchemeId& b) { return a.str() == b.str(); }

 private:
  Variant v_;
};

// Classical parameters (d, b, alpha, beta); all seven families above admit them.
struct ClassicalParams {
  long d = 0;
  Int b, alpha, beta;
};

struct IntersectionArray {
  Int k;
  std::vector<Int> b_list;  // b_0 .. b_{d-1}
  std::vector<Int> c_list;  // c_1 .. c_d
  std::vector<Int> a_list;  // a_0 .. a_d
};

// (d+1)x(d+1) matrix of exact integers, row i = eigenspace, column j = distance.
// Row 0 holds the valencies; rows follow the family's natural eigenvalue order
// (descending theta whenever b > 0).
struct EigenMatrix {
  long d = 0;
  std::vector<Int> ent;

  EigenMatrix() = default;
  explicit EigenMatrix(long d_) : d(d_), ent((d_ + 1) * (d_ + 1)) {}
  const Int& at(long i, long j) const { return ent[i * (d + 1) + j]; }
  Int& at(long i, long j) { return ent[i * (d + 1) + j]; }

  friend bool operator==(const EigenMatrix& a, const EigenMatrix& b) {
    return a.d == b.d && a.ent == b.ent;
  }
};

struct SpectrumData {
  Int v;
  std::vector<Int> valencies;
  std::vector<Int> multiplicities;
};

std::optional<ClassicalParams> family_to_classical(const SchemeId& s);

// Intersection numbers from classical parameters; rejects negative entries
// and checks a_i + b_i + c_i = k.
IntersectionArray intersection_numbers(const ClassicalParams& cp);

// theta_i = [d-i over 1](beta - alpha [i over 1]) - [i over 1], i = 0..d.
std::vector<Int> eigenvalues_theta(const ClassicalParams& cp);

// Builds P by the three-term recurrence across columns,
//   P_{i,j+1} = ((theta_i - a_j) P_{ij} - b_{j-1} P_{i,j-1}) / c_{j+1},
// every division checked exact (invalid_parameters names the entry otherwise).
EigenMatrix p_matrix_recurrence(const ClassicalParams& cp);
EigenMatrix p_matrix_recurrence(const SchemeId& s);

// P_{d,j} = (-1)^j [d over j]_b b^C(j,2).
std::vector<Int> last_row(const ClassicalParams& cp);

Int vertex_count(const SchemeId& s);

// Multiplicities by orthogonality, m_i = v / sum_j P_ij^2 / k_j, exact and
// checked to be positive integers summing to v.
std::vector<Int> multiplicities(const SchemeId& s, const EigenMatrix& P);
std::vector<Int> multiplicities(const SchemeId& s);

SpectrumData spectrum(const SchemeId& s, const EigenMatrix& P);

bool is_prime_power(long q);

// True iff alpha = b - 1 (formally self-dual parameter line).
bool self_dual_params(const ClassicalParams& cp);

}  // namespace ssp
