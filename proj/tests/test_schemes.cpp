#include "doctest.h"

#include <vector>

#include "ssp/schemes.hpp"

using namespace ssp;

namespace {

EigenMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  EigenMatrix P(static_cast<long>(rows.size()) - 1);
  for (long i = 0; i <= P.d; ++i)
    for (long j = 0; j <= P.d; ++j) P.at(i, j) = rows[i][j];
  return P;
}

}  // namespace

TEST_CASE("scheme id parsing and validation") {
  SchemeId h = SchemeId::parse("hamming:d=4,q=3");
  CHECK(h.family() == "hamming");
  CHECK(h.diameter() == 4);
  CHECK(h.str() == "hamming:d=4,q=3");
  CHECK(h.as<Hamming>()->q == 3);

  CHECK(SchemeId::parse("johnson:n=8,d=3").diameter() == 3);
  CHECK(SchemeId::parse("alternating:q=2,n=7").diameter() == 3);
  CHECK(SchemeId::parse("dualpolar:q=4,d=3,e=1/2").as<DualPolar>()->e == HalfInt(1));

  CHECK_THROWS_AS(SchemeId::parse("johnson:n=5,d=3"), invalid_parameters);
  CHECK_THROWS_AS(SchemeId::parse("grassmann:q=6,n=8,d=3"), invalid_parameters);
  CHECK_THROWS_AS(SchemeId::parse("dualpolar:q=2,d=3,e=1/2"), invalid_parameters);
  CHECK_THROWS_AS(SchemeId::parse("dualpolar:q=2,d=3,e=3"), invalid_parameters);
  CHECK_THROWS_AS(SchemeId::parse("bilinear:q=2,d=4,e=3"), invalid_parameters);
  CHECK_THROWS_AS(SchemeId::parse("hamming:d=4"), invalid_parameters);
  CHECK_THROWS_AS(SchemeId::parse("hamming:d=0,q=3"), invalid_parameters);
  CHECK_THROWS_AS(SchemeId::parse("petersen:k=3"), invalid_parameters);
  CHECK_THROWS_AS(SchemeId::parse("hamming"), invalid_parameters);
}

TEST_CASE("prime power recognition") {
  CHECK(is_prime_power(2));
  CHECK(is_prime_power(27));
  CHECK(is_prime_power(32));
  CHECK(is_prime_power(49));
  CHECK_FALSE(is_prime_power(1));
  CHECK_FALSE(is_prime_power(6));
  CHECK_FALSE(is_prime_power(12));
}

TEST_CASE("classical parameters per family") {
  auto cp = [](const std::string& s) { return *family_to_classical(SchemeId::parse(s)); };

  ClassicalParams h = cp("hamming:d=4,q=3");
  CHECK(h.d == 4);
  CHECK(h.b == 1);
  CHECK(h.alpha == 0);
  CHECK(h.beta == 2);

  ClassicalParams j = cp("johnson:n=8,d=3");
  CHECK(j.b == 1);
  CHECK(j.alpha == 1);
  CHECK(j.beta == 5);

  ClassicalParams g = cp("grassmann:q=2,n=8,d=3");
  CHECK(g.b == 2);
  CHECK(g.alpha == 2);
  CHECK(g.beta == 2 * 31);  // q [n-d over 1]_q

  ClassicalParams c = cp("dualpolar:q=4,d=3,e=3/2");
  CHECK(c.b == 4);
  CHECK(c.alpha == 0);
  CHECK(c.beta == 8);

  ClassicalParams bl = cp("bilinear:q=2,d=2,e=3");
  CHECK(bl.b == 2);
  CHECK(bl.alpha == 1);
  CHECK(bl.beta == 7);

  ClassicalParams a = cp("alternating:q=2,n=4");
  CHECK(a.d == 2);
  CHECK(a.b == 4);
  CHECK(a.alpha == 3);
  CHECK(a.beta == 7);

  ClassicalParams he = cp("hermitian:q=2,d=2");
  CHECK(he.b == -2);
  CHECK(he.alpha == -3);
  CHECK(he.beta == -5);
  CHECK(intersection_numbers(he).k == 5);
}

TEST_CASE("self-dual parameter detection") {
  auto sd = [](const std::string& s) {
    return self_dual_params(*family_to_classical(SchemeId::parse(s)));
  };
  CHECK(sd("hamming:d=4,q=3"));
  CHECK(sd("bilinear:q=3,d=2,e=4"));
  CHECK(sd("alternating:q=2,n=6"));
  CHECK(sd("hermitian:q=3,d=3"));
  CHECK_FALSE(sd("johnson:n=8,d=3"));
  CHECK_FALSE(sd("grassmann:q=2,n=8,d=3"));
  CHECK_FALSE(sd("dualpolar:q=2,d=3,e=1"));
}

TEST_CASE("intersection numbers of H(4,3)") {
  IntersectionArray ia = intersection_numbers(*family_to_classical(SchemeId::parse("hamming:d=4,q=3")));
  CHECK(ia.k == 8);
  CHECK(ia.b_list == std::vector<Int>{8, 6, 4, 2});
  CHECK(ia.c_list == std::vector<Int>{1, 2, 3, 4});
  CHECK(ia.a_list == std::vector<Int>{0, 1, 2, 3, 4});
}

TEST_CASE("intersection numbers of J(8,3)") {
  IntersectionArray ia = intersection_numbers(*family_to_classical(SchemeId::parse("johnson:n=8,d=3")));
  CHECK(ia.k == 15);
  CHECK(ia.b_list == std::vector<Int>{15, 8, 3});
  CHECK(ia.c_list == std::vector<Int>{1, 4, 9});
  CHECK(ia.a_list == std::vector<Int>{0, 6, 8, 6});
}

TEST_CASE("eigenvalue lists") {
  auto theta = [](const std::string& s) {
    return eigenvalues_theta(*family_to_classical(SchemeId::parse(s)));
  };
  CHECK(theta("hamming:d=4,q=3") == std::vector<Int>{8, 5, 2, -1, -4});
  CHECK(theta("johnson:n=8,d=3") == std::vector<Int>{15, 7, 1, -3});
  CHECK(theta("alternating:q=2,n=4") == std::vector<Int>{35, 3, -5});
  // b < 0 keeps natural index order; theta need not descend.
  CHECK(theta("hermitian:q=2,d=2") == std::vector<Int>{5, -3, 1});
}

TEST_CASE("recurrence reproduces H(4,3)") {
  EigenMatrix want = from_rows({{1, 8, 24, 32, 16},
                                {1, 5, 6, -4, -8},
                                {1, 2, -3, -4, 4},
                                {1, -1, -3, 5, -2},
                                {1, -4, 6, -4, 1}});
  CHECK(p_matrix_recurrence(SchemeId::parse("hamming:d=4,q=3")) == want);
}

TEST_CASE("recurrence reproduces J(8,3)") {
  EigenMatrix want = from_rows({{1, 15, 30, 10},
                                {1, 7, -2, -6},
                                {1, 1, -5, 3},
                                {1, -3, 3, -1}});
  CHECK(p_matrix_recurrence(SchemeId::parse("johnson:n=8,d=3")) == want);
}

TEST_CASE("recurrence reproduces the q=2, e=1 dual polar matrix at d=5") {
  EigenMatrix want = from_rows({{1, 62, 1240, 9920, 31744, 32768},
                                {1, 29, 250, 680, 64, -1024},
                                {1, 11, 16, -76, -80, 128},
                                {1, -1, -20, 20, 64, -64},
                                {1, -13, 40, 20, -176, 128},
                                {1, -31, 310, -1240, 1984, -1024}});
  CHECK(p_matrix_recurrence(SchemeId::parse("dualpolar:q=2,d=5,e=1")) == want);
}

TEST_CASE("recurrence reproduces the alternating forms matrix at (2,4)") {
  EigenMatrix want = from_rows({{1, 35, 28}, {1, 3, -4}, {1, -5, 4}});
  CHECK(p_matrix_recurrence(SchemeId::parse("alternating:q=2,n=4")) == want);
}

TEST_CASE("last row closed form") {
  auto lr = [](const std::string& s) {
    return last_row(*family_to_classical(SchemeId::parse(s)));
  };
  CHECK(lr("hamming:d=7,q=2") == std::vector<Int>{1, -7, 21, -35, 35, -21, 7, -1});
  CHECK(lr("grassmann:q=2,n=4,d=2") == std::vector<Int>{1, -3, 2});
  SchemeId dp = SchemeId::parse("dualpolar:q=2,d=5,e=1");
  EigenMatrix P = p_matrix_recurrence(dp);
  std::vector<Int> row = last_row(*family_to_classical(dp));
  for (long j = 0; j <= 5; ++j) CHECK(P.at(5, j) == row[j]);
}

TEST_CASE("vertex counts") {
  CHECK(vertex_count(SchemeId::parse("hamming:d=4,q=3")) == 81);
  CHECK(vertex_count(SchemeId::parse("johnson:n=8,d=3")) == 56);
  CHECK(vertex_count(SchemeId::parse("grassmann:q=2,n=8,d=3")) == 97155);
  CHECK(vertex_count(SchemeId::parse("dualpolar:q=2,d=5,e=1")) == 75735);
  CHECK(vertex_count(SchemeId::parse("bilinear:q=2,d=2,e=3")) == 64);
  CHECK(vertex_count(SchemeId::parse("alternating:q=2,n=4")) == 64);
  CHECK(vertex_count(SchemeId::parse("hermitian:q=2,d=2")) == 16);
}

TEST_CASE("multiplicities of J(8,3)") {
  CHECK(multiplicities(SchemeId::parse("johnson:n=8,d=3")) == std::vector<Int>{1, 7, 20, 28});
}

TEST_CASE("self-dual multiplicities equal valencies") {
  for (const char* name : {"hamming:d=4,q=3", "bilinear:q=2,d=2,e=3", "alternating:q=2,n=5",
                           "hermitian:q=3,d=2"}) {
    SchemeId s = SchemeId::parse(name);
    EigenMatrix P = p_matrix_recurrence(s);
    std::vector<Int> m = multiplicities(s, P);
    for (long i = 0; i <= P.d; ++i) CHECK(m[i] == P.at(0, i));
  }
}

TEST_CASE("trace identity v k_j = sum_i m_i P_ij^2") {
  for (const char* name : {"hamming:d=5,q=3", "johnson:n=9,d=4", "grassmann:q=2,n=8,d=3",
                           "dualpolar:q=4,d=4,e=3/2", "hermitian:q=2,d=3"}) {
    SchemeId s = SchemeId::parse(name);
    EigenMatrix P = p_matrix_recurrence(s);
    std::vector<Int> m = multiplicities(s, P);
    Int v = vertex_count(s);
    for (long j = 0; j <= P.d; ++j) {
      Int lhs = v * P.at(0, j);
      Int rhs = 0;
      for (long i = 0; i <= P.d; ++i) rhs += m[i] * P.at(i, j) * P.at(i, j);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("self-dual matrices satisfy the ratio symmetry") {
  for (const char* name : {"hamming:d=6,q=4", "bilinear:q=3,d=3,e=4", "alternating:q=2,n=7",
                           "hermitian:q=2,d=4"}) {
    SchemeId s = SchemeId::parse(name);
    ClassicalParams cp = *family_to_classical(s);
    REQUIRE(self_dual_params(cp));
    EigenMatrix P = p_matrix_recurrence(cp);
    for (long i = 0; i <= P.d; ++i)
      for (long j = 0; j <= P.d; ++j)
        CHECK(P.at(i, j) * P.at(0, i) == P.at(j, i) * P.at(0, j));
    CHECK(vertex_count(s) == pow_int(cp.beta + 1, cp.d));
  }
}

TEST_CASE("self-dual last column ratio") {
  // P_{i,d} / P_{i+1,d} = 1 - (beta+1) b^{-i} when alpha = b - 1.
  SchemeId s = SchemeId::parse("hamming:d=4,q=3");
  EigenMatrix P = p_matrix_recurrence(s);
  for (long i = 0; i < 4; ++i) CHECK(P.at(i, 4) == -2 * P.at(i + 1, 4));

  SchemeId t = SchemeId::parse("bilinear:q=2,d=3,e=4");
  ClassicalParams cp = *family_to_classical(t);
  EigenMatrix Q = p_matrix_recurrence(cp);
  for (long i = 0; i < 3; ++i) {
    // ratio check cleared of denominators: P_{i,d} b^i = (b^i - (beta+1)) P_{i+1,d}
    Int bi = pow_int(cp.b, i);
    CHECK(Q.at(i, 3) * bi == (bi - (cp.beta + 1)) * Q.at(i + 1, 3));
  }
}

TEST_CASE("spectrum aggregates and checks totals") {
  SchemeId s = SchemeId::parse("johnson:n=8,d=3");
  SpectrumData sd = spectrum(s, p_matrix_recurrence(s));
  CHECK(sd.v == 56);
  CHECK(sd.valencies == std::vector<Int>{1, 15, 30, 10});
  CHECK(sd.multiplicities == std::vector<Int>{1, 7, 20, 28});
}
