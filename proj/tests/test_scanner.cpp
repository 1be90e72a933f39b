#include "doctest.h"

#include <algorithm>

#include "ssp/scanner.hpp"

using namespace ssp;

namespace {

bool has_pair(const CoincidenceRow& row, long h, long i, const std::string& tag) {
  for (size_t t = 0; t < row.pairs.size(); ++t)
    if (row.pairs[t] == std::make_pair(h, i) && row.explanations[t] == tag) return true;
  return false;
}

bool has_hit(const ZeroScan& scan, long d, long j, long i, const std::string& tag) {
  for (const auto& h : scan.hits)
    if (h.d == d && h.j == j && h.i == i && h.tag == tag) return true;
  return false;
}

}  // namespace

TEST_CASE("distinct count") {
  CHECK(distinct_count(SchemeId::parse("hamming:d=4,q=3"), 3) == 3);
  CHECK(distinct_count(SchemeId::parse("hamming:d=4,q=3"), 1) == 5);
  CHECK(distinct_count(SchemeId::parse("hamming:d=7,q=2"), 0) == 1);
  CHECK_THROWS_AS(distinct_count(SchemeId::parse("hamming:d=4,q=3"), 9),
                  std::invalid_argument);
}

TEST_CASE("coincidence pairs with explanations") {
  CoincidenceRow r = explain_coincidences(5, 2, 3);
  CHECK(r.distinct == 4);
  REQUIRE(r.pairs.size() == 2);
  CHECK(has_pair(r, 1, 2, "L-coin2-iii"));
  CHECK(has_pair(r, 3, 4, "L-coin2-iii"));

  r = explain_coincidences(6, 2, 4);
  CHECK(r.distinct == 4);
  REQUIRE(r.pairs.size() == 3);
  CHECK(has_pair(r, 0, 6, "L-coin2-i"));
  CHECK(has_pair(r, 1, 5, "L-coin2-i"));
  CHECK(has_pair(r, 2, 4, "L-coin2-i"));

  r = explain_coincidences(7, 3, 5);
  CHECK(r.distinct == 5);
  REQUIRE(r.pairs.size() == 3);
  CHECK(has_pair(r, 1, 2, "L-coinq-iii"));
  CHECK(has_pair(r, 3, 6, "unexplained"));
  CHECK(has_pair(r, 5, 7, "unexplained"));

  r = explain_coincidences(5, 4, 2);
  // q(h+i-1) = 2(d-1)(q-1) reads 4(h+i-1) = 24, so pairs sum to h+i = 7
  bool any_coinq_ii = false;
  for (const auto& e : r.explanations) any_coinq_ii = any_coinq_ii || e == "L-coinq-ii";
  CHECK(any_coinq_ii);

  // alternating last binary column: pairs step by two; (2,4) also matches the
  // reflection rule, which is listed first
  r = explain_coincidences(6, 2, 6);
  CHECK(has_pair(r, 0, 2, "L-coin2-iv"));
  CHECK(has_pair(r, 1, 3, "L-coin2-iv"));
  CHECK(has_pair(r, 2, 4, "L-coin2-i"));
}

TEST_CASE("connected components via multiplicities") {
  CHECK(connected_components(SchemeId::parse("hamming:d=4,q=3"), 2) == 1);
  CHECK(connected_components(SchemeId::parse("hamming:d=7,q=2"), 4) == 2);
  CHECK(connected_components(SchemeId::parse("hamming:d=4,q=2"), 2) == 2);
  CHECK(connected_components(SchemeId::parse("hamming:d=5,q=2"), 2) == 2);
  CHECK(connected_components(SchemeId::parse("hamming:d=5,q=2"), 1) == 1);
}

TEST_CASE("strongly regular parameters of distance-j graphs") {
  auto p = srg_params(SchemeId::parse("hamming:d=4,q=3"), 2);
  REQUIRE(p.has_value());
  CHECK(p->v == 81);
  CHECK(p->k == 24);
  CHECK(p->lambda == 9);
  CHECK(p->mu == 6);

  p = srg_params(SchemeId::parse("hamming:d=4,q=3"), 3);
  REQUIRE(p.has_value());
  CHECK(p->v == 81);
  CHECK(p->k == 32);
  CHECK(p->lambda == 13);
  CHECK(p->mu == 12);

  p = srg_params(SchemeId::parse("hamming:d=3,q=4"), 2);
  REQUIRE(p.has_value());
  CHECK(p->v == 64);
  CHECK(p->k == 27);
  CHECK(p->lambda == 10);
  CHECK(p->mu == 12);

  // distance-1 graph of H(4,3) has five distinct eigenvalues
  CHECK_FALSE(srg_params(SchemeId::parse("hamming:d=4,q=3"), 1).has_value());
  // disconnected: three values but two components
  CHECK_FALSE(srg_params(SchemeId::parse("hamming:d=7,q=2"), 4).has_value());
}

TEST_CASE("per-component strongly regular parameters") {
  auto p = component_srg_params(SchemeId::parse("hamming:d=7,q=2"), 4);
  REQUIRE(p.has_value());
  CHECK(p->v == 64);
  CHECK(p->k == 35);
  CHECK(p->lambda == 18);
  CHECK(p->mu == 20);

  p = component_srg_params(SchemeId::parse("hamming:d=5,q=2"), 2);
  REQUIRE(p.has_value());
  CHECK(p->v == 16);
  CHECK(p->k == 10);
  CHECK(p->lambda == 6);
  CHECK(p->mu == 6);

  p = component_srg_params(SchemeId::parse("hamming:d=4,q=2"), 2);
  REQUIRE(p.has_value());
  CHECK(p->v == 8);
  CHECK(p->k == 6);
  CHECK(p->lambda == 4);
  CHECK(p->mu == 6);
}

TEST_CASE("coincidence scan over a box") {
  CoincidenceScan scan = scan_coincidences(Box::parse("q=2..3,d=4..7"), 1000000);
  CHECK(scan.max_missing == 1000000);
  CHECK(std::is_sorted(scan.rows.begin(), scan.rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.d, a.q, a.j) < std::tie(b.d, b.q, b.j);
  }));
  bool found_523 = false, found_735 = false;
  for (const auto& r : scan.rows) {
    CHECK(r.distinct <= r.d);  // every reported row misses at least one value
    if (r.d == 5 && r.q == 2 && r.j == 3) found_523 = true;
    if (r.d == 7 && r.q == 3 && r.j == 5) found_735 = true;
  }
  CHECK(found_523);
  CHECK(found_735);

  // max_missing = 1 keeps only columns with a single repeated value
  CoincidenceScan tight = scan_coincidences(Box::parse("q=2..3,d=4..7"), 1);
  for (const auto& r : tight.rows) CHECK(r.distinct == r.d);

  CHECK_THROWS_AS(scan_coincidences(Box::parse("q=2,d=3"), 0), std::invalid_argument);
  CHECK_THROWS_AS(scan_coincidences(Box::parse("q=2,x=3"), 1), std::invalid_argument);
}

TEST_CASE("scan determinism across jobs") {
  Box box = Box::parse("q=2..5,d=2..9");
  CoincidenceScan a = scan_coincidences(box, 1000000, 1);
  CoincidenceScan b = scan_coincidences(box, 1000000, 4);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t t = 0; t < a.rows.size(); ++t) {
    CHECK(a.rows[t].d == b.rows[t].d);
    CHECK(a.rows[t].q == b.rows[t].q);
    CHECK(a.rows[t].j == b.rows[t].j);
    CHECK(a.rows[t].pairs == b.rows[t].pairs);
    CHECK(a.rows[t].explanations == b.rows[t].explanations);
  }
}

TEST_CASE("default scan box covers the printed coincidence range") {
  CoincidenceScan scan = scan_coincidences(1000000, 0);
  CHECK(scan.box.find("d=1..19") != std::string::npos);
  CHECK(scan.box.find("q=3..10") != std::string::npos);
  bool found_19 = false;
  for (const auto& r : scan.rows)
    if (r.d == 19 && r.q == 2 && r.j == 10) found_19 = true;
  CHECK(found_19);
}

TEST_CASE("krawtchouk zero scan tags the known families") {
  ZeroScan scan = krawtchouk_zero_scan(26);
  CHECK(scan.d_max == 26);
  CHECK(has_hit(scan, 2, 1, 1, "L-zero-i"));
  CHECK(has_hit(scan, 6, 1, 3, "L-zero-i"));
  CHECK(has_hit(scan, 4, 2, 1, "transpose:L-zero-i"));
  CHECK(has_hit(scan, 9, 2, 3, "L-zero-ii"));
  CHECK(has_hit(scan, 9, 3, 2, "transpose:L-zero-ii"));
  // (6,3,1) is both a middle-column zero and the transpose of K_1(3) = 0;
  // named families win over the middle-column catch-all
  CHECK(has_hit(scan, 6, 3, 1, "transpose:L-zero-i"));
  CHECK(has_hit(scan, 6, 3, 3, "middle-column"));
  CHECK(has_hit(scan, 17, 3, 5, "L-zero-iii"));
  CHECK(has_hit(scan, 22, 3, 7, "L-zero-iii"));
  CHECK(has_hit(scan, 17, 4, 7, "L-zero-iv"));

  // invariant violations would be reported as notes; family membership and
  // symmetry must be clean
  for (const auto& n : scan.notes) {
    CHECK(n.find("symmetry broken") == std::string::npos);
    CHECK(n.find("entry is nonzero") == std::string::npos);
  }

  CHECK(std::is_sorted(scan.hits.begin(), scan.hits.end(), [](const auto& a, const auto& b) {
    return std::tie(a.d, a.j, a.i) < std::tie(b.d, b.j, b.i);
  }));

  ZeroScan par = krawtchouk_zero_scan(26, 4);
  REQUIRE(par.hits.size() == scan.hits.size());
  for (size_t t = 0; t < par.hits.size(); ++t) CHECK(par.hits[t].tag == scan.hits[t].tag);

  CHECK_THROWS_AS(krawtchouk_zero_scan(0), std::invalid_argument);
}
