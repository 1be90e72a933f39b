#include "doctest.h"

#include <algorithm>

#include "ssp/theorems.hpp"

using namespace ssp;

TEST_CASE("box parsing") {
  Box b = Box::parse("q=3..8,d=1..30");
  REQUIRE(b.vars.size() == 2);
  CHECK(b.vars[0].first == "q");
  CHECK(b.vars[0].second.size() == 6);
  CHECK(b.vars[1].second.size() == 30);
  CHECK(b.has_value("q", HalfInt::whole(5)));
  CHECK_FALSE(b.has_value("q", HalfInt::whole(9)));
  CHECK(b.find("d") != nullptr);
  CHECK(b.find("x") == nullptr);
  CHECK(b.str() == "q=3..8,d=1..30");

  Box e = Box::parse("e=0,e=1/2,e=1,e=3/2,e=2");
  REQUIRE(e.vars.size() == 1);
  CHECK(e.vars[0].second.size() == 5);
  CHECK(e.has_value("e", HalfInt(3)));
  CHECK(e.str() == "e=0,e=1/2,e=1,e=3/2,e=2");

  Box one = Box::parse("d=7");
  CHECK(one.vars[0].second == std::vector<HalfInt>{HalfInt::whole(7)});
  CHECK(one.str() == "d=7");

  // consecutive integers render back as a range
  CHECK(Box::parse("d=2,d=3,d=4").str() == "d=2..4");

  CHECK_THROWS_AS(Box::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Box::parse("d"), std::invalid_argument);
  CHECK_THROWS_AS(Box::parse("d=5..2"), std::invalid_argument);
  CHECK_THROWS_AS(Box::parse("d=x"), std::invalid_argument);
}

TEST_CASE("theorem catalog") {
  const auto& cat = theorem_catalog();
  CHECK(cat.size() >= 37);
  for (const char* id :
       {"H-THM-BINARY", "H-COR-BINARY", "H-THM-NONBINARY", "H-PROP-12", "H-PROP-LARGE",
        "H-LEM-QBIG", "H-CONJ-DISTINCT", "J-PROP-NEG", "J-THM-SMALLEST", "J-COR-KARLOFF",
        "J-PROP-D", "J-PROP-LARGE", "J-EDGE-2D1", "J-REMARK-QUARTER", "G-PROP-ABS",
        "G-THM-SMALLEST-I", "G-THM-SMALLEST-II", "G-CONJ-I", "G-CONJ-II", "C-PROP", "C-EDGE",
        "C-CONJ-UNIMODAL", "C-CONJ-IMIN", "B-PROP-NEG", "B-LEM-BDS", "B-THM-Q4", "B-SIGN",
        "B-CONJ", "A-THM", "A-SIGN", "Q-THM", "Q-SIGN", "Q-CONJ-1", "Q-CONJ-2",
        "CP-SIGNCHANGES", "CP-SIGNPATTERN", "CP-LARGEBETA"}) {
    const TheoremInfo* info = find_theorem(id);
    REQUIRE_MESSAGE(info != nullptr, id);
    CHECK_FALSE(info->statement.empty());
    CHECK_FALSE(info->default_box.empty());
    CHECK_FALSE(info->box_vars.empty());
    // default boxes must parse and cover the iteration variables
    Box b = Box::parse(info->default_box);
    for (const auto& var : info->box_vars) CHECK(b.find(var) != nullptr);
  }
  CHECK(find_theorem("NO-SUCH") == nullptr);
}

TEST_CASE("verification passes on a clean box") {
  VerificationReport rep = verify_theorem("H-THM-BINARY", Box::parse("d=1..12"));
  CHECK(rep.status == "pass");
  CHECK(rep.theorem_id == "H-THM-BINARY");
  CHECK(rep.param_box == "d=1..12");
  CHECK(rep.tuples_checked == 12);
  CHECK(rep.exceptions.empty());
  CHECK(rep.counterexamples.empty());
}

TEST_CASE("known exception is listed, not failed") {
  VerificationReport rep = verify_theorem("H-THM-NONBINARY", Box::parse("q=3..4,d=1..6"));
  CHECK(rep.status == "pass-with-listed-exceptions");
  REQUIRE(rep.exceptions.size() == 1);
  CHECK(rep.exceptions[0] == "(q=3,d=4,i=3,j=3,part=ii)");
  CHECK(rep.counterexamples.empty());

  VerificationReport clean = verify_theorem("H-THM-NONBINARY", Box::parse("q=4..5,d=1..6"));
  CHECK(clean.status == "pass");
}

TEST_CASE("dual polar known exception column") {
  VerificationReport rep =
      verify_theorem("C-PROP", Box::parse("q=2,d=3..5,e=0,e=1/2,e=1,e=3/2,e=2"));
  CHECK(rep.status == "pass-with-listed-exceptions");
  REQUIRE(rep.exceptions.size() == 3);
  CHECK(std::find(rep.exceptions.begin(), rep.exceptions.end(),
                  "(q=2,d=4,e=1,j=3,part=ii)") != rep.exceptions.end());
}

TEST_CASE("probes report counterexample status") {
  VerificationReport rep = verify_theorem("Q-CONJ-1", Box::parse("q=2..3,d=1..4"));
  CHECK(rep.status == "no-counterexample-in-box");
  CHECK(rep.exceptions.empty());

  VerificationReport r2 = verify_theorem("H-CONJ-DISTINCT", Box::parse("q=2..3,d=1..8"));
  CHECK(r2.status == "no-counterexample-in-box");
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(verify_theorem("NO-SUCH", Box::parse("d=1..2")), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem("H-THM-BINARY", Box::parse("q=2..3")),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem("H-THM-BINARY", Box::parse("d=1..2,zz=1")),
                  std::invalid_argument);
}

TEST_CASE("default box overload") {
  VerificationReport rep = verify_theorem("J-EDGE-2D1");
  CHECK(rep.param_box == find_theorem("J-EDGE-2D1")->default_box);
  CHECK(rep.status == "pass");
  CHECK(rep.tuples_checked > 0);
}

TEST_CASE("invalid tuples are skipped silently") {
  // johnson needs n >= 2d: most of this box is out of domain, the rest passes
  VerificationReport rep = verify_theorem("J-PROP-NEG", Box::parse("n=2..6,d=1..3"));
  CHECK(rep.status == "pass");
  CHECK(rep.tuples_checked == 9);  // five at d=1, three at d=2, one at d=3
}

TEST_CASE("deterministic across jobs") {
  Box box = Box::parse("q=2..4,d=1..10");
  VerificationReport a = verify_theorem("H-PROP-12", box, 1);
  VerificationReport b = verify_theorem("H-PROP-12", box, 4);
  CHECK(a.status == b.status);
  CHECK(a.exceptions == b.exceptions);
  CHECK(a.counterexamples == b.counterexamples);
  CHECK(a.notes == b.notes);
  CHECK(a.tuples_checked == b.tuples_checked);
}

TEST_CASE("classical sign change counts") {
  VerificationReport rep =
      verify_theorem("CP-SIGNCHANGES", Box::parse("d=1..4,b=1..2,alpha=0..2,beta=1..6"));
  CHECK(rep.status == "pass");
  CHECK(rep.tuples_checked > 0);
}
