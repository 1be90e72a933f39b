#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ssp/exact.hpp"

namespace ssp {

// Thrown when check_bound_lemma is called outside a lemma's hypotheses;
// the message names the violated hypothesis.
struct hypothesis_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One exact comparison inside a bound report. lhs/relation/rhs read left
// to right, e.g. lhs="35/1", relation="<=", rhs="54/1".
struct BoundCheck {
  std::string label;
  Rat lhs;
  std::string relation;
  Rat rhs;
  bool holds = false;
};

struct BoundReport {
  std::string lemma_id;
  std::string params;  // rendered "(q=4,d=5,i=2,j=3)"
  std::vector<BoundCheck> checks;
  Int main_term;  // the dominant term T / S / q^s when the lemma has one
  std::vector<std::pair<std::string, std::string>> aux;  // (name, exact value)
  bool holds = true;  // conjunction over checks
};

// Named parameters for a bound lemma; all integer valued.
using BoundParams = std::vector<std::pair<std::string, long>>;

// Evaluates one inequality lemma at a concrete parameter point, exactly.
// Known ids:
//   H-LEM-QPOW   (q,d,i,j)      H-LEM-3TERM (q,d,i,j)    H-LEM-BD (d,i,j)
//   J-LEM-INEQ   (n,d,j)        J-LEM-EJI   (n,d,i,j)
//   G-LEM-BOUND  (q,n,d,i,j)    G-LEM-SP    (d,i,j)      [q=2, n=2d]
//   B-LEM-MAIN   (q,d,e,i,j)
//   A-PROP-UP    (q,n,i,j)      A-PROP-DOWN (q,n,i,j)
//   Q-PROP-EST   (q,d,i,j)
//   E-LEM-GAUSS  (part,b,n,m) for part 1,2 and (part,b,n,k) for part 3,4,5
// Unknown id or missing parameter -> std::invalid_argument.
// Hypothesis violation -> hypothesis_error.
BoundReport check_bound_lemma(const std::string& lemma_id, const BoundParams& params);

// True when check_bound_lemma would accept the point (used to drive grids).
bool bound_lemma_applicable(const std::string& lemma_id, const BoundParams& params);

std::vector<std::string> bound_lemma_ids();

// Sums the valencies k_j of J(n,d) over integer j with (jn-de)^2 < d n^2
// (e = n-d) and checks 11*sum >= 8*v. Requires n >= 2d >= 2.
BoundReport chvatal_concentration_check(long n, long d);

}  // namespace ssp
