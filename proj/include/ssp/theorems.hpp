#pragma once

#include <string>
#include <vector>

#include "ssp/exact.hpp"

namespace ssp {

// Parameter box: an ordered list of (variable, value list). Parsed from
// text like "q=3..8,d=1..30" or "e=0,e=1/2,e=1"; listing a variable again
// appends to its values. Ranges lo..hi are integer and ascend.
struct Box {
  std::vector<std::pair<std::string, std::vector<HalfInt>>> vars;

  static Box parse(const std::string& text);
  std::string str() const;
  const std::vector<HalfInt>* find(const std::string& name) const;
  bool has_value(const std::string& name, HalfInt v) const;
  bool empty() const { return vars.empty(); }
};

// One entry of the machine-readable registry behind `verify --list`.
// kind "conjecture" and "remark" entries are probes: they can never pass,
// only report "no-counterexample-in-box" or "counterexamples-found".
struct TheoremInfo {
  std::string id;
  std::string family;  // hamming, johnson, ..., classical
  std::string kind;    // theorem, proposition, corollary, lemma, conjecture, remark
  std::string statement;
  std::string default_box;
  std::vector<std::string> box_vars;  // iteration variables, in order
};

const std::vector<TheoremInfo>& theorem_catalog();
const TheoremInfo* find_theorem(const std::string& id);

// Result of exhaustively checking one registered statement over a box.
//   pass                       no violations, none expected
//   pass-with-listed-exceptions  violations exactly match the known ones
//   fail                       unexpected violations (or expected ones missing)
//   no-counterexample-in-box / counterexamples-found   probe outcomes
struct VerificationReport {
  std::string theorem_id;
  std::string param_box;
  std::string status;
  std::vector<std::string> exceptions;       // expected and observed
  std::vector<std::string> counterexamples;  // everything beyond the expected
  std::vector<std::string> notes;
  long tuples_checked = 0;  // parameter tuples that passed validity+hypotheses
  long long elapsed_ms = 0;
};

// jobs = 0 means the configured default (environment, then hardware).
VerificationReport verify_theorem(const std::string& id, const Box& box, int jobs = 0);
VerificationReport verify_theorem(const std::string& id, int jobs = 0);

}  // namespace ssp
