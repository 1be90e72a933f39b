#include "ssp/report.hpp"

#include <sstream>

namespace ssp {

std::string int_str(const Int& x) { return x.get_str(); }

std::string rat_str(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string sign_string(const std::vector<int>& signs) {
  std::string s;
  for (int v : signs) s += (v > 0 ? '+' : (v < 0 ? '-' : '0'));
  return s;
}

// ---------------------------------------------------------------- json

Json matrix_json(const EigenMatrix& P) {
  Json rows = Json::array();
  for (long i = 0; i <= P.d; ++i) {
    Json r = Json::array();
    for (long j = 0; j <= P.d; ++j) r.push_back(int_str(P.at(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json column_json(const std::vector<Int>& values) {
  Json arr = Json::array();
  for (const Int& v : values) arr.push_back(int_str(v));
  return arr;
}

Json analysis_json(const ColumnAnalysis& a, const ExtremalPrediction& pred) {
  Json out;
  out["scheme"] = a.scheme.str();
  out["j"] = a.j;
  out["values"] = column_json(a.values);
  out["min_value"] = int_str(a.stats.min_value);
  out["argmin"] = a.stats.argmin_set;
  out["max_abs_tail"] = int_str(a.stats.max_abs_tail);
  out["argmax_abs"] = a.stats.argmax_abs_set;
  out["signs"] = sign_string(a.stats.sign_vector);
  out["distinct"] = a.stats.distinct_count;
  Json p;
  p["id"] = pred.id;
  p["argmin"] = pred.argmin;
  p["argmax_abs_at_1"] = pred.argmax_abs_at_1;
  p["conjectural"] = pred.conjectural;
  out["prediction"] = std::move(p);
  return out;
}

Json verification_json(const VerificationReport& r) {
  Json out;
  out["theorem"] = r.theorem_id;
  out["box"] = r.param_box;
  out["status"] = r.status;
  out["tuples_checked"] = r.tuples_checked;
  out["exceptions"] = r.exceptions;
  out["counterexamples"] = r.counterexamples;
  out["notes"] = r.notes;
  return out;
}

Json bound_json(const BoundReport& r) {
  Json out;
  out["lemma"] = r.lemma_id;
  out["params"] = r.params;
  out["holds"] = r.holds;
  out["main_term"] = int_str(r.main_term);
  Json aux;
  for (const auto& [k, v] : r.aux) aux[k] = v;
  out["aux"] = std::move(aux);
  Json checks = Json::array();
  for (const BoundCheck& c : r.checks) {
    Json jc;
    jc["label"] = c.label;
    jc["lhs"] = rat_str(c.lhs);
    jc["relation"] = c.relation;
    jc["rhs"] = rat_str(c.rhs);
    jc["holds"] = c.holds;
    checks.push_back(std::move(jc));
  }
  out["checks"] = std::move(checks);
  return out;
}

Json scan_json(const CoincidenceScan& s) {
  Json out;
  out["box"] = s.box;
  out["max_missing"] = s.max_missing;
  Json rows = Json::array();
  for (const CoincidenceRow& r : s.rows) {
    Json jr;
    jr["d"] = r.d;
    jr["q"] = r.q;
    jr["j"] = r.j;
    jr["distinct"] = r.distinct;
    Json pairs = Json::array();
    for (auto [h, i] : r.pairs) pairs.push_back(Json::array({h, i}));
    jr["pairs"] = std::move(pairs);
    jr["explanations"] = r.explanations;
    rows.push_back(std::move(jr));
  }
  out["rows"] = std::move(rows);
  return out;
}

Json zeros_json(const ZeroScan& z) {
  Json out;
  out["d_max"] = z.d_max;
  Json hits = Json::array();
  for (const ZeroHit& h : z.hits) {
    Json jh;
    jh["d"] = h.d;
    jh["j"] = h.j;
    jh["i"] = h.i;
    jh["tag"] = h.tag;
    hits.push_back(std::move(jh));
  }
  out["hits"] = std::move(hits);
  out["notes"] = z.notes;
  return out;
}

Json identities_json(const std::vector<IdentityResult>& rs) {
  Json arr = Json::array();
  for (const IdentityResult& r : rs) {
    Json jr;
    jr["id"] = r.id;
    jr["applicable"] = r.applicable;
    jr["pass"] = r.pass;
    jr["checked"] = r.checked;
    jr["first_failure"] = r.first_failure;
    arr.push_back(std::move(jr));
  }
  return arr;
}

Json catalog_json() {
  Json arr = Json::array();
  for (const TheoremInfo& info : theorem_catalog()) {
    Json t;
    t["id"] = info.id;
    t["family"] = info.family;
    t["kind"] = info.kind;
    t["default_box"] = info.default_box;
    t["statement"] = info.statement;
    arr.push_back(std::move(t));
  }
  return arr;
}

// ---------------------------------------------------------------- pretty

std::string pretty_matrix(const EigenMatrix& P) {
  std::vector<size_t> width(P.d + 1, 0);
  for (long j = 0; j <= P.d; ++j)
    for (long i = 0; i <= P.d; ++i)
      width[j] = std::max(width[j], int_str(P.at(i, j)).size());
  std::string out;
  for (long i = 0; i <= P.d; ++i) {
    for (long j = 0; j <= P.d; ++j) {
      std::string cell = int_str(P.at(i, j));
      if (j) out += "  ";
      out += std::string(width[j] - cell.size(), ' ') + cell;
    }
    out += "\n";
  }
  return out;
}

std::string pretty_column(const std::vector<Int>& values) {
  size_t iw = std::to_string(values.size() - 1).size(), vw = 0;
  for (const Int& v : values) vw = std::max(vw, int_str(v).size());
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    std::string is = std::to_string(i), vs = int_str(values[i]);
    out += std::string(iw - is.size(), ' ') + is + "  ";
    out += std::string(vw - vs.size(), ' ') + vs + "\n";
  }
  return out;
}

namespace {

std::string join_longs(const std::vector<long>& v) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  return s;
}

}  // namespace

std::string pretty_analysis(const ColumnAnalysis& a, const ExtremalPrediction& pred) {
  std::ostringstream os;
  os << "scheme: " << a.scheme.str() << "\n";
  os << "column: " << a.j << "\n";
  os << pretty_column(a.values);
  os << "min value: " << int_str(a.stats.min_value) << " at i in {"
     << join_longs(a.stats.argmin_set) << "}\n";
  os << "max |value| over i>=1: " << int_str(a.stats.max_abs_tail) << " at i in {"
     << join_longs(a.stats.argmax_abs_set) << "}\n";
  os << "signs: " << sign_string(a.stats.sign_vector) << "\n";
  os << "distinct values: " << a.stats.distinct_count << "\n";
  if (pred.id == "no-prediction") {
    os << "prediction: none\n";
  } else {
    os << "prediction: " << pred.id << (pred.conjectural ? " (conjectural)" : "")
       << ", min at i in {" << join_longs(pred.argmin) << "}"
       << (pred.argmax_abs_at_1 ? ", max |value| at i=1" : "") << "\n";
  }
  return os.str();
}

std::string pretty_verification(const VerificationReport& r) {
  std::ostringstream os;
  os << "theorem: " << r.theorem_id << "\n";
  os << "box: " << r.param_box << "\n";
  os << "status: " << r.status << "\n";
  os << "tuples checked: " << r.tuples_checked << "\n";
  if (!r.exceptions.empty()) {
    os << "exceptions (" << r.exceptions.size() << "):\n";
    for (const auto& e : r.exceptions) os << "  " << e << "\n";
  }
  if (!r.counterexamples.empty()) {
    os << "counterexamples (" << r.counterexamples.size() << "):\n";
    for (const auto& c : r.counterexamples) os << "  " << c << "\n";
  }
  if (!r.notes.empty()) {
    os << "notes:\n";
    for (const auto& n : r.notes) os << "  " << n << "\n";
  }
  return os.str();
}

std::string pretty_bound(const BoundReport& r) {
  std::ostringstream os;
  os << "lemma: " << r.lemma_id << "\n";
  os << "params: " << r.params << "\n";
  os << "holds: " << (r.holds ? "yes" : "no") << "\n";
  os << "main term: " << int_str(r.main_term) << "\n";
  for (const auto& [k, v] : r.aux) os << k << ": " << v << "\n";
  for (const BoundCheck& c : r.checks)
    os << "  " << c.label << ": " << rat_str(c.lhs) << " " << c.relation << " "
       << rat_str(c.rhs) << "  [" << (c.holds ? "ok" : "FAIL") << "]\n";
  return os.str();
}

std::string pretty_scan(const CoincidenceScan& s) {
  std::ostringstream os;
  os << "box: " << s.box << "\n";
  os << "max missing: " << s.max_missing << "\n";
  os << "rows: " << s.rows.size() << "\n";
  for (const CoincidenceRow& r : s.rows) {
    os << "d=" << r.d << " q=" << r.q << " j=" << r.j << " distinct=" << r.distinct << " ";
    for (size_t k = 0; k < r.pairs.size(); ++k) {
      if (k) os << "; ";
      os << "P[" << r.pairs[k].first << "]=P[" << r.pairs[k].second << "] "
         << r.explanations[k];
    }
    os << "\n";
  }
  return os.str();
}

std::string pretty_zeros(const ZeroScan& z) {
  std::ostringstream os;
  os << "d max: " << z.d_max << "\n";
  os << "zeros: " << z.hits.size() << "\n";
  for (const ZeroHit& h : z.hits)
    os << "d=" << h.d << " j=" << h.j << " i=" << h.i << " " << h.tag << "\n";
  for (const std::string& n : z.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string pretty_identities(const std::vector<IdentityResult>& rs) {
  std::ostringstream os;
  size_t w = 0;
  for (const IdentityResult& r : rs) w = std::max(w, r.id.size());
  for (const IdentityResult& r : rs) {
    os << r.id << std::string(w - r.id.size(), ' ') << "  ";
    if (!r.applicable)
      os << "n/a\n";
    else if (r.pass)
      os << "pass (" << r.checked << " tuples)\n";
    else
      os << "FAIL at " << r.first_failure << "\n";
  }
  return os.str();
}

std::string pretty_catalog() {
  std::ostringstream os;
  size_t w = 0;
  for (const TheoremInfo& t : theorem_catalog()) w = std::max(w, t.id.size());
  for (const TheoremInfo& t : theorem_catalog())
    os << t.id << std::string(w - t.id.size(), ' ') << "  " << t.kind << " ("
       << t.family << "), default box " << t.default_box << "\n";
  return os.str();
}

// ---------------------------------------------------------------- csv

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_matrix(const EigenMatrix& P) {
  std::string out = "i,j,value\n";
  for (long i = 0; i <= P.d; ++i)
    for (long j = 0; j <= P.d; ++j)
      out += std::to_string(i) + "," + std::to_string(j) + "," + int_str(P.at(i, j)) + "\n";
  return out;
}

std::string csv_column(const std::vector<Int>& values) {
  std::string out = "i,value\n";
  for (size_t i = 0; i < values.size(); ++i)
    out += std::to_string(i) + "," + int_str(values[i]) + "\n";
  return out;
}

namespace {

std::string csv_kv(const std::string& k, const std::string& v) {
  return csv_escape(k) + "," + csv_escape(v) + "\n";
}

}  // namespace

std::string csv_analysis(const ColumnAnalysis& a, const ExtremalPrediction& pred) {
  std::string out = "key,value\n";
  out += csv_kv("scheme", a.scheme.str());
  out += csv_kv("j", std::to_string(a.j));
  for (size_t i = 0; i < a.values.size(); ++i)
    out += csv_kv("value_" + std::to_string(i), int_str(a.values[i]));
  out += csv_kv("min_value", int_str(a.stats.min_value));
  out += csv_kv("argmin", join_longs(a.stats.argmin_set));
  out += csv_kv("max_abs_tail", int_str(a.stats.max_abs_tail));
  out += csv_kv("argmax_abs", join_longs(a.stats.argmax_abs_set));
  out += csv_kv("signs", sign_string(a.stats.sign_vector));
  out += csv_kv("distinct", std::to_string(a.stats.distinct_count));
  out += csv_kv("prediction", pred.id);
  out += csv_kv("prediction_argmin", join_longs(pred.argmin));
  out += csv_kv("prediction_max_abs_at_1", pred.argmax_abs_at_1 ? "true" : "false");
  out += csv_kv("prediction_conjectural", pred.conjectural ? "true" : "false");
  return out;
}

std::string csv_verification(const VerificationReport& r) {
  std::string out = "field,value\n";
  out += csv_kv("theorem", r.theorem_id);
  out += csv_kv("box", r.param_box);
  out += csv_kv("status", r.status);
  out += csv_kv("tuples_checked", std::to_string(r.tuples_checked));
  for (const auto& e : r.exceptions) out += csv_kv("exception", e);
  for (const auto& c : r.counterexamples) out += csv_kv("counterexample", c);
  for (const auto& n : r.notes) out += csv_kv("note", n);
  return out;
}

std::string csv_bound(const BoundReport& r) {
  std::string out = "field,value\n";
  out += csv_kv("lemma", r.lemma_id);
  out += csv_kv("params", r.params);
  out += csv_kv("holds", r.holds ? "true" : "false");
  out += csv_kv("main_term", int_str(r.main_term));
  for (const auto& [k, v] : r.aux) out += csv_kv("aux_" + k, v);
  for (const BoundCheck& c : r.checks)
    out += csv_kv("check_" + c.label,
                  rat_str(c.lhs) + " " + c.relation + " " + rat_str(c.rhs) + " " +
                      (c.holds ? "ok" : "fail"));
  return out;
}

std::string csv_scan(const CoincidenceScan& s) {
  std::string out = "d,q,j,distinct,pairs,explanations\n";
  for (const CoincidenceRow& r : s.rows) {
    std::string pairs, expl;
    for (size_t k = 0; k < r.pairs.size(); ++k) {
      if (k) {
        pairs += ";";
        expl += ";";
      }
      pairs += "(" + std::to_string(r.pairs[k].first) + " " +
               std::to_string(r.pairs[k].second) + ")";
      expl += r.explanations[k];
    }
    out += std::to_string(r.d) + "," + std::to_string(r.q) + "," + std::to_string(r.j) +
           "," + std::to_string(r.distinct) + "," + csv_escape(pairs) + "," +
           csv_escape(expl) + "\n";
  }
  return out;
}

std::string csv_zeros(const ZeroScan& z) {
  std::string out = "d,j,i,tag\n";
  for (const ZeroHit& h : z.hits)
    out += std::to_string(h.d) + "," + std::to_string(h.j) + "," + std::to_string(h.i) +
           "," + csv_escape(h.tag) + "\n";
  return out;
}

std::string csv_identities(const std::vector<IdentityResult>& rs) {
  std::string out = "id,applicable,pass,checked,first_failure\n";
  for (const IdentityResult& r : rs)
    out += csv_escape(r.id) + "," + (r.applicable ? "true" : "false") + "," +
           (r.pass ? "true" : "false") + "," + std::to_string(r.checked) + "," +
           csv_escape(r.first_failure) + "\n";
  return out;
}

std::string csv_catalog() {
  std::string out = "id,family,kind,default_box\n";
  for (const TheoremInfo& t : theorem_catalog())
    out += csv_escape(t.id) + "," + csv_escape(t.family) + "," + csv_escape(t.kind) + "," +
           csv_escape(t.default_box) + "\n";
  return out;
}

}  // namespace ssp
