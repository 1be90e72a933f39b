#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssp/bounds.hpp"
#include "ssp/extremal.hpp"
#include "ssp/families.hpp"
#include "ssp/identities.hpp"
#include "ssp/report.hpp"
#include "ssp/scanner.hpp"
#include "ssp/schemes.hpp"
#include "ssp/theorems.hpp"

namespace py = pybind11;
using namespace ssp;

namespace {

// Exact big integers cross the boundary as Python ints, never floats.
py::int_ big(const Int& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list big_list(const std::vector<Int>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(big(x));
  return out;
}

py::list matrix_rows(const EigenMatrix& P) {
  py::list rows;
  for (long i = 0; i <= P.d; ++i) {
    py::list row;
    for (long j = 0; j <= P.d; ++j) row.append(big(P.at(i, j)));
    rows.append(row);
  }
  return rows;
}

// Report-shaped results reuse the JSON renderers so Python sees the same
// document structure as `--format json` on the command line.
py::object json_to_py(const Json& j) {
  if (j.is_null()) return py::none();
  if (j.is_boolean()) return py::bool_(j.get<bool>());
  if (j.is_number_unsigned()) return py::int_(j.get<unsigned long long>());
  if (j.is_number_integer()) return py::int_(j.get<long long>());
  if (j.is_number_float()) return py::float_(j.get<double>());
  if (j.is_string()) return py::str(j.get<std::string>());
  if (j.is_array()) {
    py::list out;
    for (const auto& e : j) out.append(json_to_py(e));
    return out;
  }
  py::dict out;
  for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
  return out;
}

BoundParams bound_params_from(const py::dict& d) {
  BoundParams ps;
  for (auto item : d)
    ps.emplace_back(item.first.cast<std::string>(), item.second.cast<long>());
  return ps;
}

py::object srg_tuple(const std::optional<SrgParams>& p) {
  if (!p) return py::none();
  return py::make_tuple(big(p->v), big(p->k), big(p->lambda), big(p->mu));
}

py::dict largebeta_dict(const LargeBetaReport& r) {
  py::dict out;
  out["d"] = r.d;
  out["b"] = big(r.b);
  out["alpha"] = big(r.alpha);
  py::list rows;
  for (const auto& row : r.rows) {
    py::dict e;
    e["beta"] = big(row.beta);
    e["valid"] = row.valid;
    e["sign_ok"] = row.sign_ok;
    e["min_ok"] = row.min_ok;
    e["monotone_ok"] = row.monotone_ok;
    e["note"] = row.note;
    rows.append(e);
  }
  out["rows"] = rows;
  auto onset = [](const std::optional<Int>& v) -> py::object {
    return v ? py::object(big(*v)) : py::none();
  };
  out["onset_sign"] = onset(r.onset_sign);
  out["onset_min"] = onset(r.onset_min);
  out["onset_monotone"] = onset(r.onset_monotone);
  out["onset_all"] = onset(r.onset_all);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact eigenmatrices of classical association schemes";

  py::register_exception<invalid_parameters>(m, "InvalidParameters", PyExc_ValueError);
  py::register_exception<hypothesis_error>(m, "HypothesisError", PyExc_ValueError);

  m.def(
      "pmatrix",
      [](const std::string& scheme) { return matrix_rows(eigenmatrix(SchemeId::parse(scheme))); },
      py::arg("scheme"),
      "Eigenmatrix of a scheme such as \"hamming:d=4,q=3\", rows as exact ints");

  m.def(
      "eigenvalues",
      [](const std::string& scheme) {
        auto cp = family_to_classical(SchemeId::parse(scheme));
        return big_list(eigenvalues_theta(cp.value()));
      },
      py::arg("scheme"), "theta_0 .. theta_d in row order");

  m.def(
      "vertex_count",
      [](const std::string& scheme) { return big(vertex_count(SchemeId::parse(scheme))); },
      py::arg("scheme"));

  m.def(
      "multiplicities",
      [](const std::string& scheme) { return big_list(multiplicities(SchemeId::parse(scheme))); },
      py::arg("scheme"), "m_0 .. m_d, exact and summing to vertex_count");

  m.def(
      "eigen_entry",
      [](const std::string& scheme, long j, long i, int form) {
        return big(eigen_entry(SchemeId::parse(scheme), j, i, form));
      },
      py::arg("scheme"), py::arg("j"), py::arg("i"), py::arg("form") = 1,
      "P_ij from the selected closed form");

  m.def(
      "form_count",
      [](const std::string& scheme) { return form_count(SchemeId::parse(scheme)); },
      py::arg("scheme"), "number of printed closed forms for the family");

  m.def(
      "analyze",
      [](const std::string& scheme, long j) {
        SchemeId s = SchemeId::parse(scheme);
        return json_to_py(analysis_json(analyze_column(s, j), predict_extremal(s, j)));
      },
      py::arg("scheme"), py::arg("j"),
      "column extrema, signs, distinct count and the registry prediction");

  m.def(
      "identities",
      [](const std::string& scheme) {
        return json_to_py(identities_json(identity_suite(SchemeId::parse(scheme))));
      },
      py::arg("scheme"), "per-identity pass/fail over the full quantifier range");

  m.def(
      "verify",
      [](const std::string& id, const std::optional<std::string>& box, int jobs) {
        VerificationReport rep;
        {
          py::gil_scoped_release rel;
          rep = box ? verify_theorem(id, Box::parse(*box), jobs) : verify_theorem(id, jobs);
        }
        return json_to_py(verification_json(rep));
      },
      py::arg("id"), py::arg("box") = std::nullopt, py::arg("jobs") = 0,
      "exhaustive check of a registered statement over a parameter box");

  m.def("catalog", [] { return json_to_py(catalog_json()); },
        "registered statements with kinds and default boxes");

  m.def("q0_threshold", &q0_threshold, py::arg("d"),
        "least q0 from which the column minimum sits at i = d-j+1 for all larger q");

  m.def(
      "check_bound",
      [](const std::string& id, const py::dict& params) {
        return json_to_py(bound_json(check_bound_lemma(id, bound_params_from(params))));
      },
      py::arg("id"), py::arg("params"), "evaluate one inequality lemma at a point, exactly");

  m.def("bound_ids", &bound_lemma_ids, "ids accepted by check_bound");

  m.def(
      "chvatal",
      [](long n, long d) { return json_to_py(bound_json(chvatal_concentration_check(n, d))); },
      py::arg("n"), py::arg("d"),
      "valency concentration check for J(n,d): 11*sum >= 8*binom(n,d)");

  m.def(
      "largebeta_onset",
      [](long d, long b, long alpha, long beta_lo, long beta_hi) {
        LargeBetaReport rep;
        {
          py::gil_scoped_release rel;
          rep = largebeta_onset(d, Int(b), Int(alpha), Int(beta_lo), Int(beta_hi));
        }
        return largebeta_dict(rep);
      },
      py::arg("d"), py::arg("b"), py::arg("alpha"), py::arg("beta_lo"), py::arg("beta_hi"),
      "per-beta sign/min/monotonicity flags and their onsets on one parameter line");

  m.def(
      "distinct_count",
      [](const std::string& scheme, long j) {
        return distinct_count(SchemeId::parse(scheme), j);
      },
      py::arg("scheme"), py::arg("j"));

  m.def(
      "connected_components",
      [](const std::string& scheme, long j) {
        return big(connected_components(SchemeId::parse(scheme), j));
      },
      py::arg("scheme"), py::arg("j"));

  m.def(
      "srg_params",
      [](const std::string& scheme, long j) {
        return srg_tuple(srg_params(SchemeId::parse(scheme), j));
      },
      py::arg("scheme"), py::arg("j"),
      "(v, k, lambda, mu) when the distance-j graph is strongly regular, else None");

  m.def(
      "component_srg_params",
      [](const std::string& scheme, long j) {
        return srg_tuple(component_srg_params(SchemeId::parse(scheme), j));
      },
      py::arg("scheme"), py::arg("j"));

  m.def(
      "scan",
      [](const std::optional<std::string>& box, long max_missing, int jobs) {
        CoincidenceScan s;
        {
          py::gil_scoped_release rel;
          s = box ? scan_coincidences(Box::parse(*box), max_missing, jobs)
                  : scan_coincidences(max_missing, jobs);
        }
        return json_to_py(scan_json(s));
      },
      py::arg("box") = std::nullopt, py::arg("max_missing") = 1000000, py::arg("jobs") = 0,
      "Hamming columns with repeated values, with per-pair explanations");

  m.def(
      "zero_scan",
      [](long d_max, int jobs) {
        ZeroScan z;
        {
          py::gil_scoped_release rel;
          z = krawtchouk_zero_scan(d_max, jobs);
        }
        return json_to_py(zeros_json(z));
      },
      py::arg("d_max") = 40, py::arg("jobs") = 0,
      "integral zeros of binary Krawtchouk columns, attributed to known families");

  m.attr("__version__") = "1.0.0";
}
