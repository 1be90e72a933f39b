#include "ssp/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "ssp/families.hpp"
#include "ssp/report.hpp"

namespace ssp {

namespace {

const char* kUsage = R"(usage: schemespectra <command> [options]

commands:
  pmatrix     --scheme S                 eigenmatrix of a scheme
  column      --scheme S --j N           one column of the eigenmatrix
  analyze     --scheme S --j N           column statistics and prediction
  verify      ID [--box B] | --list      check a theorem over a parameter box
  scan        [--box B] [--max-missing N]  columns with repeated eigenvalues
  zeros       [--dmax N]                 integral zeros of binary columns
  q0          --d N                      threshold q0(d)
  bounds      ID --params P | --list     evaluate an inequality lemma
  identities  --scheme S                 identity suite for one scheme

options:
  --scheme S        e.g. hamming:d=4,q=3  johnson:n=8,d=3  grassmann:q=2,n=8,d=3
                    dualpolar:q=4,d=5,e=1/2  bilinear:q=2,d=2,e=3
                    alternating:q=2,n=7  hermitian:q=2,d=3
  --box B           e.g. "q=3..8,d=1..30" (repeat a variable to list values)
  --params P        e.g. "q=3,d=5,i=2,j=2"
  --format F        pretty | json | csv        (default pretty)
  --output PATH     also write the report to a file
  --jobs N          worker threads (default: SCHEME_SPECTRA_JOBS or hardware)
  --stable          report elapsed_ms as 0 for byte-stable output
  --help            this text
)";

struct Options {
  std::string subcommand;
  std::string id;  // positional: theorem or lemma id
  std::optional<std::string> scheme, box, params, output;
  std::optional<long> j, max_missing, dmax, d;
  std::string format = "pretty";
  int jobs = 0;
  bool stable = false;
  bool list = false;
  bool help = false;
};

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long parse_long(const std::string& flag, const std::string& text) {
  try {
    size_t pos = 0;
    long v = std::stol(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw usage_error(flag + ": expected an integer, got '" + text + "'");
  }
}

Options parse_options(const std::vector<std::string>& args) {
  static const std::set<std::string> commands = {"pmatrix", "column", "analyze",
                                                 "verify",  "scan",   "zeros",
                                                 "q0",      "bounds", "identities"};
  Options opt;
  size_t k = 0;
  if (k < args.size() && args[k] == "--help") {
    opt.help = true;
    return opt;
  }
  if (args.empty()) throw usage_error("missing command");
  opt.subcommand = args[k++];
  if (!commands.count(opt.subcommand))
    throw usage_error("unknown command '" + opt.subcommand + "'");
  auto value = [&](const std::string& flag) -> std::string {
    if (k >= args.size()) throw usage_error(flag + ": missing value");
    return args[k++];
  };
  while (k < args.size()) {
    std::string a = args[k++];
    if (a == "--help") {
      opt.help = true;
    } else if (a == "--scheme") {
      opt.scheme = value(a);
    } else if (a == "--box") {
      if (opt.box) throw usage_error("--box given twice");
      opt.box = value(a);
    } else if (a == "--params") {
      opt.params = value(a);
    } else if (a == "--output") {
      opt.output = value(a);
    } else if (a == "--format") {
      opt.format = value(a);
      if (opt.format != "pretty" && opt.format != "json" && opt.format != "csv")
        throw usage_error("--format: expected pretty, json or csv");
    } else if (a == "--j") {
      opt.j = parse_long(a, value(a));
    } else if (a == "--max-missing") {
      opt.max_missing = parse_long(a, value(a));
    } else if (a == "--dmax") {
      opt.dmax = parse_long(a, value(a));
    } else if (a == "--d") {
      opt.d = parse_long(a, value(a));
    } else if (a == "--jobs") {
      long v = parse_long(a, value(a));
      if (v < 0) throw usage_error("--jobs: must be >= 0");
      opt.jobs = (int)v;
    } else if (a == "--stable") {
      opt.stable = true;
    } else if (a == "--list") {
      opt.list = true;
    } else if (!a.empty() && a[0] == '-') {
      throw usage_error("unknown flag '" + a + "'");
    } else if (opt.id.empty() &&
               (opt.subcommand == "verify" || opt.subcommand == "bounds")) {
      opt.id = a;
    } else {
      throw usage_error("unexpected argument '" + a + "'");
    }
  }
  return opt;
}

SchemeId require_scheme(const Options& opt) {
  if (!opt.scheme) throw usage_error(opt.subcommand + ": --scheme is required");
  try {
    return SchemeId::parse(*opt.scheme);
  } catch (const invalid_parameters& ex) {
    throw usage_error(std::string("--scheme: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw usage_error(std::string("--scheme: ") + ex.what());
  }
}

long require_j(const Options& opt) {
  if (!opt.j) throw usage_error(opt.subcommand + ": --j is required");
  return *opt.j;
}

BoundParams parse_bound_params(const std::string& text) {
  BoundParams out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw usage_error("--params: expected name=value in '" + item + "'");
    out.emplace_back(item.substr(0, eq), parse_long("--params", item.substr(eq + 1)));
  }
  if (out.empty()) throw usage_error("--params: empty parameter list");
  return out;
}

struct Rendered {
  Json results;
  std::string pretty;
  std::string csv;
  std::string status = "ok";
  int exit_code = 0;
};

Rendered do_pmatrix(const Options& opt) {
  SchemeId s = require_scheme(opt);
  EigenMatrix P = eigenmatrix(s);
  Rendered r;
  r.results["scheme"] = s.str();
  r.results["matrix"] = matrix_json(P);
  r.pretty = pretty_matrix(P);
  r.csv = csv_matrix(P);
  return r;
}

Rendered do_column(const Options& opt) {
  SchemeId s = require_scheme(opt);
  long j = require_j(opt);
  EigenMatrix P = eigenmatrix(s);
  if (j < 0 || j > P.d) throw usage_error("--j: column out of range");
  std::vector<Int> values;
  for (long i = 0; i <= P.d; ++i) values.push_back(P.at(i, j));
  Rendered r;
  r.results["scheme"] = s.str();
  r.results["j"] = j;
  r.results["values"] = column_json(values);
  r.pretty = pretty_column(values);
  r.csv = csv_column(values);
  return r;
}

Rendered do_analyze(const Options& opt) {
  SchemeId s = require_scheme(opt);
  long j = require_j(opt);
  ColumnAnalysis a = analyze_column(s, j);
  ExtremalPrediction pred = predict_extremal(s, j);
  Rendered r;
  r.results = analysis_json(a, pred);
  r.pretty = pretty_analysis(a, pred);
  r.csv = csv_analysis(a, pred);
  return r;
}

Rendered do_verify(const Options& opt) {
  Rendered r;
  if (opt.list) {
    r.results = catalog_json();
    r.pretty = pretty_catalog();
    r.csv = csv_catalog();
    return r;
  }
  if (opt.id.empty()) throw usage_error("verify: theorem id required (or --list)");
  const TheoremInfo* info = find_theorem(opt.id);
  if (!info) throw usage_error("verify: unknown theorem id '" + opt.id + "'");
  Box box = Box::parse(opt.box ? *opt.box : info->default_box);
  VerificationReport rep = verify_theorem(opt.id, box, opt.jobs);
  r.results = verification_json(rep);
  r.pretty = pretty_verification(rep);
  r.csv = csv_verification(rep);
  r.status = rep.status;
  bool ok = rep.status == "pass" || rep.status == "pass-with-listed-exceptions" ||
            rep.status == "no-counterexample-in-box";
  r.exit_code = ok ? 0 : 1;
  return r;
}

Rendered do_scan(const Options& opt) {
  long mm = opt.max_missing.value_or(1000000);
  CoincidenceScan scan = opt.box ? scan_coincidences(Box::parse(*opt.box), mm, opt.jobs)
                                 : scan_coincidences(mm, opt.jobs);
  Rendered r;
  r.results = scan_json(scan);
  r.pretty = pretty_scan(scan);
  r.csv = csv_scan(scan);
  return r;
}

Rendered do_zeros(const Options& opt) {
  ZeroScan z = krawtchouk_zero_scan(opt.dmax.value_or(40), opt.jobs);
  Rendered r;
  r.results = zeros_json(z);
  r.pretty = pretty_zeros(z);
  r.csv = csv_zeros(z);
  for (const std::string& n : z.notes)
    if (n.find("symmetry broken") != std::string::npos ||
        n.find("entry is nonzero") != std::string::npos) {
      r.status = "violations";
      r.exit_code = 1;
    }
  return r;
}

Rendered do_q0(const Options& opt) {
  if (!opt.d) throw usage_error("q0: --d is required");
  long q0 = q0_threshold(*opt.d);
  Rendered r;
  r.results["d"] = *opt.d;
  r.results["q0"] = q0;
  r.pretty = "q0(d=" + std::to_string(*opt.d) + ") = " + std::to_string(q0) + "\n";
  r.csv = "d,q0\n" + std::to_string(*opt.d) + "," + std::to_string(q0) + "\n";
  return r;
}

Rendered do_bounds(const Options& opt) {
  Rendered r;
  if (opt.list) {
    Json ids = Json::array();
    std::string text;
    for (const std::string& id : bound_lemma_ids()) {
      ids.push_back(id);
      text += id + "\n";
    }
    ids.push_back("J-LEM-CONC");
    text += "J-LEM-CONC\n";
    r.results["lemmas"] = std::move(ids);
    r.pretty = text;
    r.csv = "id\n" + text;
    return r;
  }
  if (opt.id.empty()) throw usage_error("bounds: lemma id required (or --list)");
  if (!opt.params) throw usage_error("bounds: --params is required");
  BoundParams params = parse_bound_params(*opt.params);
  BoundReport rep;
  if (opt.id == "J-LEM-CONC") {
    long n = -1, d = -1;
    for (const auto& [k, v] : params) {
      if (k == "n") n = v;
      if (k == "d") d = v;
    }
    if (n < 0 || d < 0) throw usage_error("bounds: J-LEM-CONC needs n and d");
    rep = chvatal_concentration_check(n, d);
  } else {
    rep = check_bound_lemma(opt.id, params);
  }
  r.results = bound_json(rep);
  r.pretty = pretty_bound(rep);
  r.csv = csv_bound(rep);
  if (!rep.holds) {
    r.status = "violations";
    r.exit_code = 1;
  }
  return r;
}

Rendered do_identities(const Options& opt) {
  SchemeId s = require_scheme(opt);
  std::vector<IdentityResult> rs = identity_suite(s);
  Rendered r;
  r.results["scheme"] = s.str();
  r.results["identities"] = identities_json(rs);
  r.pretty = pretty_identities(rs);
  r.csv = csv_identities(rs);
  for (const IdentityResult& res : rs)
    if (!res.pass) {
      r.status = "violations";
      r.exit_code = 1;
    }
  return r;
}

Json parameters_json(const Options& opt) {
  Json p = Json::object();
  if (!opt.id.empty()) p["id"] = opt.id;
  if (opt.scheme) p["scheme"] = *opt.scheme;
  if (opt.box) p["box"] = *opt.box;
  if (opt.params) p["params"] = *opt.params;
  if (opt.j) p["j"] = *opt.j;
  if (opt.max_missing) p["max_missing"] = *opt.max_missing;
  if (opt.dmax) p["dmax"] = *opt.dmax;
  if (opt.d) p["d"] = *opt.d;
  if (opt.list) p["list"] = true;
  return p;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult out;
  Options opt;
  try {
    opt = parse_options(args);
  } catch (const usage_error& ex) {
    out.exit_code = 2;
    out.error = std::string("error: ") + ex.what() + "\n" + kUsage;
    return out;
  }
  if (opt.help) {
    out.output = kUsage;
    return out;
  }

  auto t0 = std::chrono::steady_clock::now();
  Rendered r;
  try {
    if (opt.subcommand == "pmatrix")
      r = do_pmatrix(opt);
    else if (opt.subcommand == "column")
      r = do_column(opt);
    else if (opt.subcommand == "analyze")
      r = do_analyze(opt);
    else if (opt.subcommand == "verify")
      r = do_verify(opt);
    else if (opt.subcommand == "scan")
      r = do_scan(opt);
    else if (opt.subcommand == "zeros")
      r = do_zeros(opt);
    else if (opt.subcommand == "q0")
      r = do_q0(opt);
    else if (opt.subcommand == "bounds")
      r = do_bounds(opt);
    else if (opt.subcommand == "identities")
      r = do_identities(opt);
  } catch (const usage_error& ex) {
    out.exit_code = 2;
    out.error = std::string("error: ") + ex.what() + "\n" + kUsage;
    return out;
  } catch (const hypothesis_error& ex) {
    out.exit_code = 2;
    out.error = std::string("error: ") + ex.what() + "\n";
    return out;
  } catch (const invalid_parameters& ex) {
    out.exit_code = 2;
    out.error = std::string("error: ") + ex.what() + "\n";
    return out;
  } catch (const std::invalid_argument& ex) {
    out.exit_code = 2;
    out.error = std::string("error: ") + ex.what() + "\n";
    return out;
  } catch (const consistency_error& ex) {
    out.exit_code = 1;
    out.error = std::string("internal consistency error: ") + ex.what() + "\n";
    return out;
  } catch (const std::exception& ex) {
    out.exit_code = 1;
    out.error = std::string("error: ") + ex.what() + "\n";
    return out;
  }
  auto t1 = std::chrono::steady_clock::now();
  long long elapsed =
      opt.stable ? 0
                 : std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

  out.exit_code = r.exit_code;
  if (opt.format == "json") {
    Json top;
    top["command"] = opt.subcommand;
    top["parameters"] = parameters_json(opt);
    top["results"] = std::move(r.results);
    top["status"] = r.status;
    top["elapsed_ms"] = elapsed;
    out.output = top.dump(2) + "\n";
  } else if (opt.format == "csv") {
    out.output = r.csv;
  } else {
    out.output = r.pretty;
  }

  if (opt.output) {
    std::ofstream file(*opt.output, std::ios::binary);
    if (!file) {
      out.exit_code = 1;
      out.error = "error: cannot write " + *opt.output + "\n";
      return out;
    }
    file << out.output;
  }
  return out;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CliResult res = run_cli(args);
  if (!res.error.empty()) std::cerr << res.error;
  if (!res.output.empty()) std::cout << res.output;
  return res.exit_code;
}

}  // namespace ssp
