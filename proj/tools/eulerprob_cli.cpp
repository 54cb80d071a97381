// Command-line front end. Exit codes: 0 success, 1 check failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eulerprob/errors.hpp"
#include "eulerprob/eulerpoly.hpp"
#include "eulerprob/identities.hpp"
#include "eulerprob/probnum.hpp"
#include "eulerprob/serialize.hpp"
#include "eulerprob/stochastic.hpp"

using namespace eulerprob;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr std::uint64_t kDefaultSeed = 42;

struct RunConfig {
  std::string format = "pretty";
  std::string out;
  int N = 2;
  int max_ell = 20;
  int n = 1;
  int p = 1;
  int k = 0;
  double z = 0.5;
  std::string x = "0";
  std::string method = "series";
  std::string euler_method = "recursive";
  std::string check;
  double tol = -1.0;  // negative: use the per-command default
  double band = 4.0;
  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;
  std::size_t samples = 1000000;
  int max_terms = 20000;
  std::vector<int> sweep_N{2, 3, 4, 5};
  int sweep_n_max = 8;
  std::vector<std::string> sweep_x{"0", "1/2", "1", "3/7", "-2/3"};
};

struct Output {
  std::string text;
  int status = kExitOk;
};

double tol_or(const RunConfig& c, double fallback) { return c.tol > 0.0 ? c.tol : fallback; }

std::string document(json body, const char* command) {
  json doc{{"schema_version", kSchemaVersion}, {"command", command}};
  doc.update(body);
  return doc.dump(2) + "\n";
}

std::uint64_t resolve_seed(const RunConfig& c) {
  if (c.seed_given) return c.seed;
  if (const char* env = std::getenv("EULERPROB_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ParameterError("EULERPROB_SEED is not an unsigned integer");
  }
  return kDefaultSeed;
}

Output cmd_probnums(const RunConfig& c) {
  if (c.method != "all") (void)parse_prob_method(c.method);
  if (c.max_ell < c.N) throw ParameterError("--max-ell must be >= --N");
  const double tol = tol_or(c, 1e-10);
  Output out;

  if (c.method != "all") {
    const auto method = parse_prob_method(c.method);
    const ProbTable table = method == ProbMethod::series ? probnum_series(c.N, c.max_ell)
                            : method == ProbMethod::trig ? probnum_trig(c.N, c.max_ell)
                                                         : probnum_catalan_table(c.N, c.max_ell);
    if (c.format == "csv") out.text = to_csv(table);
    else if (c.format == "json") out.text = document(json{{"table", to_json(table)}}, "probnums");
    else {
      std::ostringstream os;
      os << "p_ell^(" << c.N << ") by " << c.method << ", tail bound " << format_double(table.tail_bound) << "\n";
      for (int ell = 0; ell <= c.max_ell; ++ell) {
        const auto i = static_cast<std::size_t>(ell);
        os << std::setw(6) << ell << "  " << std::setw(24) << (table.is_exact() ? to_string(table.exact[i]) : "-") << "  "
           << format_double(table.approx[i]) << "\n";
      }
      out.text = os.str();
    }
    return out;
  }

  const auto series = probnum_series(c.N, c.max_ell);
  const auto catalan = probnum_catalan_table(c.N, c.max_ell);
  const auto trig = probnum_trig(c.N, c.max_ell);
  CrossValidationReport report;
  std::string failure;
  try {
    report = cross_validate(c.N, c.max_ell, tol);
  } catch (const ValidationError& e) {
    failure = e.what();
    out.status = kExitCheckFailed;
  }

  if (c.format == "csv") {
    CsvWriter w({"ell", "exact", "float", "catalan", "trig"});
    for (int ell = 0; ell <= c.max_ell; ++ell) {
      const auto i = static_cast<std::size_t>(ell);
      w.add_row({std::to_string(ell), to_string(series.exact[i]), format_double(series.approx[i]), to_string(catalan.exact[i]),
                 format_double(trig.approx[i])});
    }
    out.text = w.str();
    std::cerr << (failure.empty() ? "cross-validation passed" : failure) << "; max trig deviation "
              << format_double(report.max_trig_deviation) << "\n";
  } else if (c.format == "json") {
    json body{{"tables", json::array({to_json(series), to_json(catalan), to_json(trig)})},
              {"cross_validation", to_json(report)}};
    if (!failure.empty()) body["cross_validation"]["error"] = failure;
    out.text = document(std::move(body), "probnums");
  } else {
    std::ostringstream os;
    os << "p_ell^(" << c.N << "), series / catalan / trig\n";
    for (int ell = 0; ell <= c.max_ell; ++ell) {
      const auto i = static_cast<std::size_t>(ell);
      os << std::setw(6) << ell << "  " << std::setw(24) << to_string(series.exact[i]) << "  " << std::setw(24)
         << to_string(catalan.exact[i]) << "  " << format_double(trig.approx[i]) << "\n";
    }
    if (failure.empty()) os << "cross-validation passed; max trig deviation " << format_double(report.max_trig_deviation) << "\n";
    else os << failure << "\n";
    out.text = os.str();
  }
  return out;
}

std::string terms_label(const ReconstructionResult& r) {
  return std::to_string(r.terms_used) + " terms (k <= " + std::to_string(r.last_k) + ")";
}

Output cmd_identity(const RunConfig& c) {
  ReconstructionOptions options;
  options.tol = tol_or(c, 1e-9);
  options.max_terms = c.max_terms;
  const auto x = parse_rational(c.x);
  Output out;
  try {
    const auto r = reconstruct_euler(c.n, c.N, x, options);
    if (c.format == "json") out.text = document(json{{"result", to_json(r)}, {"tol", options.tol}}, "identity");
    else if (c.format == "csv") {
      CsvWriter w({"n", "N", "x", "terms_used", "partial_value", "target", "abs_error", "tail_estimate"});
      w.add_row({std::to_string(r.n), std::to_string(r.N), to_string(r.x), std::to_string(r.terms_used),
                 format_double(to_double(r.partial_value)), to_string(r.target), format_double(r.abs_error),
                 format_double(r.tail_estimate)});
      out.text = w.str();
    } else {
      std::ostringstream os;
      os << "E_" << r.n << "(" << to_string(r.x) << ") from N=" << r.N << ": " << terms_label(r) << "\n"
         << "  partial  " << format_double(to_double(r.partial_value)) << "\n"
         << "  target   " << to_string(r.target) << " (" << format_double(to_double(r.target)) << ")\n"
         << "  error    " << format_double(r.abs_error) << " <= " << format_double(options.tol) << "\n";
      out.text = os.str();
    }
  } catch (const ConvergenceError& e) {
    out.status = kExitCheckFailed;
    if (c.format == "json") {
      out.text = document(json{{"error", e.what()}, {"achieved_error", e.achieved_error()}, {"tol", options.tol}}, "identity");
    } else {
      out.text = std::string(e.what()) + "\n";
    }
  }
  return out;
}

Output cmd_montecarlo(const RunConfig& c) {
  const auto seed = resolve_seed(c);
  Output out;
  json body{{"check", c.check}, {"seed", seed}};
  std::ostringstream pretty;

  if (c.check == "integral") {
    const double tol = tol_or(c, 1e-10);
    const double dev = moment_integral_check(c.k);
    const bool ok = c.k % 2 == 0 ? dev <= tol : std::abs(dev) <= 1e-12;
    out.status = ok ? kExitOk : kExitCheckFailed;
    body.update(json{{"k", c.k}, {"deviation", dev}, {"tol", tol}, {"passed", ok}});
    pretty << "integral of t^" << c.k << " sech(pi t): deviation " << format_double(dev) << (ok ? " (ok)" : " (FAILED)") << "\n";
    if (c.format == "csv") {
      CsvWriter w({"k", "deviation", "tol", "passed"});
      w.add_row({std::to_string(c.k), format_double(dev), format_double(tol), ok ? "true" : "false"});
      out.text = w.str();
    }
  } else {
    if (c.samples < 10000) throw ParameterError("--samples must be >= 10000");
    RandomStream stream(seed);
    MomentReport report;
    if (c.check == "rep") {
      report = mc_euler_poly(stream, c.n, parse_rational(c.x), c.samples);
      body.update(json{{"n", c.n}, {"x", c.x}});
    } else if (c.check == "gen") {
      report = mc_gen_euler(stream, c.n, c.p, parse_rational(c.x), c.samples);
      body.update(json{{"n", c.n}, {"p", c.p}, {"x", c.x}});
    } else if (c.check == "klebanov") {
      report = mc_klebanov(stream, c.N, c.samples);
      body.update(json{{"N", c.N}});
    } else {
      throw ParameterError("unknown check '" + c.check + "'");
    }
    const bool ok = report.within_band(c.band);
    out.status = ok ? kExitOk : kExitCheckFailed;
    body.update(json{{"band", c.band}, {"passed", ok}, {"report", to_json(report)}});
    if (c.format == "csv") out.text = to_csv(report);
    pretty << c.check << " check, " << report.sample_size << " samples, seed " << seed << "\n";
    for (const auto& e : report.estimates) {
      pretty << "  " << std::setw(10) << e.label << "  estimate " << format_double(e.empirical) << " +/- "
             << format_double(e.standard_error) << "  reference " << format_double(e.reference) << "  z "
             << format_double(e.standardized_deviation) << "\n";
    }
    if (report.ks) {
      pretty << "  KS two-sample statistic " << format_double(report.ks->statistic) << " (1% critical "
             << format_double(report.ks->critical_value) << ")\n";
    }
    pretty << (ok ? "all deviations within " : "deviation outside ") << format_double(c.band) << " standard errors\n";
  }
  if (c.format == "json") out.text = document(std::move(body), "montecarlo");
  else if (c.format == "pretty") out.text = pretty.str();
  return out;
}

Output cmd_euler(const RunConfig& c) {
  if (c.euler_method != "recursive" && c.euler_method != "series") throw ParameterError("--method must be recursive or series");
  if (c.p < 0) throw ParameterError("--p must be >= 0");
  const auto poly = c.euler_method == "recursive" ? gen_euler_recursive(c.n, c.p) : gen_euler_series(c.n, c.p);
  Output out;
  if (c.format == "csv") out.text = to_csv(poly);
  else if (c.format == "json") out.text = document(json{{"method", c.euler_method}, {"polynomial", to_json(poly)}}, "euler");
  else {
    std::ostringstream os;
    os << "E_" << c.n << "^(" << c.p << ")(x) =";
    const auto& coeffs = poly.coefficients();
    bool first = true;
    for (int j = poly.degree(); j >= 0; --j) {
      const auto& v = coeffs[static_cast<std::size_t>(j)];
      if (v == 0) continue;
      os << (first ? " " : (v < 0 ? " - " : " + "));
      const ExactRational mag = (!first && v < 0) ? ExactRational(-v) : v;
      if (j == 0 || mag != 1) os << to_string(mag) << (j ? " " : "");
      else if (first && v < 0) os << "-";
      if (j > 0) os << "x" << (j > 1 ? "^" + std::to_string(j) : "");
      first = false;
    }
    out.text = os.str() + "\n";
  }
  return out;
}

Output cmd_catalan(const RunConfig& c) {
  const auto r = catalan_prefix_check(c.N);
  Output out;
  out.status = r.passed ? kExitOk : kExitCheckFailed;
  if (c.format == "json") out.text = document(json{{"report", to_json(r)}}, "catalan");
  else if (c.format == "csv") {
    CsvWriter w({"N", "prefix_checked", "mismatches", "valuation", "leading_difference", "passed"});
    w.add_row({std::to_string(r.N), std::to_string(r.prefix_checked), std::to_string(r.mismatches.size()),
               std::to_string(r.valuation), to_string(r.leading_difference), r.passed ? "true" : "false"});
    out.text = w.str();
  } else {
    std::ostringstream os;
    os << "q_{N+2k} = (C^{*N})_k for k < " << r.N << ": " << (r.mismatches.empty() ? "yes" : "NO") << "\n"
       << "difference valuation " << r.valuation << " (expected " << 3 * r.N << "), leading coefficient "
       << to_string(r.leading_difference) << "\n";
    out.text = os.str();
  }
  return out;
}

Output cmd_asymptotic(const RunConfig& c) {
  const double r = asymptotic_ratio(c.N, c.z);
  Output out;
  if (c.format == "json") out.text = document(json{{"N", c.N}, {"z", c.z}, {"ratio", r}}, "asymptotic");
  else if (c.format == "csv") {
    CsvWriter w({"N", "z", "ratio"});
    w.add_row({std::to_string(c.N), format_double(c.z), format_double(r)});
    out.text = w.str();
  } else {
    out.text = "phi_N(z) ((1 + sqrt(1 - z^2))/z)^N = " + format_double(r) + "\n";
  }
  return out;
}

Output cmd_sweep(const RunConfig& c) {
  ReconstructionOptions options;
  options.tol = tol_or(c, 1e-9);
  options.max_terms = c.max_terms;
  std::vector<ExactRational> xs;
  for (const auto& s : c.sweep_x) xs.push_back(parse_rational(s));
  CsvWriter w({"N", "n", "x", "terms_used", "abs_error", "tail_estimate", "first_small_term_k", "passed"});
  json rows = json::array();
  Output out;
  for (int N : c.sweep_N) {
    for (int n = 0; n <= c.sweep_n_max; ++n) {
      for (const auto& x : xs) {
        try {
          const auto r = reconstruct_euler(n, N, x, options);
          w.add_row({std::to_string(N), std::to_string(n), to_string(x), std::to_string(r.terms_used), format_double(r.abs_error),
                     format_double(r.tail_estimate), std::to_string(r.first_small_term_k), "true"});
          rows.push_back(to_json(r));
        } catch (const ConvergenceError& e) {
          out.status = kExitCheckFailed;
          w.add_row({std::to_string(N), std::to_string(n), to_string(x), "", format_double(e.achieved_error()), "", "", "false"});
          rows.push_back(json{{"N", N}, {"n", n}, {"x", to_string(x)}, {"error", e.what()}});
        }
      }
    }
  }
  // The sweep summary is tabular; pretty output is the CSV itself.
  if (c.format == "json") out.text = document(json{{"tol", options.tol}, {"results", std::move(rows)}}, "sweep");
  else out.text = w.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probability numbers of reciprocal Chebyshev series and generalized Euler polynomial identities"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&c](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json", "pretty"}));
    sub->add_option("--out", c.out, "Write output to this file instead of stdout");
  };

  auto* probnums = app.add_subcommand("probnums", "Tabulate p_ell^(N) and cross-validate the three methods");
  probnums->add_option("--N", c.N, "Chebyshev degree")->required()->check(CLI::PositiveNumber);
  probnums->add_option("--max-ell", c.max_ell, "Largest index")->required()->check(CLI::PositiveNumber);
  probnums->add_option("--method", c.method, "series|trig|catalan|all")
      ->check(CLI::IsMember({"series", "trig", "catalan", "all"}));
  probnums->add_option("--tol", c.tol, "Trig cross-validation tolerance (default 1e-10)");
  add_common(probnums);

  auto* identity = app.add_subcommand("identity", "Reconstruct E_n(x) from generalized Euler polynomials");
  identity->add_option("--n", c.n, "Degree")->required()->check(CLI::NonNegativeNumber);
  identity->add_option("--N", c.N, "Chebyshev degree (>= 2)")->required();
  identity->add_option("--x", c.x, "Rational point, a/b or integer")->required();
  identity->add_option("--tol", c.tol, "Absolute tolerance (default 1e-9)");
  identity->add_option("--max-terms", c.max_terms, "Term budget")->check(CLI::PositiveNumber);
  add_common(identity);

  auto* montecarlo = app.add_subcommand("montecarlo", "Monte Carlo and quadrature checks");
  montecarlo->add_option("check", c.check, "rep|gen|klebanov|integral")
      ->required()
      ->check(CLI::IsMember({"rep", "gen", "klebanov", "integral"}));
  montecarlo->add_option("--n", c.n, "Degree");
  montecarlo->add_option("--p", c.p, "Order of the generalized polynomial");
  montecarlo->add_option("--x", c.x, "Rational point");
  montecarlo->add_option("--N", c.N, "Chebyshev degree for the random sum");
  montecarlo->add_option("--k", c.k, "Moment order for the integral check");
  montecarlo->add_option("--samples", c.samples, "Number of draws");
  montecarlo->add_option("--band", c.band, "Standard-error band multiplier")->check(CLI::PositiveNumber);
  montecarlo->add_option("--tol", c.tol, "Quadrature tolerance (default 1e-10)");
  auto* seed_opt = montecarlo->add_option("--seed", c.seed, "Seed (default: $EULERPROB_SEED, then 42)");
  add_common(montecarlo);

  auto* euler = app.add_subcommand("euler", "Coefficients of E_n^(p)(x)");
  euler->add_option("--n", c.n, "Degree")->required()->check(CLI::NonNegativeNumber);
  euler->add_option("--p", c.p, "Order (1 = classical)");
  euler->add_option("--method", c.euler_method, "recursive|series");
  add_common(euler);

  auto* catalan = app.add_subcommand("catalan", "Check q_ell against Catalan convolution powers");
  catalan->add_option("--N", c.N, "Chebyshev degree")->required()->check(CLI::PositiveNumber);
  add_common(catalan);

  auto* asymptotic = app.add_subcommand("asymptotic", "Ratio of phi_N(z) to its large-N form");
  asymptotic->add_option("--N", c.N, "Chebyshev degree")->required()->check(CLI::PositiveNumber);
  asymptotic->add_option("--z", c.z, "Point in (0, 1)")->required();
  add_common(asymptotic);

  auto* sweep = app.add_subcommand("sweep", "Run reconstruct over a grid and emit a summary");
  sweep->add_option("--N-list", c.sweep_N, "Chebyshev degrees")->delimiter(',');
  sweep->add_option("--n-max", c.sweep_n_max, "Largest degree")->check(CLI::NonNegativeNumber);
  sweep->add_option("--x-list", c.sweep_x, "Rational points")->delimiter(',');
  sweep->add_option("--tol", c.tol, "Absolute tolerance (default 1e-9)");
  sweep->add_option("--max-terms", c.max_terms, "Term budget")->check(CLI::PositiveNumber);
  add_common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  c.seed_given = seed_opt->count() > 0;

  Output result;
  try {
    if (*probnums) result = cmd_probnums(c);
    else if (*identity) result = cmd_identity(c);
    else if (*montecarlo) result = cmd_montecarlo(c);
    else if (*euler) result = cmd_euler(c);
    else if (*catalan) result = cmd_catalan(c);
    else if (*asymptotic) result = cmd_asymptotic(c);
    else if (*sweep) result = cmd_sweep(c);
  } catch (const ParameterError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }

  if (!c.out.empty()) {
    std::ofstream file(c.out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open " << c.out << "\n";
      return kExitUsage;
    }
    file << result.text;
  } else {
    std::cout << result.text;
  }
  return result.status;
}
