// Command-line surface: parse polynomials and quadrics, dispatch the
// certified computations, emit CSV / JSON / text reports.
//
// Exit codes: 0 all certifications passed, 1 a certification row failed,
// 64 usage, 65 input rejected (polynomial grammar or quadric validation),
// 66 numeric parameter out of range, 70 internal hard failure.

#include "quadharm/quadharm.hpp"

#include "CLI11.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qh = quadharm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCertFail = 1;
constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;
constexpr int kExitRange = 66;
constexpr int kExitInternal = 70;

struct Options {
  int d = 0;  // 0 = infer from the highest variable index
  unsigned max_degree = 0;
  bool max_degree_set = false;
  std::string tol_text = "2^-40";
  unsigned precision = 128;
  std::string format = "text";
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::string q_text;
  std::string f_text;
  std::string out_path;
  std::string rho_text;
};

bool is_power_of_two(const qh::Int& n) { return n > 0 && (n & (n - 1)) == 0; }

qh::Rat parse_tolerance(const std::string& text) {
  if (text.rfind("2^", 0) == 0) {
    long e = std::stol(text.substr(2));
    if (e > 0 || e < -4096) throw std::domain_error("tolerance exponent out of range");
    return qh::Rat(qh::Int(1), qh::Int(1) << static_cast<unsigned>(-e));
  }
  qh::Rat r = qh::parse_rational(text);
  if (r <= 0 || qh::numerator(r) != 1 || !is_power_of_two(qh::denominator(r)))
    throw std::domain_error("tolerance must be a positive power of two");
  return r;
}

unsigned max_variable_index(const std::string& text) {
  unsigned best = 0;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] != 'x' || !std::isdigit(static_cast<unsigned char>(text[i + 1]))) continue;
    unsigned v = 0;
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      v = v * 10 + static_cast<unsigned>(text[j] - '0');
      if (v > 64) throw std::domain_error("variable index too large");
      ++j;
    }
    best = std::max(best, v);
  }
  return best;
}

unsigned resolve_dimension(const Options& o) {
  if (o.d > 0) return static_cast<unsigned>(o.d);
  unsigned seen = std::max(max_variable_index(o.q_text), max_variable_index(o.f_text));
  return std::max(seen, 1u);
}

int emit(const Options& o, const std::string& content) {
  if (o.out_path.empty()) {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << o.out_path << "\n";
    return kExitInternal;
  }
  f << content;
  return f.good() ? kExitOk : kExitInternal;
}

std::string dump(const qh::Json& doc) { return doc.dump(2) + "\n"; }

std::string dec(const qh::Rat& x) { return qh::to_decimal_string(x, 12); }

void check_common(const Options& o) {
  if (o.precision < 64) throw std::domain_error("precision must be at least 64 bits");
  if (o.precision > 4096) throw std::domain_error("precision out of range");
  if (o.jobs < 1 || o.jobs > 256) throw std::domain_error("jobs out of range");
}

int run_jacobi(const Options& o) {
  check_common(o);
  unsigned n_max = o.max_degree_set ? o.max_degree : 12;
  if (n_max < 3 || n_max > 64) throw std::domain_error("jacobi table needs max degree in [3, 64]");
  qh::Rat tol = parse_tolerance(o.tol_text);
  std::vector<qh::Rat> alphas = {qh::Rat(-1, 2), qh::Rat(0), qh::Rat(1, 2), qh::Rat(1),
                                 qh::Rat(3, 2)};
  auto rows = qh::make_jacobi_table(3, n_max, alphas, tol, o.precision, o.jobs);
  bool all_pass = true;
  for (const auto& r : rows) all_pass = all_pass && r.pass;

  std::string content;
  if (o.format == "csv") {
    content = qh::jacobi_table_csv(rows);
  } else if (o.format == "json") {
    content = dump(qh::jacobi_table_json(rows));
  } else {
    std::ostringstream out;
    out << "first positive zeros of degree-2n symmetric Jacobi polynomials\n";
    for (const auto& r : rows)
      out << "n=" << r.n << " alpha=" << qh::to_string(r.alpha) << " zero=[" << dec(r.zero_lower)
          << ", " << dec(r.zero_upper) << "] bound=" << dec(r.elbert_bound)
          << (r.pass ? " pass" : " FAIL") << "\n";
    out << (all_pass ? "all rows pass\n" : "some rows FAILED\n");
    content = out.str();
  }
  int code = emit(o, content);
  if (code != kExitOk) return code;
  return all_pass ? kExitOk : kExitCertFail;
}

int run_basis(const Options& o) {
  check_common(o);
  if (o.d < 2 || o.d > 8) throw std::domain_error("basis needs dimension in [2, 8]");
  unsigned deg = o.max_degree_set ? o.max_degree : 6;
  if (deg > 24) throw std::domain_error("basis degree out of range");
  qh::HarmonicBasis basis = qh::HarmonicBasis::build(static_cast<unsigned>(o.d), deg);

  std::string content;
  if (o.format == "csv") {
    content = qh::basis_csv(basis);
  } else if (o.format == "json") {
    content = dump(qh::basis_json(basis));
  } else {
    std::ostringstream out;
    out << "harmonic basis d=" << o.d << " through degree " << deg << "\n";
    for (const auto& [idx, entry] : basis.entries())
      out << "Y[" << idx.k << "," << idx.s << "," << idx.l << "] = " << qh::to_string(entry.y)
          << "   norm_sq = " << entry.norm_sq.str() << "\n";
    content = out.str();
  }
  return emit(o, content);
}

int run_bound_grid(const Options& o) {
  check_common(o);
  if (o.d < 2 || o.d > 6) throw std::domain_error("bound grid needs dimension in [2, 6]");
  unsigned m_max = o.max_degree_set ? o.max_degree : 8;
  if (m_max > 12) throw std::domain_error("bound grid degree out of range");
  qh::Rat tol = parse_tolerance(o.tol_text);
  qh::GridReport report =
      qh::verify_bound_grid(static_cast<unsigned>(o.d), m_max, tol, o.jobs);

  std::string content;
  if (o.format == "csv") {
    content = qh::grid_report_csv(report);
  } else if (o.format == "json") {
    content = dump(qh::grid_report_json(report));
  } else {
    std::ostringstream out;
    out << "bound grid d=" << report.d << " data degree <= " << report.m_max
        << " tol=" << qh::to_string(report.tol) << "\n";
    out << report.rows.size() << " rows\n";
    for (const auto& r : report.rows)
      if (!r.pass)
        out << "FAIL m=" << r.m << " s=" << r.s << " l=" << r.l
            << " lambda_lower=" << dec(r.lambda_lower) << " bound=" << dec(r.bound_proof) << "\n";
    out << (report.all_pass ? "all rows pass\n" : "some rows FAILED\n");
    content = out.str();
  }
  int code = emit(o, content);
  if (code != kExitOk) return code;
  return report.all_pass ? kExitOk : kExitCertFail;
}

struct ParsedProblem {
  unsigned d = 0;
  qh::Polynomial f;
  qh::NonhyperbolicQuadric q;
};

ParsedProblem parse_problem(const Options& o) {
  unsigned d = resolve_dimension(o);
  qh::Polynomial f = qh::parse_polynomial(o.f_text, d);
  qh::Polynomial qp = qh::parse_polynomial(o.q_text, d);
  qh::NonhyperbolicQuadric q = qh::NonhyperbolicQuadric::from_polynomial(qp);
  if (d < 2) throw std::domain_error("dimension must be at least 2");
  if (f.degree() > 24) throw std::domain_error("data degree out of range");
  return ParsedProblem{d, std::move(f), q};
}

std::string fischer_csv(const qh::Json& doc) {
  std::ostringstream out;
  out << "key,value\n";
  out << "s," << doc["s"].get<std::string>() << "\n";
  out << "r," << doc["r"].get<std::string>() << "\n";
  out << "quadric," << doc["quadric"].get<std::string>() << "\n";
  out << "residual_zero," << (doc["checks"]["residual_zero"].get<bool>() ? 1 : 0) << "\n";
  out << "laplacian_zero," << (doc["checks"]["laplacian_zero"].get<bool>() ? 1 : 0) << "\n";
  return out.str();
}

int run_fischer(const Options& o, bool only_r) {
  check_common(o);
  ParsedProblem problem = parse_problem(o);
  qh::FischerResult result = qh::fischer_decompose(problem.f, problem.q);
  qh::Json doc = qh::fischer_result_json(result, problem.q);

  std::string content;
  if (o.format == "json") {
    if (only_r) {
      qh::Json reduced;
      reduced["r"] = doc["r"];
      reduced["quadric"] = doc["quadric"];
      reduced["checks"] = doc["checks"];
      content = dump(reduced);
    } else {
      content = dump(doc);
    }
  } else if (o.format == "csv") {
    content = fischer_csv(doc);
  } else {
    std::ostringstream out;
    out << "quadric: " << qh::to_string(problem.q.polynomial()) << "\n";
    if (!only_r) out << "s = " << qh::to_string(result.s) << "\n";
    out << "r = " << qh::to_string(result.r) << "\n";
    out << "residual_zero: " << (result.residual_is_zero ? "yes" : "no") << "\n";
    content = out.str();
  }
  int code = emit(o, content);
  if (code != kExitOk) return code;
  return result.residual_is_zero ? kExitOk : kExitCertFail;
}

int run_series(const Options& o) {
  check_common(o);
  ParsedProblem problem = parse_problem(o);
  unsigned truncation = o.max_degree_set
                            ? o.max_degree
                            : static_cast<unsigned>(std::max(problem.f.degree(), 0));
  if (truncation > 24) throw std::domain_error("series truncation out of range");
  std::optional<qh::Rat> rho;
  if (!o.rho_text.empty()) {
    rho = qh::parse_rational(o.rho_text);
    if (*rho < 0) throw std::domain_error("declared order must be nonnegative");
  }
  qh::SeriesData data = qh::SeriesData::from_polynomial(problem.f, truncation, rho);
  qh::SeriesSolveResult result = qh::dirichlet_solve_series(data, problem.q);

  std::string content;
  if (o.format == "json") {
    content = dump(qh::series_report_json(result, problem.q));
  } else if (o.format == "csv") {
    std::ostringstream out;
    out << "degree,r_part,r_norm_l1,s_norm_l1\n";
    for (unsigned i = 0; i < result.r.parts.size(); ++i)
      out << i << ',' << qh::to_string(result.r.parts[i]) << ','
          << qh::to_string(result.diagnostics.r_degree_norms[i]) << ','
          << qh::to_string(result.diagnostics.s_degree_norms[i]) << "\n";
    content = out.str();
  } else {
    std::ostringstream out;
    out << "truncation N = " << result.r.truncation << "\n";
    out << "beta = " << result.diagnostics.beta << "\n";
    if (result.diagnostics.rho_declared)
      out << "declared order rho = " << qh::to_string(result.diagnostics.rho)
          << (result.diagnostics.admissible ? " (admissible)" : " (NOT admissible)") << "\n";
    else
      out << "declared order rho: none\n";
    out << "order proxy from r coefficients: " << result.diagnostics.order_proxy << "\n";
    for (unsigned i = 0; i < result.r.parts.size(); ++i)
      out << "degree " << i
          << ": |r|_1 = " << qh::to_string(result.diagnostics.r_degree_norms[i])
          << ", |s|_1 = " << qh::to_string(result.diagnostics.s_degree_norms[i]) << "\n";
    out << "r = " << qh::to_string(result.full.r) << "\n";
    content = out.str();
  }
  int code = emit(o, content);
  if (code != kExitOk) return code;
  return result.full.residual_is_zero ? kExitOk : kExitCertFail;
}

int run_selftest(const Options& o) {
  check_common(o);
  std::ostringstream out;
  out << "seed: " << o.seed << "\n";
  unsigned checks = 0;
  bool ok = true;
  auto record = [&](const char* name, bool good) {
    ++checks;
    ok = ok && good;
    out << (good ? "ok: " : "FAIL: ") << name << "\n";
  };

  {
    bool good = true;
    for (unsigned n = 0; n <= 12 && good; ++n)
      for (const qh::Rat& alpha :
           {qh::Rat(-1, 2), qh::Rat(0), qh::Rat(1, 2), qh::Rat(1), qh::Rat(3, 2), qh::Rat(5, 2)}) {
        auto c = qh::recurrence_coeffs(n, alpha);
        qh::UPoly pn = qh::jacobi_poly(n, alpha);
        qh::UPoly lhs = pn.shifted(1);
        qh::UPoly rhs = c.a * qh::jacobi_poly(n + 1, alpha);
        if (n > 0) rhs = rhs + c.g * qh::jacobi_poly(n - 1, alpha);
        if (!(lhs - rhs).is_zero()) {
          good = false;
          break;
        }
      }
    record("three-term recurrence identity (n <= 12)", good);
  }
  {
    auto agreement = qh::chebyshev_cross_check(4);
    record("Chebyshev proportionality at index 4", agreement.proportional);
  }
  {
    qh::ZeroBracket z = qh::first_positive_zero(6, qh::Rat(-1, 2), qh::Rat(qh::Int(1), qh::Int(1) << 50));
    // cos(5 pi / 12) = sin(pi / 12)
    qh::RatInterval target = qh::sin_enclosure(
        qh::RatInterval(qh::pi_enclosure().lo / 12, qh::pi_enclosure().hi / 12), 128);
    record("P_6^(-1/2,-1/2) first zero matches cos(5 pi / 12)",
           z.upper >= target.lo && z.lower <= target.hi);
  }
  {
    qh::Polynomial f = qh::parse_polynomial("x1^2", 2);
    qh::NonhyperbolicQuadric q =
        qh::NonhyperbolicQuadric::from_polynomial(qh::parse_polynomial("x1^2+x2^2-1", 2));
    qh::FischerResult result = qh::fischer_decompose(f, q);
    bool good = qh::to_string(result.s) == "1/2" &&
                result.r == qh::parse_polynomial("1/2*x1^2 - 1/2*x2^2 + 1/2", 2) &&
                result.residual_is_zero;
    record("circle decomposition of x1^2", good);
  }
  {
    qh::GaussResult g = qh::gauss_decompose(qh::parse_polynomial("x1^2", 2));
    bool good = g.parts.size() == 2 && qh::to_string(g.parts[0]) == "1/2" &&
                g.parts[1] == qh::parse_polynomial("1/2*x1^2 - 1/2*x2^2", 2);
    record("Gauss split of x1^2", good);
  }
  {
    qh::GridReport report = qh::verify_bound_grid(2, 4, qh::Rat(qh::Int(1), qh::Int(1) << 40), o.jobs);
    record("bound grid d=2 through data degree 4", report.all_pass);
  }
  {
    auto reduction = qh::even_odd_reduction_check(3, 3, 20, o.seed);
    record("odd-data Rayleigh quotients clear the bound", reduction.failures == 0);
  }
  {
    bool good = qh::sin_inequality_check(1) && qh::sin_inequality_check(10) &&
                qh::sin_inequality_check(100);
    record("sin comparison for small arguments", good);
  }

  out << (ok ? "selftest: all " : "selftest: FAILURES among ") << checks << " checks\n";
  int code = emit(o, out.str());
  if (code != kExitOk) return code;
  return ok ? kExitOk : kExitCertFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact harmonic division on nonhyperbolic quadrics with certified sphere bounds"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol_text, "certification tolerance, a power of two like 2^-40");
    sub->add_option("--precision", o.precision, "working precision in bits (>= 64)");
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    sub->add_option("--jobs", o.jobs, "worker pool width");
    sub->add_option("--seed", o.seed, "seed for randomized property checks");
    sub->add_option("--out", o.out_path, "write the report to this file");
  };

  CLI::App* jacobi = app.add_subcommand("jacobi", "zero brackets vs. the analytic lower bound");
  jacobi->add_option("--max-degree", o.max_degree, "largest half-degree n")
      ->each([&](const std::string&) { o.max_degree_set = true; });
  add_common(jacobi);

  CLI::App* basis = app.add_subcommand("basis", "emit the harmonic basis");
  basis->add_option("-d,--dimension", o.d, "ambient dimension")->required();
  basis->add_option("--max-degree", o.max_degree, "highest degree")
      ->each([&](const std::string&) { o.max_degree_set = true; });
  add_common(basis);

  CLI::App* grid = app.add_subcommand("bound-grid", "certify the spectral lower bound");
  grid->add_option("-d,--dimension", o.d, "ambient dimension")->required();
  grid->add_option("--max-degree", o.max_degree, "largest data degree")
      ->each([&](const std::string&) { o.max_degree_set = true; });
  add_common(grid);

  auto add_problem = [&](CLI::App* sub) {
    sub->add_option("-d,--dimension", o.d, "ambient dimension (inferred when omitted)");
    sub->add_option("--q", o.q_text, "quadric polynomial")->required();
    sub->add_option("--f", o.f_text, "data polynomial")->required();
  };

  CLI::App* fischer = app.add_subcommand("fischer", "decompose f = q*s + r with harmonic r");
  add_problem(fischer);
  add_common(fischer);

  CLI::App* dirichlet = app.add_subcommand("dirichlet", "harmonic interpolant of f on {q = 0}");
  add_problem(dirichlet);
  add_common(dirichlet);

  CLI::App* series = app.add_subcommand("series", "decompose truncated entire data");
  add_problem(series);
  series->add_option("--max-degree", o.max_degree, "truncation degree N")
      ->each([&](const std::string&) { o.max_degree_set = true; });
  series->add_option("--rho", o.rho_text, "declared order of the entire data (diagnostic)");
  add_common(series);

  CLI::App* selftest = app.add_subcommand("selftest", "run the built-in invariant suite");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(jacobi)) return run_jacobi(o);
    if (app.got_subcommand(basis)) return run_basis(o);
    if (app.got_subcommand(grid)) return run_bound_grid(o);
    if (app.got_subcommand(fischer)) return run_fischer(o, false);
    if (app.got_subcommand(dirichlet)) return run_fischer(o, true);
    if (app.got_subcommand(series)) return run_series(o);
    if (app.got_subcommand(selftest)) return run_selftest(o);
    std::cerr << "error: no verb\n";
    return kExitUsage;
  } catch (const qh::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const qh::QuadricError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const qh::SingularSystem& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRange;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRange;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRange;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
