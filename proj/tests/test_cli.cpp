#include "quadharm/quadharm.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace quadharm;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the installed binary with the given arguments, capturing stdout.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(QH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.output.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("report headers are stable") {
  std::vector<JacobiRow> jrows = make_jacobi_table(3, 3, {Rat(0)}, Rat(1, 1024), 64);
  std::string jcsv = jacobi_table_csv(jrows);
  CHECK(jcsv.rfind("n,alpha,zero_lower,zero_upper,elbert_bound,pass\n", 0) == 0);

  GridReport grid = verify_bound_grid(2, 2, Rat(Int(1), Int(1) << 20));
  std::string gcsv = grid_report_csv(grid);
  CHECK(gcsv.rfind("d,m,s,l,size,lambda_lower,lambda_upper,bound_thm3,bound_even,bound_proof,pass\n",
                   0) == 0);

  HarmonicBasis basis = HarmonicBasis::build(2, 2);
  std::string bcsv = basis_csv(basis);
  CHECK(bcsv.rfind("k,s,l,polynomial,norm_sq\n", 0) == 0);
  CHECK(contains(bcsv, "* pi^(2/2)"));
}

TEST_CASE("decomposition report fields") {
  NonhyperbolicQuadric q =
      NonhyperbolicQuadric::from_polynomial(parse_polynomial("x1^2+x2^2-1", 2));
  FischerResult res = fischer_decompose(parse_polynomial("x1^2", 2), q);
  Json doc = fischer_result_json(res, q);
  CHECK(doc["s"] == "1/2");
  CHECK(doc["r"] == "1/2*x1^2 - 1/2*x2^2 + 1/2");
  CHECK(doc["quadric"] == "x1^2 + x2^2 - 1");
  CHECK(doc["checks"]["residual_zero"] == true);
  CHECK(doc["checks"]["laplacian_zero"] == true);
}

TEST_CASE("series report shape") {
  NonhyperbolicQuadric q = NonhyperbolicQuadric::from_polynomial(parse_polynomial("x2^2-1", 2));
  SeriesData data = SeriesData::from_polynomial(parse_polynomial("1 + x1^2", 2), 4, Rat(1, 2));
  Json doc = series_report_json(dirichlet_solve_series(data, q), q);
  CHECK(doc["kind"] == "series-solve");
  CHECK(doc["truncation"] == 4);
  CHECK(doc["beta"] == 0);
  CHECK(doc["admissible"] == true);
  CHECK(doc["degrees"].size() == 5);

  SeriesData bare = SeriesData::from_polynomial(parse_polynomial("1 + x1^2", 2), 4);
  Json doc2 = series_report_json(dirichlet_solve_series(bare, q), q);
  CHECK(doc2["rho"].is_null());
  CHECK(doc2["admissible"].is_null());
}

TEST_CASE("dirichlet verb on a worked example") {
  RunResult r = run_cli("dirichlet --q \"x1^2+x2^2-1\" --f \"x1^2\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "r = 1/2*x1^2 - 1/2*x2^2 + 1/2"));
  CHECK(contains(r.output, "residual_zero: yes"));
}

TEST_CASE("fischer verb emits exact json") {
  RunResult r = run_cli("fischer --q \"x1^2+x2^2-1\" --f \"x1^2\" -d 2 --format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"s\": \"1/2\""));
  CHECK(contains(r.output, "\"residual_zero\": true"));
}

TEST_CASE("rejected inputs exit with the input code") {
  CHECK(run_cli("dirichlet --q \"x1-1\" --f \"x1\"").exit_code == 65);
  CHECK(run_cli("dirichlet --q \"x1^2 - x2^2 - 1\" --f \"x1\"").exit_code == 65);
  CHECK(run_cli("dirichlet --q \"x1*x2 - 1\" --f \"x1\"").exit_code == 65);
  CHECK(run_cli("dirichlet --q \"x1^2 - 1\" --f \"x0 + 1\"").exit_code == 65);
  CHECK(run_cli("fischer --q \"x1^2 + \" --f \"x1\"").exit_code == 65);
}

TEST_CASE("usage errors exit with the usage code") {
  CHECK(run_cli("fischer --q \"x1^2-1\"").exit_code == 64);
  CHECK(run_cli("frobnicate").exit_code == 64);
  CHECK(run_cli("").exit_code == 64);
  CHECK(run_cli("bound-grid").exit_code == 64);
  CHECK(run_cli("dirichlet --q \"x1^2-1\" --f \"x1\" --format yaml").exit_code == 64);
}

TEST_CASE("range errors exit with the range code") {
  CHECK(run_cli("basis -d 1").exit_code == 66);
  CHECK(run_cli("basis -d 9").exit_code == 66);
  CHECK(run_cli("bound-grid -d 7").exit_code == 66);
  CHECK(run_cli("jacobi --max-degree 2").exit_code == 66);
  CHECK(run_cli("jacobi --max-degree 4 --tol \"3/7\"").exit_code == 66);
  CHECK(run_cli("selftest --precision 32").exit_code == 66);
  CHECK(run_cli("selftest --jobs 0").exit_code == 66);
}

TEST_CASE("bound grid rows all certify") {
  RunResult r = run_cli("bound-grid -d 2 --max-degree 6 --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "d,m,s,l,size,lambda_lower,lambda_upper,bound_thm3,bound_even,bound_proof,pass");
  unsigned rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    ++rows;
    CHECK(line.size() >= 2);
    CHECK(line.substr(line.size() - 2) == ",1");
  }
  CHECK(rows > 0);
}

TEST_CASE("series verb reports admissibility") {
  RunResult r =
      run_cli("series --q \"x2^2-1\" --f \"1 + x1^2\" --rho \"1/2\" --format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"admissible\": true"));

  RunResult bad = run_cli("series --q \"x2^2-1\" --f \"1 + x1^2\" --rho \"-1\"");
  CHECK(bad.exit_code == 66);
}

TEST_CASE("output lands in the requested file") {
  std::string path = "cli_out_check.csv";
  std::remove(path.c_str());
  RunResult r = run_cli("fischer --q \"x1^2+x2^2-1\" --f \"x1^2\" --format csv --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(contains(buf.str(), "key,value"));
  CHECK(contains(buf.str(), "s,1/2"));
  std::remove(path.c_str());
}

TEST_CASE("selftest is deterministic") {
  RunResult a = run_cli("selftest");
  CHECK(a.exit_code == 0);
  CHECK(contains(a.output, "seed: 1"));
  CHECK(contains(a.output, "selftest: all"));
  RunResult b = run_cli("selftest");
  CHECK(a.output == b.output);

  RunResult seeded = run_cli("selftest --seed 7");
  CHECK(seeded.exit_code == 0);
  CHECK(contains(seeded.output, "seed: 7"));
}

TEST_CASE("jacobi verb certifies every row") {
  RunResult r = run_cli("jacobi --max-degree 4 --format csv --tol \"2^-20\"");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "n,alpha,zero_lower,zero_upper,elbert_bound,pass");
  unsigned rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    ++rows;
    CHECK(line.substr(line.size() - 2) == ",1");
  }
  CHECK(rows == 10);  // n in {3,4} x five alpha values
}
