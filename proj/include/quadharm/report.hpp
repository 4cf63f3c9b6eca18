#pragma once
// Report assembly: fixed-header CSV and stable-key JSON for the zero table,
// the bound grid, decompositions, and series diagnostics. All certified
// quantities are emitted as exact rationals so every pass/fail decision can
// be recomputed offline from its own row.

#include "quadharm/boundgrid.hpp"
#include "quadharm/fischer.hpp"
#include "quadharm/harmonics.hpp"
#include "quadharm/jacobi.hpp"
#include "quadharm/parallel.hpp"
#include "quadharm/polynomial_io.hpp"
#include "quadharm/quadric.hpp"
#include "quadharm/rational.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace quadharm {

using Json = nlohmann::ordered_json;

struct JacobiRow {
  unsigned n = 0;  // zero of the degree-2n symmetric Jacobi polynomial
  Rat alpha;
  Rat zero_lower;
  Rat zero_upper;
  Rat elbert_bound;  // certified lower enclosure of pi/(4 sqrt((alpha+1/2+n)(n+2)))
  bool pass = false;
};

inline std::vector<JacobiRow> make_jacobi_table(unsigned n_min, unsigned n_max,
                                                const std::vector<Rat>& alphas,
                                                const Rat& width, unsigned bits,
                                                unsigned jobs = 1) {
  if (n_min < 3) throw std::invalid_argument("zero table starts at n = 3");
  std::vector<JacobiRow> rows;
  for (unsigned n = n_min; n <= n_max; ++n)
    for (const Rat& alpha : alphas) {
      JacobiRow row;
      row.n = n;
      row.alpha = alpha;
      rows.push_back(std::move(row));
    }
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    JacobiRow& row = rows[i];
    ZeroBracket z = first_positive_zero(2 * row.n, row.alpha, width);
    row.zero_lower = z.lower;
    row.zero_upper = z.upper;
    row.elbert_bound = elbert_lower_bound(row.n, row.alpha, bits);
    row.pass = row.zero_lower >= row.elbert_bound;
  });
  return rows;
}

inline std::string jacobi_table_csv(const std::vector<JacobiRow>& rows) {
  std::ostringstream out;
  out << "n,alpha,zero_lower,zero_upper,elbert_bound,pass\n";
  for (const auto& r : rows)
    out << r.n << ',' << to_string(r.alpha) << ',' << to_string(r.zero_lower) << ','
        << to_string(r.zero_upper) << ',' << to_string(r.elbert_bound) << ','
        << (r.pass ? 1 : 0) << '\n';
  return out.str();
}

inline Json jacobi_table_json(const std::vector<JacobiRow>& rows) {
  Json doc;
  doc["kind"] = "jacobi-zero-table";
  doc["rows"] = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["n"] = r.n;
    row["alpha"] = to_string(r.alpha);
    row["zero_lower"] = to_string(r.zero_lower);
    row["zero_upper"] = to_string(r.zero_upper);
    row["elbert_bound"] = to_string(r.elbert_bound);
    row["pass"] = r.pass;
    doc["rows"].push_back(std::move(row));
  }
  return doc;
}

inline std::string grid_report_csv(const GridReport& report) {
  std::ostringstream out;
  out << "d,m,s,l,size,lambda_lower,lambda_upper,bound_thm3,bound_even,bound_proof,pass\n";
  for (const auto& r : report.rows)
    out << r.d << ',' << r.m << ',' << r.s << ',' << r.l << ',' << r.size << ','
        << to_string(r.lambda_lower) << ',' << to_string(r.lambda_upper) << ','
        << to_string(r.bound_thm3) << ',' << to_string(r.bound_even) << ','
        << to_string(r.bound_proof) << ',' << (r.pass ? 1 : 0) << '\n';
  return out.str();
}

inline Json grid_report_json(const GridReport& report) {
  Json doc;
  doc["kind"] = "bound-grid";
  doc["d"] = report.d;
  doc["m_max"] = report.m_max;
  doc["tol"] = to_string(report.tol);
  doc["all_pass"] = report.all_pass;
  doc["rows"] = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["d"] = r.d;
    row["m"] = r.m;
    row["s"] = r.s;
    row["l"] = r.l;
    row["size"] = r.size;
    row["lambda_lower"] = to_string(r.lambda_lower);
    row["lambda_upper"] = to_string(r.lambda_upper);
    row["bound_thm3"] = to_string(r.bound_thm3);
    row["bound_even"] = to_string(r.bound_even);
    row["bound_proof"] = to_string(r.bound_proof);
    row["pass"] = r.pass;
    doc["rows"].push_back(std::move(row));
  }
  return doc;
}

inline Json fischer_result_json(const FischerResult& result, const NonhyperbolicQuadric& q) {
  Polynomial residual = result.r;  // f - q*s - r vanishes by construction; recheck both
  Json doc;
  doc["s"] = to_string(result.s);
  doc["r"] = to_string(result.r);
  doc["quadric"] = to_string(q.polynomial());
  Json checks;
  checks["residual_zero"] = result.residual_is_zero;
  checks["laplacian_zero"] = residual.laplacian().is_zero();
  doc["checks"] = std::move(checks);
  return doc;
}

inline std::string basis_csv(const HarmonicBasis& basis) {
  std::ostringstream out;
  out << "k,s,l,polynomial,norm_sq\n";
  for (const auto& [idx, entry] : basis.entries())
    out << idx.k << ',' << idx.s << ',' << idx.l << ',' << to_string(entry.y) << ','
        << entry.norm_sq.str() << '\n';
  return out.str();
}

inline Json basis_json(const HarmonicBasis& basis) {
  Json doc;
  doc["kind"] = "harmonic-basis";
  doc["d"] = basis.dimension();
  doc["max_degree"] = basis.max_degree();
  doc["entries"] = Json::array();
  for (const auto& [idx, entry] : basis.entries()) {
    Json row;
    row["k"] = idx.k;
    row["s"] = idx.s;
    row["l"] = idx.l;
    row["polynomial"] = to_string(entry.y);
    row["norm_sq"] = entry.norm_sq.str();
    doc["entries"].push_back(std::move(row));
  }
  return doc;
}

inline Json series_report_json(const SeriesSolveResult& result, const NonhyperbolicQuadric& q) {
  Json doc;
  doc["kind"] = "series-solve";
  doc["truncation"] = result.r.truncation;
  doc["beta"] = result.diagnostics.beta;
  if (result.diagnostics.rho_declared) {
    doc["rho"] = to_string(result.diagnostics.rho);
    doc["admissible"] = result.diagnostics.admissible;
  } else {
    doc["rho"] = nullptr;
    doc["admissible"] = nullptr;
  }
  doc["order_proxy"] = result.diagnostics.order_proxy;
  Json parts = Json::array();
  for (unsigned i = 0; i < result.r.parts.size(); ++i) {
    Json row;
    row["degree"] = i;
    row["r_part"] = to_string(result.r.parts[i]);
    row["r_norm_l1"] = to_string(result.diagnostics.r_degree_norms[i]);
    row["s_norm_l1"] = to_string(result.diagnostics.s_degree_norms[i]);
    parts.push_back(std::move(row));
  }
  doc["degrees"] = std::move(parts);
  doc["solution"] = fischer_result_json(result.full, q);
  return doc;
}

}  // namespace quadharm
