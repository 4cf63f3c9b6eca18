#pragma once
// Certified verification grid for the spectral lower bound
//   <x_d^2 f, f> >= pi^2 / (4 (m + 2d + 1)^2) <f, f>
// over sphere restrictions of degree-m data. The quadratic form splits into
// tridiagonal blocks over the harmonic labels (s, l); a grid row certifies
// one block: its smallest eigenvalue is bracketed through the characteristic
// polynomial and compared against upper enclosures of the pi^2 expressions,
// so a passing row is a proof, not a float comparison.
//
// For data of degree m the relevant blocks are A_mu(s, l) with
// mu = ceil(m/2): the even/odd reduction folds odd-degree data into the even
// chain with that half-degree. Eigenvalues do not depend on l; the per-l rows
// instead cross-check the recurrence-built block against one assembled from
// explicit basis inner products.

#include "quadharm/blocks.hpp"
#include "quadharm/enclosures.hpp"
#include "quadharm/harmonics.hpp"
#include "quadharm/parallel.hpp"
#include "quadharm/polynomial.hpp"
#include "quadharm/random_poly.hpp"
#include "quadharm/rational.hpp"
#include "quadharm/sphere.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quadharm {

struct GridRow {
  unsigned d = 0;
  unsigned m = 0;  // data degree
  unsigned s = 0;
  unsigned l = 0;
  std::size_t size = 0;
  Rat lambda_lower;
  Rat lambda_upper;
  Rat bound_thm3;   // upper enclosure of pi^2/(4(m+2d+1)^2)
  Rat bound_even;   // even m: pi^2/(4(m+2d)^2); odd m: same as bound_thm3
  Rat bound_proof;  // pi^2/(16(mu+d)^2), mu = ceil(m/2)
  bool pass = false;
};

struct GridReport {
  unsigned d = 0;
  unsigned m_max = 0;
  Rat tol;
  std::vector<GridRow> rows;
  bool all_pass = true;
};

struct BoundValues {
  Rat thm3_hi;
  Rat even_hi;
  Rat proof_hi;
};

// Upper enclosures, so lambda_lower >= value certifies the true inequality.
inline BoundValues grid_bounds(unsigned d, unsigned m) {
  const Rat pi_hi = pi_enclosure().hi;
  const Rat pi_sq = pi_hi * pi_hi;
  const unsigned mu = (m + 1) / 2;
  auto over = [&](unsigned scale, unsigned shift) {
    return pi_sq / Rat(Int(scale) * Int(shift) * Int(shift));
  };
  BoundValues b;
  b.thm3_hi = over(4, m + 2 * d + 1);
  b.even_hi = (m % 2 == 0) ? over(4, m + 2 * d) : b.thm3_hi;
  b.proof_hi = over(16, mu + d);
  return b;
}

inline GridReport verify_bound_grid(unsigned d, unsigned m_max, const Rat& tol,
                                    unsigned jobs = 1) {
  if (d < 2) throw std::invalid_argument("grid dimension must be at least 2");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const unsigned mu_max = (m_max + 1) / 2;
  HarmonicBasis basis = HarmonicBasis::build(d, 2 * mu_max + 2);

  // Distinct block labels; eigenvalues are cached per (mu, s).
  std::vector<std::pair<unsigned, unsigned>> eigen_keys;
  std::vector<std::array<unsigned, 3>> block_keys;  // (mu, s, l)
  for (unsigned mu = 0; mu <= mu_max; ++mu)
    for (unsigned s = 0; s <= 2 * mu; ++s) {
      std::size_t fam = basis.family_size(2 * mu, s);
      if (fam == 0) continue;
      eigen_keys.emplace_back(mu, s);
      for (unsigned l = 1; l <= fam; ++l) block_keys.push_back({mu, s, l});
    }

  std::vector<EigenResult> eigen_results(eigen_keys.size());
  parallel_for(eigen_keys.size(), jobs, [&](std::size_t i) {
    auto [mu, s] = eigen_keys[i];
    eigen_results[i] = smallest_eigenvalue_charpoly(block_from_recurrence(d, mu, s), tol);
  });
  std::map<std::pair<unsigned, unsigned>, const EigenResult*> eigen;
  for (std::size_t i = 0; i < eigen_keys.size(); ++i)
    eigen.emplace(eigen_keys[i], &eigen_results[i]);

  // Per-l cross-check: the block assembled from basis inner products must
  // reproduce the recurrence coefficients exactly.
  std::vector<std::size_t> block_sizes(block_keys.size(), 0);
  parallel_for(block_keys.size(), jobs, [&](std::size_t i) {
    auto [mu, s, l] = block_keys[i];
    BlockMatrix from_basis = assemble_block(basis, mu, s, l);
    BlockMatrix from_rec = block_from_recurrence(d, mu, s);
    if (from_basis.diag != from_rec.diag || from_basis.upper != from_rec.upper ||
        from_basis.lower != from_rec.lower ||
        from_basis.sym_offdiag_sq != from_rec.sym_offdiag_sq)
      throw std::logic_error("assembled block disagrees with recurrence coefficients");
    block_sizes[i] = from_rec.size;
  });
  std::map<std::array<unsigned, 3>, std::size_t> sizes;
  for (std::size_t i = 0; i < block_keys.size(); ++i)
    sizes.emplace(block_keys[i], block_sizes[i]);

  GridReport report;
  report.d = d;
  report.m_max = m_max;
  report.tol = tol;
  for (unsigned m = 0; m <= m_max; ++m) {
    const unsigned mu = (m + 1) / 2;
    const BoundValues bounds = grid_bounds(d, m);
    for (unsigned s = 0; s <= 2 * mu; ++s) {
      std::size_t fam = basis.family_size(2 * mu, s);
      for (unsigned l = 1; l <= fam; ++l) {
        const EigenResult& ev = *eigen.at({mu, s});
        GridRow row;
        row.d = d;
        row.m = m;
        row.s = s;
        row.l = l;
        row.size = sizes.at({mu, s, l});
        row.lambda_lower = ev.lambda.lo;
        row.lambda_upper = ev.lambda.hi;
        row.bound_thm3 = bounds.thm3_hi;
        row.bound_even = bounds.even_hi;
        row.bound_proof = bounds.proof_hi;
        row.pass = row.lambda_lower >= row.bound_thm3 &&
                   row.lambda_lower >= row.bound_even &&
                   row.lambda_lower >= row.bound_proof;
        report.all_pass = report.all_pass && row.pass;
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

struct ReductionCheckResult {
  unsigned trials = 0;
  unsigned failures = 0;
  Rat min_margin;  // min over trials of rayleigh quotient minus bound enclosure
};

// Property check behind the odd-to-even folding: any odd-degree homogeneous
// f restricted to the sphere satisfies the degree-m bound directly, because
// its expansion only meets the odd-chain truncations. Exact rational
// Rayleigh quotients against an upper enclosure of the bound.
inline ReductionCheckResult even_odd_reduction_check(unsigned d, unsigned mu_max,
                                                     unsigned trials, std::uint64_t seed) {
  if (d < 2 || mu_max == 0) throw std::invalid_argument("bad reduction check parameters");
  SeededRng rng(seed);
  const Rat pi_hi = pi_enclosure().hi;
  Polynomial weight = Polynomial::variable(d, d) * Polynomial::variable(d, d);

  ReductionCheckResult out;
  out.trials = trials;
  bool first = true;
  for (unsigned t = 0; t < trials; ++t) {
    unsigned mu = static_cast<unsigned>(rng.range(1, mu_max));
    unsigned m = 2 * mu - 1;
    Polynomial f = random_homogeneous(rng, d, m);
    Rat quotient = rayleigh_quotient(weight, f);
    Rat bound = pi_hi * pi_hi / Rat(4 * Int(m + 2 * d + 1) * Int(m + 2 * d + 1));
    Rat margin = quotient - bound;
    if (margin < 0) ++out.failures;
    if (first || margin < out.min_margin) {
      out.min_margin = margin;
      first = false;
    }
  }
  return out;
}

}  // namespace quadharm
