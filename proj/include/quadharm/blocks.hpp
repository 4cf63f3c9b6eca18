#pragma once
// Tridiagonal blocks of the multiplication-by-x_d^2 operator on spherical
// harmonics, their smallest eigenvalues by two independent routes, and the
// certified bound grid.
//
// For the block A_m(s,l), acting on normalized harmonics of degrees
// 2k, k = sigma+delta .. m, sharing the (s,l) factor:
//   A_{k,k}   = b~_{2k-s}(a_s)
//   A_{k,k+1} = a~_{2k-s}(a_s) d_{2k}/d_{2k+2}
//   A_{k,k-1} = g~_{2k-s}(a_s) d_{2k}/d_{2k-2}
// The d-ratios are square roots of rational norm ratios, so the true
// off-diagonal entries are irrational in general. The stored form keeps the
// exact rational data instead: the raw coefficient vectors, the rational
// chain of squared-norm ratios, and the similarity-reduced symmetric
// tridiagonal whose off-diagonal squares a~_k * g~_{k+1} are rational. The
// reduced matrix shares the spectrum, so no eigenvalue information is lost.

#include "quadharm/enclosures.hpp"
#include "quadharm/harmonics.hpp"
#include "quadharm/jacobi.hpp"
#include "quadharm/rational.hpp"
#include "quadharm/upoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadharm {

struct BlockMatrix {
  unsigned d = 0;
  unsigned m = 0;
  unsigned s = 0;
  unsigned l = 1;
  std::size_t size = 0;

  // Entries indexed by k - (sigma+delta); raw coefficient factors.
  std::vector<Rat> diag;        // b~_{2k-s}, k = sigma+delta .. m
  std::vector<Rat> upper;       // a~_{2k-s}, k = sigma+delta .. m-1
  std::vector<Rat> lower;       // g~_{2k-s}, k = sigma+delta+1 .. m
  // Rational chain N_{2k+2,(s,l)} / N_{2k,(s,l)}; empty when the block was
  // built from recurrence coefficients alone.
  std::vector<Rat> norm_ratio_sq;
  // Similarity-reduced symmetric form: same diag, squared off-diagonals.
  std::vector<Rat> sym_offdiag_sq;  // a~_k * g~_{k+1}

  unsigned sigma() const { return s / 2; }
  unsigned delta() const { return s % 2; }
  unsigned k_min() const { return sigma() + delta(); }
};

// The block entries depend only on (d, m, s): the (d-1)-level factor and
// hence every l gives the same matrix. Builds the rational data without a
// basis.
inline BlockMatrix block_from_recurrence(unsigned d, unsigned m, unsigned s) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  if (s > 2 * m) throw std::invalid_argument("factor degree exceeds 2m");
  BlockMatrix b;
  b.d = d;
  b.m = m;
  b.s = s;
  unsigned k0 = s / 2 + s % 2;
  b.size = m - k0 + 1;
  Rat alpha = alpha_for(s, d);
  for (unsigned k = k0; k <= m; ++k) {
    auto sq = squared_recurrence(2 * k - s, alpha);
    b.diag.push_back(sq.b_tilde);
    if (k < m) b.upper.push_back(sq.a_tilde);
    if (k > k0) b.lower.push_back(sq.g_tilde);
  }
  for (std::size_t i = 0; i + 1 < b.size; ++i)
    b.sym_offdiag_sq.push_back(b.upper[i] * b.lower[i]);
  return b;
}

// Assembles the block from a built basis, attaching the rational norm-ratio
// chain. The PiScaled ratio is defined only when the pi powers cancel; a
// mismatch would mean the norms are not rational multiples of one another
// and is a hard failure.
inline BlockMatrix assemble_block(const HarmonicBasis& basis, unsigned m, unsigned s, unsigned l) {
  BlockMatrix b = block_from_recurrence(basis.dimension(), m, s);
  b.l = l;
  unsigned k0 = b.k_min();
  if (2 * m > basis.max_degree())
    throw std::invalid_argument("basis does not cover the block degrees");
  for (unsigned k = k0; k < m; ++k) {
    const PiScaled& n_lo = basis.at(2 * k, s, l).norm_sq;
    const PiScaled& n_hi = basis.at(2 * k + 2, s, l).norm_sq;
    Rat rho = ratio(n_hi, n_lo);
    if (rho <= 0) throw std::logic_error("nonpositive norm ratio");
    b.norm_ratio_sq.push_back(rho);
  }
  return b;
}

enum class EigenRoute { char_poly, jacobi_zero };

struct EigenResult {
  RatInterval lambda;  // certified bracket on the smallest eigenvalue
  EigenRoute route;
  unsigned d = 0, m = 0, s = 0;
};

// Characteristic polynomial of the similarity-reduced symmetric form, via
// the standard leading-minor recurrence
//   p_j(t) = (diag_j - t) p_{j-1}(t) - offdiag_sq_{j-1} p_{j-2}(t).
inline UPoly block_charpoly(const BlockMatrix& b) {
  UPoly neg_t({Rat(0), Rat(-1)});
  UPoly prev = UPoly::constant(Rat(1));
  UPoly cur = UPoly::constant(b.diag[0]) + neg_t;
  for (std::size_t j = 1; j < b.size; ++j) {
    UPoly next = (UPoly::constant(b.diag[j]) + neg_t) * cur - b.sym_offdiag_sq[j - 1] * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline Rat gershgorin_upper(const BlockMatrix& b) {
  Rat best(0);
  for (std::size_t j = 0; j < b.size; ++j) {
    Rat row = b.diag[j];
    if (j < b.upper.size()) row += b.upper[j];
    if (j > 0) row += b.lower[j - 1];
    if (row > best) best = row;
  }
  return best;
}

inline Rat gershgorin_lower(const BlockMatrix& b) {
  std::optional<Rat> best;
  for (std::size_t j = 0; j < b.size; ++j) {
    Rat row = b.diag[j];
    if (j < b.upper.size()) row -= b.upper[j];
    if (j > 0) row -= b.lower[j - 1];
    if (!best || row < *best) best = row;
  }
  return *best;
}

// Smallest eigenvalue via Sturm isolation of the characteristic polynomial
// on (0, min(1, Gershgorin)]. The operator is the quadratic form of x_d^2
// on a subspace of L^2(S^{d-1}), so its spectrum lies in (0, 1).
inline EigenResult smallest_eigenvalue_charpoly(const BlockMatrix& b, const Rat& tol) {
  EigenResult res;
  res.route = EigenRoute::char_poly;
  res.d = b.d;
  res.m = b.m;
  res.s = b.s;
  if (b.size == 1) {
    res.lambda = RatInterval::point(b.diag[0]);
    return res;
  }
  UPoly p = block_charpoly(b);
  Rat ub = gershgorin_upper(b);
  if (ub > 1) ub = Rat(1);
  RootBracket root = first_positive_root(p, ub, tol);
  res.lambda = RatInterval(root.lo, root.hi);
  return res;
}

// Smallest eigenvalue as the square of the first positive zero of
// P_{2n}^{(a_s,a_s)} with n = m - sigma + 1. The identity is derived in the
// source material for even s only; odd s is rejected here.
inline EigenResult smallest_eigenvalue_jacobizero(unsigned d, unsigned m, unsigned s,
                                                  const Rat& tol) {
  if (s % 2 != 0)
    throw std::domain_error("squared-zero route applies to even factor degrees only");
  if (s > 2 * m) throw std::invalid_argument("factor degree exceeds 2m");
  unsigned n = m - s / 2 + 1;
  Rat alpha = alpha_for(s, d);
  ZeroBracket z = first_positive_zero(2 * n, alpha, tol / 2);
  EigenResult res;
  res.route = EigenRoute::jacobi_zero;
  res.d = d;
  res.m = m;
  res.s = s;
  res.lambda = RatInterval(z.lower * z.lower, z.upper * z.upper);
  return res;
}

// Lower bound for an odd-s block: the even-s neighbour's smallest
// eigenvalue (the odd block's spectrum sits above it).
inline EigenResult odd_block_interlacing_bound(unsigned d, unsigned m, unsigned s,
                                               const Rat& tol) {
  if (s % 2 != 1) throw std::domain_error("expected an odd factor degree");
  return smallest_eigenvalue_jacobizero(d, m, s - 1, tol);
}

}  // namespace quadharm
