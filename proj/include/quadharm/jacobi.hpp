#pragma once
// Jacobi polynomials with symmetric parameters P_n^{(a,a)}, normalized by
// P_0 = 1, P_1 = (a+1)x and the recurrence
//   x P_n = a_n P_{n+1} + g_n P_{n-1},
//   a_n = (n+1)(n+2a+1) / ((2n+2a+1)(n+a+1)),   g_n = (n+a)/(2n+2a+1),
// together with the squared recurrence for x^2 P_n, the even substitution
// r_u(y) = P_{2u}(sqrt(y)), certified first-positive-zero brackets, and the
// lower bound x_{2n,1}(a) >= pi / (4 sqrt((a+1/2+n)(n+2))).

#include "quadharm/enclosures.hpp"
#include "quadharm/rational.hpp"
#include "quadharm/upoly.hpp"

#include <stdexcept>
#include <vector>

namespace quadharm {

struct RecurrenceCoeffs {
  unsigned n;
  Rat alpha;
  Rat a;
  Rat g;
};

inline void check_alpha(const Rat& alpha) {
  if (alpha <= -1) throw std::domain_error("jacobi parameter must exceed -1");
}

inline RecurrenceCoeffs recurrence_coeffs(unsigned n, const Rat& alpha) {
  check_alpha(alpha);
  RecurrenceCoeffs c{n, alpha, Rat(0), Rat(0)};
  if (n == 0) {
    // The generic formula is 0/0 at n=0, alpha=-1/2; the reduced form is
    // a_0 = 1/(alpha+1), consistent with x P_0 = a_0 P_1.
    c.a = Rat(1) / (alpha + 1);
    c.g = Rat(0);
    return c;
  }
  Rat nn(n);
  c.a = (nn + 1) * (nn + 2 * alpha + 1) / ((2 * nn + 2 * alpha + 1) * (nn + alpha + 1));
  c.g = (nn + alpha) / (2 * nn + 2 * alpha + 1);
  return c;
}

struct SquaredRecurrenceCoeffs {
  unsigned n;
  Rat alpha;
  Rat a_tilde;
  Rat b_tilde;
  Rat g_tilde;
};

// Coefficients of x^2 P_n = a~ P_{n+2} + b~ P_n + g~ P_{n-2}; the terms
// involving absent lower-degree polynomials truncate to zero at n in {0,1}.
inline SquaredRecurrenceCoeffs squared_recurrence(unsigned n, const Rat& alpha) {
  check_alpha(alpha);
  auto an = recurrence_coeffs(n, alpha);
  auto an1 = recurrence_coeffs(n + 1, alpha);
  SquaredRecurrenceCoeffs c{n, alpha, Rat(0), Rat(0), Rat(0)};
  c.a_tilde = an.a * an1.a;
  c.b_tilde = an.a * an1.g;
  if (n >= 1) {
    auto am1 = recurrence_coeffs(n - 1, alpha);
    c.b_tilde += an.g * am1.a;
    if (n >= 2) c.g_tilde = an.g * am1.g;
  }
  return c;
}

inline UPoly jacobi_poly(unsigned n, const Rat& alpha) {
  check_alpha(alpha);
  UPoly prev = UPoly::constant(Rat(1));
  if (n == 0) return prev;
  UPoly cur({Rat(0), alpha + 1});
  for (unsigned k = 1; k < n; ++k) {
    auto rc = recurrence_coeffs(k, alpha);
    UPoly next = Rat(1) / rc.a * (cur.shifted(1) - rc.g * prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// r_u with r_u(x^2) = P_{2u}^{(alpha,alpha)}(x).
inline UPoly even_substitution(unsigned u, const Rat& alpha) {
  UPoly p = jacobi_poly(2 * u, alpha);
  if (!p.is_even()) throw std::logic_error("even-degree jacobi polynomial has odd terms");
  return p.even_decompress();
}

struct ZeroBracket {
  Rat lower;
  Rat upper;
  bool certified = false;
};

// Certified bracket on the first positive zero of P_degree^{(alpha,alpha)}.
// All zeros lie in (-1, 1); a positive one exists for every degree >= 1
// except degree 1, whose only zero is 0.
inline ZeroBracket first_positive_zero(unsigned degree, const Rat& alpha,
                                       const Rat& width = Rat(Int(1), Int(1) << 64)) {
  if (degree == 0) throw std::domain_error("constant polynomial has no zeros");
  if (degree == 1) throw std::domain_error("P_1 vanishes only at the origin");
  UPoly p = jacobi_poly(degree, alpha);
  RootBracket b = first_positive_root(p, Rat(1), width);
  return {b.lo, b.hi, b.certified};
}

// Certified rational lower bound of pi / (4 sqrt((alpha+1/2+n)(n+2))),
// within 2^-bits of the true value.
inline Rat elbert_lower_bound(unsigned n, const Rat& alpha, unsigned bits = 96) {
  if (n < 3) throw std::domain_error("bound is stated for n >= 3");
  if (alpha < Rat(-1, 2)) throw std::domain_error("bound is stated for alpha >= -1/2");
  Rat q = (alpha + Rat(1, 2) + Int(n)) * Rat(Int(n) + 2);
  RatInterval root = sqrt_enclosure(q, bits);
  return pi_enclosure().lo / (4 * root.hi);
}

// Two-sided enclosure of the same bound, for direction-conscious checks.
inline RatInterval elbert_bound_enclosure(unsigned n, const Rat& alpha, unsigned bits = 96) {
  if (n < 3) throw std::domain_error("bound is stated for n >= 3");
  if (alpha < Rat(-1, 2)) throw std::domain_error("bound is stated for alpha >= -1/2");
  Rat q = (alpha + Rat(1, 2) + Int(n)) * Rat(Int(n) + 2);
  RatInterval root = sqrt_enclosure(q, bits);
  return {pi_enclosure().lo / (4 * root.hi), pi_enclosure().hi / (4 * root.lo)};
}

inline UPoly chebyshev_t(unsigned n) {
  UPoly prev = UPoly::constant(Rat(1));
  if (n == 0) return prev;
  UPoly cur = UPoly::x();
  for (unsigned k = 1; k < n; ++k) {
    UPoly next = Rat(2) * cur.shifted(1) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

struct ChebyshevAgreement {
  bool proportional;
  Rat scalar;  // jacobi = scalar * chebyshev
};

// P_{2n}^{(-1/2,-1/2)} is a scalar multiple of T_{2n}; the scalar is
// recovered from the leading coefficients and the identity checked exactly.
inline ChebyshevAgreement chebyshev_cross_check(unsigned n) {
  UPoly jac = jacobi_poly(2 * n, Rat(-1, 2));
  UPoly cheb = chebyshev_t(2 * n);
  Rat scalar = jac.leading() / cheb.leading();
  bool ok = (jac - scalar * cheb).is_zero();
  return {ok, ok ? scalar : Rat(0)};
}

// Certifies sin(pi/(4n)) >= pi/(4n+2) with exact enclosures.
inline bool sin_inequality_check(unsigned n, unsigned bits = 64) {
  if (n == 0) throw std::domain_error("n must be positive");
  const RatInterval& pi = pi_enclosure();
  Rat inv(Int(1), 4 * Int(n));
  // Outward rounding keeps the argument endpoints at small denominators so
  // the Taylor sums stay cheap across a large n sweep.
  Rat pad(Int(1), Int(1) << bits);
  Rat lo = round_to_bits(pi.lo * inv, bits) - pad;
  if (lo < 0) lo = Rat(0);
  RatInterval arg(lo, round_to_bits(pi.hi * inv, bits) + pad);
  RatInterval lhs = sin_enclosure(arg, bits);
  Rat rhs_hi = pi.hi / (4 * Int(n) + 2);
  return lhs.lo >= rhs_hi;
}

}  // namespace quadharm
