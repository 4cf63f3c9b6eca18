#pragma once
// Exact decomposition f = q*s + r with harmonic r for a nonhyperbolic
// quadric q, and the solvers built on it.
//
// The unknown s is found degree by degree from the top. Writing q = P2 +
// P1 + P0 and s = sum of homogeneous parts S_j, the equation D(q*s) = D(f)
// (D = Laplacian) splits by degree into
//   D(P2 * S_j) = (Df)_j - D(P1 * S_{j+1}) - P0 * D(S_{j+2}),
// and D(P2 * .) maps degree-j polynomials to degree-j polynomials, so each
// step is one exact linear solve. Moving a monomial by +2e_i - 2e_t keeps
// every exponent parity, so the map is block-diagonal over the parity
// classes of the exponent vector; each class is solved independently and
// classes with a zero right-hand side are skipped outright.

#include "quadharm/enclosures.hpp"
#include "quadharm/linsolve.hpp"
#include "quadharm/monomial.hpp"
#include "quadharm/polynomial.hpp"
#include "quadharm/quadric.hpp"
#include "quadharm/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace quadharm {

namespace detail {

inline void list_monomials_rec(unsigned d, unsigned degree, std::size_t slot, Monomial& work,
                               std::vector<Monomial>& out) {
  if (slot + 1 == d) {
    work.e[slot] = degree;
    out.push_back(work);
    return;
  }
  for (unsigned e = 0; e <= degree; ++e) {
    work.e[slot] = e;
    list_monomials_rec(d, degree - e, slot + 1, work, out);
  }
}

// Degree-homogeneous monomials in lexicographically ascending order,
// matching the graded-lex order restricted to one degree.
inline std::vector<Monomial> list_monomials(unsigned d, unsigned degree) {
  std::vector<Monomial> out;
  Monomial work(d);
  list_monomials_rec(d, degree, 0, work, out);
  return out;
}

// One parity class of the degree-j Fischer system.
inline Polynomial solve_fischer_class(const std::vector<Rat>& squares,
                                      const std::vector<Monomial>& monos,
                                      const std::vector<Rat>& rhs_vec) {
  const std::size_t n = monos.size();
  const std::size_t d = squares.size();
  std::map<Monomial, std::size_t, GrlexLess> position;
  for (std::size_t i = 0; i < n; ++i) position.emplace(monos[i], i);

  std::vector<std::vector<Rat>> mat(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t col = 0; col < n; ++col) {
    const Monomial& g = monos[col];
    Rat diag(0);
    for (std::size_t i = 0; i < d; ++i) {
      if (squares[i] == 0) continue;
      diag += squares[i] * Int(g.e[i] + 2) * Int(g.e[i] + 1);
      for (std::size_t t = 0; t < d; ++t) {
        if (t == i || g.e[t] < 2) continue;
        Monomial target = g;
        target.e[i] += 2;
        target.e[t] -= 2;
        mat[position.at(target)][col] += squares[i] * Int(g.e[t]) * Int(g.e[t] - 1);
      }
    }
    mat[col][col] += diag;
  }

  std::vector<Rat> x = solve_exact(mat, rhs_vec);
  Polynomial p(d);
  for (std::size_t i = 0; i < n; ++i) p.add_term(monos[i], x[i]);
  return p;
}

// Solves D(P2 * S) = rhs on homogeneous degree j.
inline Polynomial solve_fischer_degree(const std::vector<Rat>& squares, unsigned degree,
                                       const Polynomial& rhs) {
  const unsigned d = static_cast<unsigned>(squares.size());
  if (rhs.is_zero()) return Polynomial::zero(d);

  std::vector<Monomial> all = list_monomials(d, degree);
  std::map<std::uint64_t, std::vector<Monomial>> classes;
  for (const auto& m : all) classes[m.parity_mask()].push_back(m);

  Polynomial out(d);
  for (const auto& [mask, monos] : classes) {
    std::vector<Rat> rhs_vec(monos.size(), Rat(0));
    bool any = false;
    for (std::size_t i = 0; i < monos.size(); ++i) {
      const Rat& c = rhs.coeff(monos[i]);
      if (c != 0) {
        rhs_vec[i] = c;
        any = true;
      }
    }
    if (!any) continue;
    out += solve_fischer_class(squares, monos, rhs_vec);
  }
  return out;
}

}  // namespace detail

struct FischerResult {
  Polynomial s;
  Polynomial r;
  bool residual_is_zero = false;
};

inline FischerResult fischer_decompose(const Polynomial& f, const NonhyperbolicQuadric& q) {
  if (f.dim() != q.dim()) throw std::invalid_argument("data and quadric dimensions differ");
  const unsigned d = static_cast<unsigned>(q.dim());
  const int deg = f.degree();
  FischerResult out;
  if (deg < 2) {
    out.s = Polynomial::zero(d);
    out.r = f;
    out.residual_is_zero = true;
    return out;
  }

  const Polynomial df = f.laplacian();
  const Polynomial p1 = q.linear_part();
  const Rat& p0 = q.constant();
  const unsigned top = static_cast<unsigned>(deg) - 2;
  std::vector<Polynomial> parts(top + 1, Polynomial::zero(d));

  for (unsigned j = top + 1; j-- > 0;) {
    Polynomial rhs = df.homogeneous_component(j);
    if (!p1.is_zero() && j + 1 <= top) rhs -= (p1 * parts[j + 1]).laplacian();
    if (p0 != 0 && j + 2 <= top) rhs -= p0 * parts[j + 2].laplacian();
    parts[j] = detail::solve_fischer_degree(q.squares(), j, rhs);
  }

  Polynomial s(d);
  for (auto& part : parts) s += part;
  out.s = std::move(s);
  out.r = f - q.polynomial() * out.s;
  out.residual_is_zero = out.r.laplacian().is_zero();
  if (!out.residual_is_zero)
    throw SingularSystem("solved system left a non-harmonic remainder");
  return out;
}

inline Polynomial dirichlet_solve(const Polynomial& f, const NonhyperbolicQuadric& q) {
  return fischer_decompose(f, q).r;
}

struct GaussResult {
  unsigned degree = 0;              // degree of the decomposed polynomial
  std::vector<Polynomial> parts;    // harmonic parts, degrees degree%2, +2, ..., degree

  Polynomial reconstruct(unsigned d) const {
    Polynomial acc(d);
    unsigned base = degree % 2;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      unsigned deg_i = base + 2 * static_cast<unsigned>(i);
      acc += parts[i].radial_multiply((degree - deg_i) / 2);
    }
    return acc;
  }
};

// f homogeneous = sum |x|^(deg f - deg h) h over harmonic h, by repeatedly
// splitting off the top harmonic part with q = |x|^2.
inline GaussResult gauss_decompose(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot decompose the zero polynomial");
  if (!f.is_homogeneous()) throw std::invalid_argument("input must be homogeneous");
  const unsigned d = static_cast<unsigned>(f.dim());
  const unsigned n = static_cast<unsigned>(f.degree());
  NonhyperbolicQuadric sphere = unit_sphere_form(d);

  GaussResult out;
  out.degree = n;
  out.parts.assign(n / 2 + 1, Polynomial::zero(d));
  Polynomial cur = f;
  for (unsigned deg = n;; deg -= 2) {
    if (cur.is_zero()) break;
    FischerResult step = fischer_decompose(cur, sphere);
    out.parts[(deg - n % 2) / 2] = step.r;
    cur = step.s;
    if (deg < 2) break;
  }
  return out;
}

struct SeriesData {
  std::vector<Polynomial> parts;  // parts[i] homogeneous of degree i (possibly zero)
  unsigned truncation = 0;
  bool rho_declared = false;
  Rat rho;

  static SeriesData from_polynomial(const Polynomial& f, unsigned truncation,
                                    std::optional<Rat> declared_rho = std::nullopt) {
    SeriesData out;
    out.truncation = truncation;
    out.parts.reserve(truncation + 1);
    for (unsigned i = 0; i <= truncation; ++i) out.parts.push_back(f.homogeneous_component(i));
    if (declared_rho) {
      out.rho_declared = true;
      out.rho = *declared_rho;
    }
    return out;
  }

  Polynomial combined(unsigned d) const {
    Polynomial acc(d);
    for (const auto& p : parts) acc += p;
    return acc;
  }
};

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

struct SeriesDiagnostics {
  int beta = 0;
  bool rho_declared = false;
  Rat rho;
  bool admissible = false;        // rho < (2 - beta)/2, meaningful when declared
  std::vector<Rat> r_degree_norms;  // l1 coefficient norms per degree
  std::vector<Rat> s_degree_norms;
  double order_proxy = 0.0;       // sup_k k log k / -log(norm_k), crude growth gauge
};

struct SeriesSolveResult {
  SeriesData r;
  SeriesDiagnostics diagnostics;
  FischerResult full;
};

namespace detail {

inline std::vector<Rat> degree_l1_norms(const Polynomial& p, unsigned up_to) {
  std::vector<Rat> norms(up_to + 1, Rat(0));
  for (const auto& [m, c] : p.terms()) {
    unsigned deg = m.degree();
    if (deg <= up_to) norms[deg] += abs_of(c);
  }
  return norms;
}

inline double order_proxy_from(const std::vector<Rat>& norms) {
  double best = 0.0;
  for (std::size_t k = 2; k < norms.size(); ++k) {
    if (norms[k] <= 0 || norms[k] >= 1) continue;
    double denom = -std::log(to_double(norms[k]));
    double v = static_cast<double>(k) * std::log(static_cast<double>(k)) / denom;
    if (v > best) best = v;
  }
  return best;
}

}  // namespace detail

inline SeriesSolveResult dirichlet_solve_series(const SeriesData& data,
                                                const NonhyperbolicQuadric& q) {
  const unsigned d = static_cast<unsigned>(q.dim());
  Polynomial f = data.combined(d);
  SeriesSolveResult out;
  out.full = fischer_decompose(f, q);

  out.r.truncation = data.truncation;
  out.r.rho_declared = data.rho_declared;
  out.r.rho = data.rho;
  for (unsigned i = 0; i <= data.truncation; ++i)
    out.r.parts.push_back(out.full.r.homogeneous_component(i));

  SeriesDiagnostics& diag = out.diagnostics;
  diag.beta = q.beta();
  diag.rho_declared = data.rho_declared;
  diag.rho = data.rho;
  diag.admissible = data.rho_declared && data.rho < Rat(2 - diag.beta, 2);
  diag.r_degree_norms = detail::degree_l1_norms(out.full.r, data.truncation);
  diag.s_degree_norms = detail::degree_l1_norms(out.full.s, data.truncation);
  diag.order_proxy = detail::order_proxy_from(diag.r_degree_norms);
  return out;
}

struct BoundaryResidual {
  Rat max_abs;        // certified upper bound of max |f - r| over the sample
  unsigned points = 0;
  unsigned requested = 0;
};

namespace detail {

// Collapses g to a univariate polynomial in x_pivot by substituting the
// exact values of every other coordinate. Keeps per-point evaluation down
// to one short Horner pass over the remaining variable.
inline std::vector<Rat> collapse_to_pivot(const Polynomial& g, const std::vector<Rat>& point,
                                          std::size_t pivot) {
  const std::size_t d = g.dim();
  std::vector<unsigned> top(d, 0);
  for (const auto& [m, c] : g.terms())
    for (std::size_t t = 0; t < d; ++t) top[t] = std::max(top[t], m.e[t]);

  std::vector<std::vector<Rat>> pw(d);
  for (std::size_t t = 0; t < d; ++t) {
    if (t == pivot) continue;
    pw[t].assign(top[t] + 1, Rat(1));
    for (unsigned e = 1; e <= top[t]; ++e) pw[t][e] = pw[t][e - 1] * point[t];
  }

  std::vector<Rat> coeffs(top[pivot] + 1, Rat(0));
  for (const auto& [m, c] : g.terms()) {
    Rat v = c;
    for (std::size_t t = 0; t < d; ++t)
      if (t != pivot && m.e[t] > 0) v *= pw[t][m.e[t]];
    coeffs[m.e[pivot]] += v;
  }
  return coeffs;
}

inline Rat horner_exact(const std::vector<Rat>& coeffs, const Rat& x) {
  Rat acc(0);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

inline RatInterval horner_interval(const std::vector<Rat>& coeffs, const RatInterval& x) {
  RatInterval acc = RatInterval::point(Rat(0));
  for (std::size_t i = coeffs.size(); i-- > 0;)
    acc = acc * x + RatInterval::point(coeffs[i]);
  return acc;
}

// splitmix64 finalizer; decorrelates the grid coordinates so that joint
// constraints (all small, as a bounded surface needs) still get hit.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace detail

// Samples the surface {q = 0} by fixing all coordinates except one with a
// positive square coefficient on a deterministic rational grid and solving
// the remaining univariate quadratic. Rational roots give exact residuals;
// irrational ones are evaluated over a sqrt enclosure at `bits` bits.
inline BoundaryResidual boundary_residual(const Polynomial& f, const Polynomial& r,
                                          const NonhyperbolicQuadric& q, unsigned samples,
                                          unsigned bits) {
  if (f.dim() != q.dim() || r.dim() != q.dim())
    throw std::invalid_argument("dimension mismatch");
  const std::size_t d = q.dim();
  std::size_t pivot = d;
  for (std::size_t j = 0; j < d; ++j)
    if (q.squares()[j] > 0) {
      pivot = j;
      break;
    }

  Polynomial g = f - r;
  BoundaryResidual out;
  out.requested = samples;

  const Rat& A = q.squares()[pivot];
  const Rat& B = q.linear()[pivot];
  for (std::uint64_t n = 0; out.points < samples && n < 200ull * samples + 400; ++n) {
    std::vector<Rat> point(d, Rat(0));
    Rat rest = q.constant();
    for (std::size_t t = 0; t < d; ++t) {
      if (t == pivot) continue;
      long num = static_cast<long>(detail::mix64(n * 131ull + t) % 39ull) - 19;
      point[t] = Rat(num, 16);
      rest += q.squares()[t] * point[t] * point[t] + q.linear()[t] * point[t];
    }
    Rat disc = B * B - 4 * A * rest;
    if (disc < 0) continue;
    bool plus = (n % 2 == 0);

    Int root_num, root_den;
    bool exact = is_perfect_square(numerator(disc), root_num) &&
                 is_perfect_square(denominator(disc), root_den);
    std::vector<Rat> coeffs = detail::collapse_to_pivot(g, point, pivot);
    if (exact) {
      Rat sq(root_num, root_den);
      Rat root = (plus ? Rat(-B + sq) : Rat(-B - sq)) / (2 * A);
      Rat value = abs_of(detail::horner_exact(coeffs, root));
      if (value > out.max_abs) out.max_abs = value;
    } else {
      RatInterval sq = sqrt_enclosure(disc, bits);
      RatInterval root = plus ? RatInterval(-B + sq.lo, -B + sq.hi)
                              : RatInterval(-B - sq.hi, -B - sq.lo);
      root = Rat(1) / (2 * A) * root;
      Rat value = detail::horner_interval(coeffs, root).magnitude();
      if (value > out.max_abs) out.max_abs = value;
    }
    ++out.points;
  }
  return out;
}

}  // namespace quadharm
