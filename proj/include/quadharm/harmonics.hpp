#pragma once
// Orthogonal bases of homogeneous harmonic polynomials, built by induction
// on the dimension:
//   Y_{k,(s,l)}^d = Y_{s,l}^{d-1}(x_1..x_{d-1}) * |x|^{k-s} P_{k-s}^{(a_s,a_s)}(x_d/|x|),
//   a_s = s + (d-3)/2.
// The apparent |x| factors cancel because P_{k-s} has parity k-s, so every
// entry is a genuine polynomial. The induction starts at d=1 with {1, x_1},
// which keeps the same product form valid at every later level; with that
// floor the three-term coefficients of x_d^2 * Y match the squared Jacobi
// recurrence verbatim, which the block assembly below relies on.

#include "quadharm/jacobi.hpp"
#include "quadharm/monomial.hpp"
#include "quadharm/pi_scaled.hpp"
#include "quadharm/polynomial.hpp"
#include "quadharm/sphere.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace quadharm {

// dim H_k(R^d), the space of degree-k homogeneous harmonics.
inline Int harmonic_space_dim(unsigned d, unsigned k) {
  if (d == 0) return Int(0);
  if (d == 1) return k <= 1 ? Int(1) : Int(0);
  Int a = binomial(k + d - 1, d - 1);
  Int b = k >= 2 ? binomial(k - 2 + d - 1, d - 1) : Int(0);
  return a - b;
}

struct BasisIndex {
  unsigned k;  // degree
  unsigned s;  // degree of the (d-1)-dimensional factor
  unsigned l;  // 1-based position within that factor's degree-s family

  friend bool operator<(const BasisIndex& a, const BasisIndex& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.s != b.s) return a.s < b.s;
    return a.l < b.l;
  }
  friend bool operator==(const BasisIndex& a, const BasisIndex& b) {
    return a.k == b.k && a.s == b.s && a.l == b.l;
  }
};

struct BasisEntry {
  Polynomial y;
  PiScaled norm_sq;
};

inline Rat alpha_for(unsigned s, unsigned d) { return Rat(s) + Rat(int(d) - 3, 2); }

// Expands |x|^{k-s} P_{k-s}^{(a,a)}(x_d/|x|) as a polynomial in d variables.
inline Polynomial zonal_factor(unsigned k, unsigned s, unsigned d, const Rat& alpha) {
  UPoly p = jacobi_poly(k - s, alpha);
  Polynomial rad = radius_squared(d);
  Polynomial out(d);
  for (unsigned j = 0; j <= static_cast<unsigned>(p.degree()); ++j) {
    if (p.coeff(j) == 0) continue;
    unsigned rest = k - s - j;
    if (rest % 2 != 0) throw std::logic_error("jacobi factor parity violated");
    Monomial m(d);
    m.e[d - 1] = j;
    out += Polynomial::term(d, m, p.coeff(j)) * rad.pow(rest / 2);
  }
  return out;
}

inline Polynomial embed(const Polynomial& p, std::size_t dim) {
  if (dim < p.dim()) throw std::invalid_argument("cannot embed into fewer variables");
  Polynomial r(dim);
  for (const auto& [m, c] : p.terms()) {
    Monomial n(dim);
    for (std::size_t i = 0; i < m.dim(); ++i) n.e[i] = m.e[i];
    r.add_term(std::move(n), c);
  }
  return r;
}

class HarmonicBasis {
 public:
  static HarmonicBasis build(unsigned d, unsigned max_degree) {
    if (d < 2) throw std::invalid_argument("basis dimension must be at least 2");
    HarmonicBasis basis;
    basis.d_ = d;
    basis.max_degree_ = max_degree;

    // per-degree families at the current induction level
    std::vector<std::vector<Polynomial>> level(max_degree + 1);
    level[0].push_back(Polynomial::constant(1, Rat(1)));
    if (max_degree >= 1) level[1].push_back(Polynomial::variable(1, 1));

    for (unsigned dd = 2; dd <= d; ++dd) {
      std::vector<std::vector<Polynomial>> next(max_degree + 1);
      std::vector<std::vector<std::pair<unsigned, unsigned>>> labels(max_degree + 1);
      for (unsigned k = 0; k <= max_degree; ++k) {
        for (unsigned s = 0; s <= k; ++s) {
          if (level[s].empty()) continue;
          Polynomial factor = zonal_factor(k, s, dd, alpha_for(s, dd));
          for (unsigned l = 1; l <= level[s].size(); ++l) {
            Polynomial y = embed(level[s][l - 1], dd) * factor;
            if (!y.laplacian().is_zero())
              throw std::logic_error("constructed basis entry is not harmonic");
            next[k].push_back(std::move(y));
            labels[k].push_back({s, l});
          }
        }
      }
      if (dd == d) {
        for (unsigned k = 0; k <= max_degree; ++k)
          for (std::size_t i = 0; i < next[k].size(); ++i) {
            auto [s, l] = labels[k][i];
            PiScaled nsq = norm_squared(next[k][i]);
            if (nsq.sign() <= 0) throw std::logic_error("basis entry with nonpositive norm");
            basis.entries_.emplace(BasisIndex{k, s, l},
                                   BasisEntry{std::move(next[k][i]), std::move(nsq)});
          }
      }
      level = std::move(next);
    }
    return basis;
  }

  unsigned dimension() const { return d_; }
  unsigned max_degree() const { return max_degree_; }
  const std::map<BasisIndex, BasisEntry>& entries() const { return entries_; }

  const BasisEntry& at(const BasisIndex& idx) const {
    auto it = entries_.find(idx);
    if (it == entries_.end()) throw std::out_of_range("basis index not present");
    return it->second;
  }
  const BasisEntry& at(unsigned k, unsigned s, unsigned l) const { return at(BasisIndex{k, s, l}); }
  bool has(unsigned k, unsigned s, unsigned l) const {
    return entries_.count(BasisIndex{k, s, l}) != 0;
  }

  std::size_t count_at_degree(unsigned k) const {
    std::size_t n = 0;
    for (const auto& [idx, e] : entries_)
      if (idx.k == k) ++n;
    return n;
  }

  // Number of (d-1)-level labels at factor degree s, i.e. the range of l.
  std::size_t family_size(unsigned k, unsigned s) const {
    std::size_t n = 0;
    for (const auto& [idx, e] : entries_)
      if (idx.k == k && idx.s == s) ++n;
    return n;
  }

 private:
  unsigned d_ = 0;
  unsigned max_degree_ = 0;
  std::map<BasisIndex, BasisEntry> entries_;
};

}  // namespace quadharm
