#pragma once
// Sparse multivariate polynomials over the rationals.
//
// Terms live in a std::map keyed by Monomial under graded lex, so the
// representation is canonical: equal polynomials compare equal term by term,
// zero coefficients are never stored, and rbegin() is the leading term.

#include "quadharm/monomial.hpp"
#include "quadharm/rational.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quadharm {

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexLess>;

  Polynomial() : dim_(0) {}
  explicit Polynomial(std::size_t dim) : dim_(dim) {}

  static Polynomial zero(std::size_t dim) { return Polynomial(dim); }

  static Polynomial constant(std::size_t dim, const Rat& c) {
    Polynomial p(dim);
    p.add_term(Monomial(dim), c);
    return p;
  }

  // x_j with 1-based index j.
  static Polynomial variable(std::size_t dim, std::size_t j) {
    if (j < 1 || j > dim) throw std::out_of_range("variable index");
    Polynomial p(dim);
    Monomial m(dim);
    m.e[j - 1] = 1;
    p.add_term(m, Rat(1));
    return p;
  }

  static Polynomial term(std::size_t dim, Monomial m, const Rat& c) {
    if (m.dim() != dim) throw std::invalid_argument("monomial dimension mismatch");
    Polynomial p(dim);
    p.add_term(std::move(m), c);
    return p;
  }

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Total degree; -1 for the zero polynomial.
  int degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.degree());
  }

  const Rat& coeff(const Monomial& m) const {
    static const Rat kZero(0);
    auto it = terms_.find(m);
    return it == terms_.end() ? kZero : it->second;
  }

  void add_term(Monomial m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool operator==(const Polynomial& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial& operator+=(const Polynomial& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, Rat(-c));
    return *this;
  }

  Polynomial& operator*=(const Rat& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }
  friend Polynomial operator*(const Rat& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rat(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_dim(b);
    Polynomial r(a.dim_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial acc = constant(dim_, Rat(1));
    Polynomial b = *this;
    while (e != 0) {
      if (e & 1u) acc = acc * b;
      b = b * b;
      e >>= 1u;
    }
    return acc;
  }

  // d/dx_j, 1-based j.
  Polynomial derivative(std::size_t j) const {
    if (j < 1 || j > dim_) throw std::out_of_range("derivative index");
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_) {
      std::uint32_t ej = m.e[j - 1];
      if (ej == 0) continue;
      Monomial n = m;
      n.e[j - 1] = ej - 1;
      r.add_term(std::move(n), c * ej);
    }
    return r;
  }

  Polynomial laplacian() const {
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_) {
      for (std::size_t j = 0; j < dim_; ++j) {
        std::uint32_t ej = m.e[j];
        if (ej < 2) continue;
        Monomial n = m;
        n.e[j] = ej - 2;
        r.add_term(std::move(n), c * ej * (ej - 1));
      }
    }
    return r;
  }

  // Sum of the terms of total degree exactly k.
  Polynomial homogeneous_component(unsigned k) const {
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == k) r.add_term(m, c);
    return r;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;
  }

  Rat evaluate(const std::vector<Rat>& x) const {
    if (x.size() != dim_) throw std::invalid_argument("evaluation point dimension mismatch");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
      Rat t = c;
      for (std::size_t j = 0; j < dim_; ++j)
        if (m.e[j] != 0) t *= pow_of(x[j], m.e[j]);
      acc += t;
    }
    return acc;
  }

  // Multiplies each term by (x1^2+...+xn^2)^k expanded, i.e. |x|^{2k} f.
  Polynomial radial_multiply(unsigned k) const {
    Polynomial r = *this;
    if (k == 0 || r.is_zero()) return r;
    Polynomial rad(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      Monomial m(dim_);
      m.e[j] = 2;
      rad.add_term(std::move(m), Rat(1));
    }
    return r * rad.pow(k);
  }

  // Renames variables: new variable i is old variable perm[i-1] (1-based).
  Polynomial permute_variables(const std::vector<std::size_t>& perm) const {
    if (perm.size() != dim_) throw std::invalid_argument("permutation size mismatch");
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_) {
      Monomial n(dim_);
      for (std::size_t i = 0; i < dim_; ++i) n.e[i] = m.e[perm[i] - 1];
      r.add_term(std::move(n), c);
    }
    return r;
  }

  // Substitutes x_j -> g_j for every variable at once. Used by tests and by
  // the boundary parametrisation; g.size() must equal dim() and all g_j must
  // share a common dimension.
  Polynomial substitute(const std::vector<Polynomial>& g) const {
    if (g.size() != dim_) throw std::invalid_argument("substitution arity mismatch");
    std::size_t target = g.empty() ? 0 : g[0].dim();
    for (const auto& gj : g)
      if (gj.dim() != target) throw std::invalid_argument("substitution dimension mismatch");
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(target, c);
      for (std::size_t j = 0; j < dim_; ++j)
        if (m.e[j] != 0) t = t * g[j].pow(m.e[j]);
      r += t;
    }
    return r;
  }

 private:
  void check_dim(const Polynomial& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("polynomial dimension mismatch");
  }

  std::size_t dim_;
  TermMap terms_;
};

// |x|^2 as a polynomial.
inline Polynomial radius_squared(std::size_t dim) {
  return Polynomial::constant(dim, Rat(1)).radial_multiply(1);
}

}  // namespace quadharm
