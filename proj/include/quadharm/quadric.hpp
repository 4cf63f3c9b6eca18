#pragma once
// Nonhyperbolic quadrics q = sum a_j^2 x_j^2 + sum b_j x_j + c: all square
// coefficients nonnegative, at least one positive. The square coefficients
// are taken directly as rationals a_j^2, so no roots are ever extracted.

#include "quadharm/polynomial.hpp"
#include "quadharm/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace quadharm {

struct QuadricError : std::invalid_argument {
  explicit QuadricError(const std::string& what) : std::invalid_argument(what) {}
};

class NonhyperbolicQuadric {
 public:
  NonhyperbolicQuadric(std::vector<Rat> squares, std::vector<Rat> linear, Rat constant)
      : squares_(std::move(squares)), linear_(std::move(linear)), constant_(std::move(constant)) {
    if (squares_.size() != linear_.size()) throw QuadricError("coefficient lengths differ");
    if (squares_.empty()) throw QuadricError("quadric needs at least one variable");
    bool any_positive = false;
    for (const auto& a : squares_) {
      if (a < 0) throw QuadricError("negative square coefficient: hyperbolic quadrics are excluded");
      if (a > 0) any_positive = true;
    }
    if (!any_positive)
      throw QuadricError("no square term: at least one coefficient a_j^2 must be positive");
  }

  static NonhyperbolicQuadric from_polynomial(const Polynomial& p) {
    if (p.degree() > 2) throw QuadricError("quadric expression has degree above 2");
    std::size_t d = p.dim();
    std::vector<Rat> squares(d, Rat(0)), linear(d, Rat(0));
    Rat constant(0);
    for (const auto& [m, c] : p.terms()) {
      unsigned deg = m.degree();
      if (deg == 0) {
        constant = c;
        continue;
      }
      std::size_t nonzeros = 0, j = 0;
      for (std::size_t i = 0; i < d; ++i)
        if (m.e[i] != 0) {
          ++nonzeros;
          j = i;
        }
      if (deg == 1) {
        linear[j] = c;
      } else if (nonzeros > 1) {
        throw QuadricError("cross term x_i*x_j: only pure squares are allowed");
      } else {
        squares[j] = c;
      }
    }
    return NonhyperbolicQuadric(std::move(squares), std::move(linear), std::move(constant));
  }

  std::size_t dim() const { return squares_.size(); }
  const std::vector<Rat>& squares() const { return squares_; }
  const std::vector<Rat>& linear() const { return linear_; }
  const Rat& constant() const { return constant_; }

  // 1 when the linear part is present, 0 otherwise.
  int beta() const {
    for (const auto& b : linear_)
      if (b != 0) return 1;
    return 0;
  }

  Polynomial quadratic_part() const {
    Polynomial p(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      if (squares_[j] == 0) continue;
      Monomial m(dim());
      m.e[j] = 2;
      p.add_term(std::move(m), squares_[j]);
    }
    return p;
  }

  Polynomial linear_part() const {
    Polynomial p(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      if (linear_[j] == 0) continue;
      Monomial m(dim());
      m.e[j] = 1;
      p.add_term(std::move(m), linear_[j]);
    }
    return p;
  }

  Polynomial polynomial() const {
    Polynomial p = quadratic_part() + linear_part();
    p += Polynomial::constant(dim(), constant_);
    return p;
  }

 private:
  std::vector<Rat> squares_;
  std::vector<Rat> linear_;
  Rat constant_;
};

// q = |x|^2 in d variables; drives the Gauss decomposition.
inline NonhyperbolicQuadric unit_sphere_form(std::size_t d) {
  return NonhyperbolicQuadric(std::vector<Rat>(d, Rat(1)), std::vector<Rat>(d, Rat(0)), Rat(0));
}

}  // namespace quadharm
