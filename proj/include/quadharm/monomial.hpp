#pragma once
// Exponent vectors with graded lexicographic order.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace quadharm {

// Exponent vector of a monomial x1^e1 ... xn^en. The dimension is the size
// of the vector; all monomials inside one polynomial share it.
struct Monomial {
  std::vector<std::uint32_t> e;

  Monomial() = default;
  explicit Monomial(std::size_t dim) : e(dim, 0) {}
  Monomial(std::initializer_list<std::uint32_t> init) : e(init) {}

  std::size_t dim() const { return e.size(); }

  unsigned degree() const {
    unsigned d = 0;
    for (auto v : e) d += v;
    return d;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }

  // All exponents even, i.e. the sphere integral of the monomial can be
  // nonzero.
  bool all_even() const {
    return std::all_of(e.begin(), e.end(), [](std::uint32_t v) { return (v & 1u) == 0; });
  }

  // Parity signature: bit j set when the exponent of x_{j+1} is odd.
  std::uint64_t parity_mask() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] & 1u) m |= (std::uint64_t{1} << i);
    return m;
  }
};

// Graded lexicographic: compare total degree first, then exponent vectors
// lexicographically. Ascending under std::map, so rbegin() is the leading
// monomial.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

}  // namespace quadharm
