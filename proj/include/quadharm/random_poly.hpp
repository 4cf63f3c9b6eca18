#pragma once
// Seeded random polynomials for property checks. mt19937_64 output is
// specified bit-for-bit by the standard; the mapping to ranges below avoids
// std::uniform_int_distribution, whose results differ across standard
// libraries, so a seed reproduces the same polynomials everywhere.

#include "quadharm/monomial.hpp"
#include "quadharm/polynomial.hpp"
#include "quadharm/rational.hpp"

#include <cstdint>
#include <random>

namespace quadharm {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  // Uniform integer in [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Nonzero integer with |value| <= bound.
  Rat coefficient(long bound) {
    long v = range(1, bound);
    return below(2) == 0 ? Rat(v) : Rat(-v);
  }

 private:
  std::mt19937_64 eng_;
};

inline Monomial random_monomial(SeededRng& rng, unsigned d, unsigned degree) {
  Monomial m(d);
  unsigned remaining = degree;
  for (unsigned j = 0; j + 1 < d; ++j) {
    unsigned e = static_cast<unsigned>(rng.below(remaining + 1));
    m.e[j] = e;
    remaining -= e;
  }
  m.e[d - 1] = remaining;
  return m;
}

inline Polynomial random_homogeneous(SeededRng& rng, unsigned d, unsigned degree,
                                     std::size_t terms = 6, long coeff_bound = 9) {
  Polynomial p(d);
  while (p.is_zero()) {
    for (std::size_t t = 0; t < terms; ++t)
      p.add_term(random_monomial(rng, d, degree), rng.coefficient(coeff_bound));
  }
  return p;
}

inline Polynomial random_polynomial(SeededRng& rng, unsigned d, unsigned max_degree,
                                    std::size_t terms = 10, long coeff_bound = 9) {
  Polynomial p(d);
  while (p.is_zero()) {
    for (std::size_t t = 0; t < terms; ++t) {
      unsigned deg = static_cast<unsigned>(rng.below(max_degree + 1));
      p.add_term(random_monomial(rng, d, deg), rng.coefficient(coeff_bound));
    }
  }
  return p;
}

}  // namespace quadharm
