#pragma once
// Surface-measure integrals over the unit sphere S^{d-1}.
//
// The only integrals needed are moments of monomials:
//   int_{S^{d-1}} x^b dtheta = 2 * prod_j Gamma((b_j+1)/2) / Gamma((|b|+d)/2)
// when all b_j are even, and 0 otherwise. Gamma at half-integers is a
// rational multiple of sqrt(pi), so every moment is PiScaled-exact.

#include "quadharm/monomial.hpp"
#include "quadharm/pi_scaled.hpp"
#include "quadharm/polynomial.hpp"
#include "quadharm/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace quadharm {

// Gamma(m/2) for m >= 1 as coeff * pi^(sqrt_pi_power/2).
inline std::pair<Rat, int> gamma_half(unsigned m) {
  if (m == 0) throw std::domain_error("gamma pole");
  if (m % 2 == 0) return {Rat(factorial(m / 2 - 1)), 0};
  Rat r(double_factorial(static_cast<int>(m) - 2), Int(1) << ((m - 1) / 2));
  return {r, 1};
}

inline PiScaled monomial_sphere_integral(const Monomial& mono, std::size_t d) {
  if (d < 2) throw std::invalid_argument("sphere dimension must be at least 2");
  if (mono.dim() != d) throw std::invalid_argument("monomial dimension mismatch");
  if (!mono.all_even()) return PiScaled();
  Rat coeff(2);
  int te = 0;
  for (std::size_t j = 0; j < d; ++j) {
    auto [r, p] = gamma_half(mono.e[j] + 1);
    coeff *= r;
    te += p;
  }
  auto [rd, pd] = gamma_half(mono.degree() + static_cast<unsigned>(d));
  coeff /= rd;
  te -= pd;
  return PiScaled(coeff, te);
}

namespace detail {

// Shared by the inner-product loops below: moments with the pi power
// stripped (it is the same for every even monomial in a fixed dimension).
struct MomentCache {
  explicit MomentCache(std::size_t d) : d_(d) {}

  const Rat& coefficient(const Monomial& m) {
    auto it = cache_.find(m);
    if (it == cache_.end()) {
      PiScaled v = monomial_sphere_integral(m, d_);
      it = cache_.emplace(m, v.coefficient()).first;
    }
    return it->second;
  }

  std::size_t d_;
  std::map<Monomial, Rat, GrlexLess> cache_;
};

}  // namespace detail

// <f, g> on S^{d-1}. Terms are bucketed by exponent parity: a pair of
// monomials contributes only when parities match in every variable, which
// prunes the quadratic loop hard for the bases built downstream.
inline PiScaled inner_product(const Polynomial& f, const Polynomial& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("inner product dimension mismatch");
  std::size_t d = f.dim();
  if (d < 2) throw std::invalid_argument("sphere dimension must be at least 2");
  if (f.is_zero() || g.is_zero()) return PiScaled();

  std::map<std::uint64_t, std::vector<const std::pair<const Monomial, Rat>*>> buckets;
  for (const auto& term : g.terms()) buckets[term.first.parity_mask()].push_back(&term);

  detail::MomentCache moments(d);
  Rat acc(0);
  for (const auto& [mf, cf] : f.terms()) {
    auto it = buckets.find(mf.parity_mask());
    if (it == buckets.end()) continue;
    for (const auto* tg : it->second) acc += cf * tg->second * moments.coefficient(mf * tg->first);
  }
  if (acc == 0) return PiScaled();
  int te = static_cast<int>(d) - (d % 2 == 0 ? 0 : 1);
  return PiScaled(acc, te);
}

inline PiScaled norm_squared(const Polynomial& f) { return inner_product(f, f); }

// <weight*f, f> / <f, f>; the pi powers cancel, so the value is rational.
inline Rat rayleigh_quotient(const Polynomial& weight, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("rayleigh quotient of zero polynomial");
  PiScaled den = norm_squared(f);
  PiScaled num = inner_product(weight * f, f);
  return ratio(num, den);
}

}  // namespace quadharm
