#pragma once
// Certified rational enclosures for the few irrational quantities the
// library ever compares against: pi, square roots, sine and cosine at
// rational points. Every bracket is a pair of exact rationals produced by
// integer arithmetic (Machin series, integer sqrt, alternating Taylor
// partial sums), so inequality checks never depend on rounding mode.

#include "quadharm/polynomial.hpp"
#include "quadharm/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace quadharm {

struct RatInterval {
  Rat lo;
  Rat hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("inverted interval");
  }
  static RatInterval point(const Rat& v) { return RatInterval(v, v); }

  Rat width() const { return hi - lo; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
  }
  friend RatInterval operator*(const Rat& c, const RatInterval& a) {
    return c >= 0 ? RatInterval(c * a.lo, c * a.hi) : RatInterval(c * a.hi, c * a.lo);
  }

  RatInterval pow(unsigned n) const {
    if (n == 0) return point(Rat(1));
    Rat pl = pow_of(lo, n), ph = pow_of(hi, n);
    if (lo >= 0) return {pl, ph};
    if (hi <= 0) return (n % 2 == 0) ? RatInterval(ph, pl) : RatInterval(pl, ph);
    if (n % 2 == 1) return {pl, ph};
    return {Rat(0), std::max(pl, ph)};
  }

  // Largest absolute value attained on the interval.
  Rat magnitude() const { return std::max(abs_of(lo), abs_of(hi)); }
};

inline Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

// True when n is a perfect square; writes the root.
inline bool is_perfect_square(const Int& n, Int& root) {
  if (n < 0) return false;
  root = isqrt_floor(n);
  return root * root == n;
}

// sqrt(x) bracketed to absolute width <= 2^-bits, exact endpoints.
inline RatInterval sqrt_enclosure(const Rat& x, unsigned bits) {
  if (x < 0) throw std::domain_error("sqrt of negative");
  if (x == 0) return RatInterval::point(Rat(0));
  Int n = numerator(x), d = denominator(x);
  Int two_k = Int(1) << bits;
  Int s = isqrt_floor(n * d * two_k * two_k);
  Int denom = d * two_k;
  Rat lo(s, denom), hi(s + 1, denom);
  if (lo * lo == x) return RatInterval::point(lo);
  return {lo, hi};
}

namespace detail {

// Alternating series for arctan(1/x), integer x >= 2: partial sum plus a
// first-omitted-term error bar.
inline RatInterval arctan_inverse(unsigned x, unsigned target_bits) {
  Rat sum(0);
  Rat xsq = Rat(1, Int(x) * Int(x));
  Rat power(1, x);
  Rat tail_bound = Rat(1, Int(1) << (target_bits + 4));
  unsigned k = 0;
  while (true) {
    Rat term = power / (2 * k + 1);
    if (term < tail_bound) return {sum - term, sum + term};
    sum += (k % 2 == 0) ? term : Rat(-term);
    power *= xsq;
    ++k;
  }
}

}  // namespace detail

// Shared bracket of pi, width well below 2^-256 (Machin's formula).
inline const RatInterval& pi_enclosure() {
  static const RatInterval pi = [] {
    RatInterval a = detail::arctan_inverse(5, 300);
    RatInterval b = detail::arctan_inverse(239, 300);
    return Rat(16) * a - Rat(4) * b;
  }();
  return pi;
}

namespace detail {

// Alternating Taylor partial sums of sin (odd=true) or cos at a rational
// point, |t| <= 2. Terms decrease from the start on that range, so
// consecutive partial sums bracket the value.
inline RatInterval taylor_trig(const Rat& t, bool odd, unsigned target_bits) {
  Rat tsq = t * t;
  Rat term = odd ? t : Rat(1);
  unsigned n = odd ? 1 : 0;
  Rat sum(0);
  Rat tail_bound = Rat(1, Int(1) << (target_bits + 4));
  unsigned k = 0;
  while (true) {
    Rat mag = abs_of(term);
    if (mag < tail_bound && k >= 2) return {sum - mag, sum + mag};
    sum += (k % 2 == 0) ? term : Rat(-term);
    term = term * tsq / Rat(Int(n + 1) * Int(n + 2));
    term = abs_of(term);
    n += 2;
    ++k;
  }
}

}  // namespace detail

// sin over a rational interval inside [0, pi/2], where it is increasing.
inline RatInterval sin_enclosure(const RatInterval& x, unsigned bits) {
  if (x.lo < 0 || x.hi > 2) throw std::domain_error("sin enclosure domain");
  RatInterval at_lo = detail::taylor_trig(x.lo, true, bits);
  RatInterval at_hi = detail::taylor_trig(x.hi, true, bits);
  return {at_lo.lo, at_hi.hi};
}

// cos over a rational interval inside [0, pi/2], where it is decreasing.
inline RatInterval cos_enclosure(const RatInterval& x, unsigned bits) {
  if (x.lo < 0 || x.hi > 2) throw std::domain_error("cos enclosure domain");
  RatInterval at_lo = detail::taylor_trig(x.lo, false, bits);
  RatInterval at_hi = detail::taylor_trig(x.hi, false, bits);
  return {at_hi.lo, at_lo.hi};
}

// Round to `bits` significant bits, ties to even. The result is dyadic.
inline Rat round_to_bits(const Rat& x, unsigned bits) {
  if (x == 0 || bits == 0) return Rat(0);
  Int n = numerator(x), d = denominator(x);
  Int an = n < 0 ? Int(-n) : n;
  long e = static_cast<long>(boost::multiprecision::msb(an)) -
           static_cast<long>(boost::multiprecision::msb(d));
  for (int attempt = 0; attempt < 4; ++attempt) {
    long shift = static_cast<long>(bits) - 1 - e;
    Rat scaled = shift >= 0 ? Rat(x * (Int(1) << shift)) : Rat(x / (Int(1) << (-shift)));
    Int q = floor_of(scaled);
    Rat frac = scaled - q;
    Int m = q;
    if (frac > Rat(1, 2) || (frac == Rat(1, 2) && (q % 2 != 0))) ++m;
    Int am = m < 0 ? Int(-m) : m;
    if (am == 0) return Rat(0);
    long got = static_cast<long>(boost::multiprecision::msb(am)) + 1;
    if (got > static_cast<long>(bits)) {
      ++e;
      continue;
    }
    if (got < static_cast<long>(bits) && am != (Int(1) << (got - 1))) {
      --e;
      continue;
    }
    return shift >= 0 ? Rat(m, Int(1) << shift) : Rat(m * (Int(1) << (-shift)));
  }
  throw std::logic_error("rounding failed to settle");
}

// Exact evaluation followed by one correct rounding to `bits` bits.
inline Rat evaluate_rounded(const Polynomial& p, const std::vector<Rat>& point, unsigned bits) {
  return round_to_bits(p.evaluate(point), bits);
}

inline RatInterval evaluate_interval(const Polynomial& p, const std::vector<RatInterval>& point) {
  if (point.size() != p.dim()) throw std::invalid_argument("evaluation point dimension mismatch");
  RatInterval acc = RatInterval::point(Rat(0));
  for (const auto& [m, c] : p.terms()) {
    RatInterval t = RatInterval::point(c);
    for (std::size_t j = 0; j < p.dim(); ++j)
      if (m.e[j] != 0) t = t * point[j].pow(m.e[j]);
    acc = acc + t;
  }
  return acc;
}

}  // namespace quadharm
