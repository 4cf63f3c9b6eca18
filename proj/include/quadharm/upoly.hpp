#pragma once
// Dense univariate polynomials over the rationals, Sturm chains over the
// integers, and certified isolation of the smallest positive root.
//
// All sign decisions are exact: chain members are primitive integer
// polynomials and evaluation at p/q is done with the homogenized Horner
// scheme sum c_k p^k q^(n-k), so no rounding can flip a sign.

#include "quadharm/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace quadharm {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static UPoly zero() { return UPoly(); }
  static UPoly constant(const Rat& v) { return UPoly({v}); }
  static UPoly x() { return UPoly({Rat(0), Rat(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const Rat& coeff(std::size_t k) const {
    static const Rat kZero(0);
    return k < c_.size() ? c_[k] : kZero;
  }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return c_ != o.c_; }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const Rat& s, const UPoly& a) {
    if (s == 0) return UPoly();
    std::vector<Rat> r = a.c_;
    for (auto& v : r) v *= s;
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a) { return Rat(-1) * a; }

  // Multiplication by x^k.
  UPoly shifted(std::size_t k) const {
    if (is_zero()) return UPoly();
    std::vector<Rat> r(c_.size() + k, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return UPoly(std::move(r));
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(i);
    return UPoly(std::move(r));
  }

  bool is_even() const {
    for (std::size_t i = 1; i < c_.size(); i += 2)
      if (c_[i] != 0) return false;
    return true;
  }
  bool is_odd() const {
    for (std::size_t i = 0; i < c_.size(); i += 2)
      if (c_[i] != 0) return false;
    return true;
  }

  // For an even polynomial p, the q with q(x^2) = p(x).
  UPoly even_decompress() const {
    if (!is_even()) throw std::logic_error("polynomial has odd terms");
    std::vector<Rat> r((c_.size() + 1) / 2, Rat(0));
    for (std::size_t i = 0; i < c_.size(); i += 2) r[i / 2] = c_[i];
    return UPoly(std::move(r));
  }

  // q(y) -> q(x^2).
  UPoly square_compose() const {
    std::vector<Rat> r(c_.empty() ? 0 : 2 * c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
    return UPoly(std::move(r));
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rat> c_;
};

// Euclidean division over the rationals; returns the remainder.
inline UPoly upoly_rem(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rat> r(a.coeffs());
  int db = b.degree();
  const Rat& lead = b.leading();
  while (static_cast<int>(r.size()) - 1 >= db) {
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (static_cast<int>(r.size()) - 1 < db) break;
    Rat factor = r.back() / lead;
    std::size_t shift = r.size() - 1 - db;
    for (int i = 0; i <= db; ++i) r[shift + i] -= factor * b.coeff(i);
    r.pop_back();
  }
  return UPoly(std::move(r));
}

inline UPoly upoly_quot(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rat> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, Rat(0));
  std::vector<Rat> r(a.coeffs());
  int db = b.degree();
  const Rat& lead = b.leading();
  while (true) {
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (static_cast<int>(r.size()) - 1 < db) break;
    Rat factor = r.back() / lead;
    std::size_t shift = r.size() - 1 - db;
    q[shift] = factor;
    for (int i = 0; i <= db; ++i) r[shift + i] -= factor * b.coeff(i);
    r.pop_back();
  }
  return UPoly(std::move(q));
}

// Integer polynomial, ascending coefficients, content 1, positive leader.
using IPoly = std::vector<Int>;

inline IPoly primitive_integer(const UPoly& p) {
  if (p.is_zero()) return {};
  Int common_den(1);
  for (const auto& c : p.coeffs()) common_den = boost::multiprecision::lcm(common_den, denominator(c));
  std::vector<Int> w;
  w.reserve(p.coeffs().size());
  Int content(0);
  for (const auto& c : p.coeffs()) {
    Int v = numerator(c) * (common_den / denominator(c));
    content = boost::multiprecision::gcd(content, v);
    w.push_back(std::move(v));
  }
  if (content == 0) return {};
  if (w.back() < 0) content = -content;
  for (auto& v : w) v /= content;
  return w;
}

inline UPoly from_integer(const IPoly& p) {
  std::vector<Rat> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return UPoly(std::move(c));
}

// Sign of p(a/b) via sum c_k a^k b^(n-k); exact for any rational point.
inline int sign_at(const IPoly& p, const Rat& x) {
  if (p.empty()) return 0;
  const Int a = numerator(x), b = denominator(x);
  Int acc = p.back();
  for (std::size_t i = p.size() - 1; i-- > 0;) acc = acc * a + p[i] * pow_of(b, static_cast<unsigned>(p.size() - 1 - i));
  return acc.sign();
}

inline UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = upoly_rem(a, b);
    a = std::move(b);
    b = from_integer(primitive_integer(r));
  }
  if (a.is_zero()) return a;
  return Rat(1) / a.leading() * a;
}

inline UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 1) return p;
  UPoly g = upoly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return upoly_quot(p, g);
}

// Sturm chain of a squarefree polynomial, each member primitivized (positive
// scaling only, which preserves the sign-variation count).
inline std::vector<IPoly> sturm_chain(const UPoly& p) {
  std::vector<IPoly> chain;
  UPoly a = p, b = p.derivative();
  chain.push_back(primitive_integer(a));
  while (!b.is_zero()) {
    chain.push_back(primitive_integer(b));
    UPoly r = -upoly_rem(a, b);
    a = std::move(b);
    b = from_integer(primitive_integer(r));
  }
  return chain;
}

inline int sign_variations_at(const std::vector<IPoly>& chain, const Rat& x) {
  int count = 0, prev = 0;
  for (const auto& member : chain) {
    int s = sign_at(member, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

struct RootBracket {
  Rat lo;
  Rat hi;
  bool certified = false;
};

// Certified bracket around the smallest root of p in (0, upper], final width
// <= width, with exactly one root inside and opposite exact signs at the
// endpoints. Throws if p has no root there.
inline RootBracket first_positive_root(const UPoly& p, const Rat& upper, const Rat& width) {
  if (width <= 0) throw std::invalid_argument("bracket width must be positive");
  if (p.degree() < 1) throw std::domain_error("root isolation needs degree >= 1");
  UPoly q = squarefree_part(p);
  // Strip the root at 0 so that variation counts anchored at 0 are valid.
  std::size_t low = 0;
  while (low < q.coeffs().size() && q.coeff(low) == 0) ++low;
  if (low > 0) {
    std::vector<Rat> c(q.coeffs().begin() + low, q.coeffs().end());
    q = UPoly(std::move(c));
  }
  if (q.degree() < 1) throw std::domain_error("no positive roots");

  IPoly qi = primitive_integer(q);
  Rat ub = upper;
  for (int tries = 0; sign_at(qi, ub) == 0; ++tries) {
    if (tries > 40) throw std::logic_error("could not find a sign-definite upper endpoint");
    ub += Rat(1, 7);
  }
  std::vector<IPoly> chain = sturm_chain(q);
  int v0 = sign_variations_at(chain, Rat(0));
  int vub = sign_variations_at(chain, ub);
  if (v0 - vub <= 0) throw std::domain_error("no root in the requested interval");

  Rat lo(0), hi = ub;
  int vlo = v0, vhi = vub;
  while (vlo - vhi > 1 || hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    // Nudge off an exact root so that Sturm counts at mid are valid.
    Rat step = (hi - lo) / 64;
    while (sign_at(qi, mid) == 0) mid -= step, step /= 2;
    int vm = sign_variations_at(chain, mid);
    if (vlo - vm >= 1) {
      hi = mid;
      vhi = vm;
    } else {
      lo = mid;
      vlo = vm;
    }
  }
  return {lo, hi, true};
}

// Number of distinct roots in the open interval (a, b); both endpoints must
// be non-roots.
inline int count_roots_between(const UPoly& p, const Rat& a, const Rat& b) {
  UPoly q = squarefree_part(p);
  IPoly qi = primitive_integer(q);
  if (sign_at(qi, a) == 0 || sign_at(qi, b) == 0)
    throw std::domain_error("endpoint is a root");
  auto chain = sturm_chain(q);
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

}  // namespace quadharm
