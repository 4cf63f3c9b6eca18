#pragma once
// Exact scalar arithmetic: arbitrary-precision integers and rationals plus
// the small combinatorial helpers used across the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quadharm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Rat& q) { return q.sign(); }
inline int sign_of(const Int& n) { return n.sign(); }

inline Rat abs_of(const Rat& q) { return q < 0 ? Rat(-q) : q; }

template <class T>
inline T pow_of(const T& base, unsigned e) {
  T acc(1);
  T b = base;
  while (e != 0) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

inline Int factorial(unsigned n) {
  Int acc(1);
  for (unsigned i = 2; i <= n; ++i) acc *= i;
  return acc;
}

// n!! with the usual conventions (-1)!! = 0!! = 1.
inline Int double_factorial(int n) {
  Int acc(1);
  for (int i = n; i >= 2; i -= 2) acc *= i;
  return acc;
}

inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return Int(0);
  if (k > n - k) k = n - k;
  Int acc(1);
  for (unsigned i = 0; i < k; ++i) {
    acc *= (n - i);
    acc /= (i + 1);
  }
  return acc;
}

// Floor of the exact quotient a/b for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_of(const Rat& q) { return floor_div(numerator(q), denominator(q)); }

inline Int ceil_of(const Rat& q) { return -floor_of(Rat(-q)); }

// Parses "p", "p/q" or a plain decimal like "-0.25". Used by the CLI for
// coefficients, tolerances and declared orders.
inline Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Int n(text.substr(0, slash));
    Int d(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rat(n, d);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rat(Int(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  unsigned frac_len = static_cast<unsigned>(text.size() - dot - 1);
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("malformed rational '" + text + "'");
  return Rat(Int(digits), pow_of(Int(10), frac_len));
}

inline std::string to_string(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Fixed-point decimal rendering, round half to even; deterministic, used only
// for display columns (never for comparisons).
inline std::string to_decimal_string(const Rat& q, unsigned digits) {
  Int scale = pow_of(Int(10), digits);
  Rat scaled = q * scale;
  Int lo = floor_of(scaled);
  Rat frac = scaled - lo;
  Int rounded = lo;
  if (frac > Rat(1, 2) || (frac == Rat(1, 2) && (lo % 2 != 0))) ++rounded;
  bool neg = rounded < 0;
  Int mag = neg ? Int(-rounded) : rounded;
  std::string s = mag.str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return (neg ? "-" : "") + s;
}

}  // namespace quadharm
