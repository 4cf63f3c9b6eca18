#pragma once
// Text form of polynomials: terms joined by + / -, rational coefficients,
// variables x1..xd, powers with ^. Example: 3/2*x1^2*x3 - x2 + 1.
// print() emits the canonical graded-lex form, leading term first, and
// parse() inverts it exactly.

#include "quadharm/polynomial.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace quadharm {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Descending graded lex, so the leading term comes first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Monomial& m = it->first;
    const Rat& c = it->second;
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (m.e[j] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "x" + std::to_string(j + 1);
      if (m.e[j] > 1) factors += "^" + std::to_string(m.e[j]);
    }
    if (factors.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += to_string(mag) + "*" + factors;
    }
  }
  return out;
}

namespace detail {

class PolyLexer {
 public:
  PolyLexer(const std::string& text, std::size_t dim) : s_(text), dim_(dim) {}

  Polynomial parse() {
    Polynomial p(dim_);
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError(err("expected '+' or '-'"));
      }
      auto [m, c] = parse_term();
      p.add_term(std::move(m), sign < 0 ? Rat(-c) : c);
      skip_ws();
      first = false;
    }
    return p;
  }

 private:
  std::pair<Monomial, Rat> parse_term() {
    Monomial m(dim_);
    Rat c(1);
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= parse_number();
        saw_factor = true;
      } else if (ch == 'x') {
        auto [idx, exp] = parse_power();
        m.e[idx - 1] += exp;
        saw_factor = true;
      } else {
        throw ParseError(err("unexpected character"));
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end()) throw ParseError(err("expected factor after '*'"));
        continue;
      }
      break;
    }
    if (!saw_factor) throw ParseError(err("empty term"));
    return {std::move(m), std::move(c)};
  }

  Rat parse_number() {
    std::string digits = read_digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      std::string dden = read_digits();
      Int d(dden);
      if (d == 0) throw ParseError(err("zero denominator"));
      return Rat(Int(digits), d);
    }
    return Rat(Int(digits));
  }

  std::pair<std::size_t, unsigned> parse_power() {
    ++pos_;  // consume 'x'
    std::string digits = read_digits();
    std::size_t idx = std::strtoull(digits.c_str(), nullptr, 10);
    if (idx < 1 || idx > dim_)
      throw ParseError("variable x" + digits + " out of range for dimension " +
                       std::to_string(dim_));
    unsigned exp = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::string edig = read_digits();
      unsigned long v = std::strtoul(edig.c_str(), nullptr, 10);
      if (v > 100000) throw ParseError(err("exponent too large"));
      exp = static_cast<unsigned>(v);
    }
    return {idx, exp};
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError(err("expected digits"));
    return s_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  std::string err(const std::string& msg) const {
    return msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'";
  }

  const std::string& s_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, std::size_t dim) {
  return detail::PolyLexer(text, dim).parse();
}

// p * |x|^power, power even.
inline Polynomial substitute_radial(const Polynomial& p, unsigned power) {
  if (power % 2 != 0)
    throw std::invalid_argument("odd radial power is not a polynomial");
  return p.radial_multiply(power / 2);
}

}  // namespace quadharm
