#pragma once
// Exact values of the form (rational) * pi^(k/2). Sphere integrals of
// monomials all live in this set; tracking the half-power of pi as an
// integer keeps them exact in every dimension.

#include "quadharm/rational.hpp"

#include <stdexcept>
#include <string>

namespace quadharm {

class PiScaled {
 public:
  PiScaled() : coeff_(0), twice_exp_(0) {}
  PiScaled(Rat coeff, int twice_exponent) : coeff_(std::move(coeff)), twice_exp_(twice_exponent) {
    if (coeff_ == 0) twice_exp_ = 0;
    if (twice_exp_ < 0) throw std::invalid_argument("negative pi exponent");
  }

  const Rat& coefficient() const { return coeff_; }
  int twice_exponent() const { return twice_exp_; }
  bool is_zero() const { return coeff_ == 0; }
  int sign() const { return coeff_.sign(); }

  bool operator==(const PiScaled& o) const {
    return coeff_ == o.coeff_ && twice_exp_ == o.twice_exp_;
  }
  bool operator!=(const PiScaled& o) const { return !(*this == o); }

  PiScaled& operator+=(const PiScaled& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = o;
      return *this;
    }
    if (twice_exp_ != o.twice_exp_)
      throw std::invalid_argument("adding values with different pi powers");
    coeff_ += o.coeff_;
    if (coeff_ == 0) twice_exp_ = 0;
    return *this;
  }

  friend PiScaled operator+(PiScaled a, const PiScaled& b) { return a += b; }

  friend PiScaled operator*(const PiScaled& a, const PiScaled& b) {
    if (a.is_zero() || b.is_zero()) return PiScaled();
    return PiScaled(a.coeff_ * b.coeff_, a.twice_exp_ + b.twice_exp_);
  }

  friend PiScaled operator*(const Rat& c, const PiScaled& a) {
    return PiScaled(c * a.coeff_, c == 0 ? 0 : a.twice_exp_);
  }

  // Exact ratio; defined only when the pi powers cancel.
  friend Rat ratio(const PiScaled& a, const PiScaled& b) {
    if (b.is_zero()) throw std::domain_error("ratio by zero");
    if (a.is_zero()) return Rat(0);
    if (a.twice_exp_ != b.twice_exp_)
      throw std::domain_error("ratio of values with different pi powers");
    return a.coeff_ / b.coeff_;
  }

  std::string str() const {
    return "(" + quadharm::to_string(coeff_) + ") * pi^(" + std::to_string(twice_exp_) + "/2)";
  }

 private:
  Rat coeff_;
  int twice_exp_;
};

}  // namespace quadharm
