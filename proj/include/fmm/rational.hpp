#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fmm {

using Rational = mpq_class;

// An exact element of Q(sqrt(d)): value = a + b*sqrt(d), with d a fixed
// square-free non-negative integer per coefficient domain. d == 0 models the
// pure rationals; d == 1 is folded into the rational part on construction.
class Coeff {
 public:
  Coeff() : a_(0), b_(0), d_(0) {}
  Coeff(const Rational& a) : a_(a), b_(0), d_(0) {}       // NOLINT(google-explicit-constructor)
  Coeff(long num, long den = 1) : a_(num, den), b_(0), d_(0) { a_.canonicalize(); }
  Coeff(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) { canonicalize(); }

  static Coeff from_double(double x) {
    Coeff c;
    c.a_ = Rational(x);  // exact: doubles are dyadic rationals
    return c;
  }
  static Coeff sqrt_term(const Rational& b, long d) { return Coeff(Rational(0), b, d); }

  const Rational& rat() const { return a_; }
  const Rational& surd() const { return b_; }
  long d() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return b_ == 0 && a_ == 1; }
  bool is_unit() const { return b_ == 0 && (a_ == 1 || a_ == -1); }

  Coeff operator-() const { return Coeff(-a_, -b_, d_); }

  friend Coeff operator+(const Coeff& x, const Coeff& y) {
    long d = merge_d(x, y);
    return Coeff(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend Coeff operator-(const Coeff& x, const Coeff& y) {
    long d = merge_d(x, y);
    return Coeff(x.a_ - y.a_, x.b_ - y.b_, d);
  }
  friend Coeff operator*(const Coeff& x, const Coeff& y) {
    long d = merge_d(x, y);
    return Coeff(x.a_ * y.a_ + d * (x.b_ * y.b_), x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend Coeff operator/(const Coeff& x, const Coeff& y) {
    if (y.is_zero()) throw std::domain_error("Coeff: division by zero");
    long d = merge_d(x, y);
    // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2 - d b^2)
    Rational den = y.a_ * y.a_ - d * (y.b_ * y.b_);
    return Coeff((x.a_ * y.a_ - d * x.b_ * y.b_) / den, (x.b_ * y.a_ - x.a_ * y.b_) / den, d);
  }
  Coeff& operator+=(const Coeff& y) { return *this = *this + y; }
  Coeff& operator-=(const Coeff& y) { return *this = *this - y; }
  Coeff& operator*=(const Coeff& y) { return *this = *this * y; }

  friend bool operator==(const Coeff& x, const Coeff& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || y.b_ == 0 || x.d_ == y.d_);
  }
  friend bool operator!=(const Coeff& x, const Coeff& y) { return !(x == y); }

  Coeff abs() const { return sign() < 0 ? -*this : *this; }

  // Sign of a + b*sqrt(d), decided exactly.
  int sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against d b^2
    Rational lhs = a_ * a_, rhs = d_ * (b_ * b_);
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // cannot happen for square-free d>1 with b!=0
    return (c > 0) ? sa : sb;
  }

  // Nearest double to a + b*sqrt(d), via a 256-bit intermediate plus a
  // two-term correction so the final rounding is the only one that matters.
  double to_double() const {
    if (b_ == 0) {
      mpf_class x(a_, 256);
      double hi = x.get_d();
      mpf_class rest = x - hi;
      return hi + rest.get_d();
    }
    mpf_class x(a_, 256), s(d_, 256);
    mpf_sqrt(s.get_mpf_t(), s.get_mpf_t());
    x += mpf_class(b_, 256) * s;
    double hi = x.get_d();
    mpf_class rest = x - hi;
    return hi + rest.get_d();
  }

  std::string str() const {
    if (b_ == 0) return a_.get_str();
    std::string s;
    if (a_ != 0) s = a_.get_str() + (sgn(b_) >= 0 ? "+" : "");
    s += "sqrt" + std::to_string(d_) + "*" + b_.get_str();
    return s;
  }

 private:
  void canonicalize() {
    a_.canonicalize();
    b_.canonicalize();
    if (d_ == 1) { a_ += b_; b_ = 0; }
    if (b_ == 0) d_ = 0;
    if (d_ < 0) throw std::domain_error("Coeff: negative radicand");
  }
  static long merge_d(const Coeff& x, const Coeff& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw std::domain_error("Coeff: mixed quadratic extensions");
  }

  Rational a_, b_;
  long d_;
};

}  // namespace fmm
