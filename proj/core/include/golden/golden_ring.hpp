#pragma once

// Exact arithmetic in Q(sqrt 5).
//
// Every element is written uniquely as a + b*alpha with rational a, b and
// alpha = (1 + sqrt 5)/2. Because alpha is irrational the pair (a, b) is a
// faithful representation, so equality of two GoldenNums is plain coefficient
// comparison. Products are reduced with alpha^2 = alpha + 1; beta = 1 - alpha
// is obtained by conjugation and never stored separately.

#include <golden/numeric.hpp>

#include <ostream>
#include <string>
#include <utility>

namespace golden {

class GoldenNum {
 public:
  GoldenNum() = default;
  GoldenNum(Rational rational, Rational alpha = 0)
      : a_(std::move(rational)), b_(std::move(alpha)) {
    a_.canonicalize();
    b_.canonicalize();
  }
  GoldenNum(long rational) : a_(rational), b_(0) {}

  static GoldenNum one() { return GoldenNum(1); }
  static GoldenNum alpha() { return GoldenNum(0, 1); }
  static GoldenNum beta() { return GoldenNum(1, -1); }
  static GoldenNum sqrt5() { return GoldenNum(-1, 2); }

  /// Coefficient of 1.
  const Rational& a() const noexcept { return a_; }
  /// Coefficient of alpha.
  const Rational& b() const noexcept { return b_; }

  bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const noexcept { return sgn(b_) == 0; }

  GoldenNum& operator+=(const GoldenNum& y);
  GoldenNum& operator-=(const GoldenNum& y);
  GoldenNum& operator*=(const GoldenNum& y);

  friend bool operator==(const GoldenNum& x, const GoldenNum& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  Rational a_;
  Rational b_;
};

GoldenNum operator+(GoldenNum x, const GoldenNum& y);
GoldenNum operator-(GoldenNum x, const GoldenNum& y);
GoldenNum operator*(GoldenNum x, const GoldenNum& y);
GoldenNum operator-(const GoldenNum& x);
/// x / y via ring_div. Throws ZeroDivision when y == 0.
GoldenNum operator/(const GoldenNum& x, const GoldenNum& y);

GoldenNum ring_add(const GoldenNum& x, const GoldenNum& y);
GoldenNum ring_sub(const GoldenNum& x, const GoldenNum& y);
GoldenNum ring_mul(const GoldenNum& x, const GoldenNum& y);

/// Inverse of c*alpha + d as (c/D)*alpha - (c+d)/D with D = c^2 - d^2 - cd.
/// D vanishes over the rationals only at c = d = 0; that case throws
/// ZeroDivision.
GoldenNum ring_inv(const GoldenNum& x);

/// x * ring_inv(y).
GoldenNum ring_div(const GoldenNum& x, const GoldenNum& y);

/// Quotient (a*alpha + b)/(c*alpha + d) from the closed form
/// ((cb - da)/D)*alpha + (ca - db - cb)/D. Must agree with ring_div.
GoldenNum ring_div_closed_form(const GoldenNum& x, const GoldenNum& y);

/// Square-and-multiply; negative n goes through ring_inv. x^0 == 1 for every
/// x, including zero. Throws SingularPower for 0^n with n < 0.
GoldenNum ring_pow(const GoldenNum& x, long n);

/// alpha^n = F(n)*alpha + F(n-1), built from the Fibonacci pair.
GoldenNum alpha_pow(long n);
/// beta^n = conjugate(alpha^n) = F(n+1) - F(n)*alpha.
GoldenNum beta_pow(long n);

/// The automorphism alpha -> beta: (a, b) -> (a + b, -b).
GoldenNum conjugate(const GoldenNum& x);

/// x * conjugate(x) = a^2 + ab - b^2, a rational.
Rational norm(const GoldenNum& x);

std::pair<Rational, Rational> coeffs(const GoldenNum& x);

/// sqrt 5 = alpha - beta = 2*alpha - 1.
GoldenNum sqrt5_const();

/// "13", "-1/2*alpha", "2 + 3*alpha", "1 - alpha".
std::string to_string(const GoldenNum& x);
std::ostream& operator<<(std::ostream& os, const GoldenNum& x);

}  // namespace golden
