#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace covgerm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when values from two different quadratic fields Q(√D), Q(√D′) meet.
class RingMismatch : public std::domain_error {
 public:
  RingMismatch(long d1, long d2);
};

class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Largest f with f² | n, and the square-free cofactor: n = f²·core.
struct SquareSplit {
  long factor;
  long core;
};
SquareSplit split_square(long n);

/// Returns the ring tag shared by two operands (0 = Q). Throws on mismatch.
long join_ext(long d1, long d2);

/// An element a + b√D of Q or of a quadratic field Q(√D).
///
/// D is square-free and different from 0 and 1. A value with b = 0 is stored
/// as a rational (D = 0), so a quadratic scalar whose irrational part cancels
/// compares equal to the corresponding rational. Which field a polynomial
/// lives in is tracked by the polynomial, not by its coefficients.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q) : a_(q) { a_.canonicalize(); }  // NOLINT

  static Scalar quadratic(const Rational& a, const Rational& b, long d);
  /// Exact square root of an integer: rational when n is a perfect square,
  /// otherwise f√core with n = f²·core.
  static Scalar sqrt_of(long n);
  static Scalar parse(const std::string& a, const std::string& b, long d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long ext() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return d_ == 0; }
  bool is_one() const { return d_ == 0 && a_ == 1; }

  Scalar conj() const;
  /// a² − D b², always rational.
  Rational norm() const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
  friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

  friend bool operator==(const Scalar& l, const Scalar& r) {
    return l.d_ == r.d_ && l.a_ == r.a_ && l.b_ == r.b_;
  }

  Scalar pow(unsigned e) const;

  /// "3/5", "-1/2+7/3*sqrt(-5)" style text, for logs and witnesses.
  std::string to_string() const;

 private:
  void normalize();

  Rational a_{0};
  Rational b_{0};
  long d_ = 0;
};

}  // namespace covgerm
