#include "covgerm/scalar.hpp"

#include <cstdlib>
#include <sstream>

namespace covgerm {

RingMismatch::RingMismatch(long d1, long d2)
    : std::domain_error("cannot mix Q(sqrt(" + std::to_string(d1) + ")) with Q(sqrt(" +
                        std::to_string(d2) + "))") {}

SquareSplit split_square(long n) {
  if (n == 0) return {0, 0};
  long sign = n < 0 ? -1 : 1;
  long m = std::labs(n);
  long factor = 1;
  for (long p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      factor *= p;
    }
  }
  return {factor, sign * m};
}

long join_ext(long d1, long d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw RingMismatch(d1, d2);
}

Scalar Scalar::quadratic(const Rational& a, const Rational& b, long d) {
  if (d == 0 || d == 1 || split_square(d).factor != 1) {
    throw std::invalid_argument("quadratic extension needs square-free D != 0, 1; got " +
                                std::to_string(d));
  }
  Scalar s;
  s.a_ = a;
  s.b_ = b;
  s.a_.canonicalize();
  s.b_.canonicalize();
  s.d_ = d;
  s.normalize();
  return s;
}

Scalar Scalar::sqrt_of(long n) {
  if (n == 0) return Scalar(0);
  auto [f, core] = split_square(n);
  if (core == 1) return Scalar(f);
  return quadratic(0, f, core);
}

Scalar Scalar::parse(const std::string& a, const std::string& b, long d) {
  Rational ra(a, 10);
  ra.canonicalize();
  if (b.empty()) return Scalar(ra);
  Rational rb(b, 10);
  rb.canonicalize();
  if (d == 0) {
    if (sgn(rb) != 0) throw std::invalid_argument("irrational part given for a rational ring");
    return Scalar(ra);
  }
  return quadratic(ra, rb, d);
}

void Scalar::normalize() {
  if (sgn(b_) == 0) d_ = 0;
}

Scalar Scalar::conj() const {
  Scalar s = *this;
  s.b_ = -s.b_;
  return s;
}

Rational Scalar::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  if (d_ == 0) return Scalar(Rational(1) / a_);
  Rational n = norm();
  Scalar s;
  s.a_ = a_ / n;
  s.b_ = -b_ / n;
  s.d_ = d_;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.a_ = -s.a_;
  s.b_ = -s.b_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  long d = join_ext(d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  long d = join_ext(d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  long d = join_ext(d_, o.d_);
  if (o.d_ == 0) {
    a_ *= o.a_;
    b_ *= o.a_;
  } else if (d_ == 0) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
  } else {
    Rational na = a_ * o.a_ + Rational(d) * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
  }
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  join_ext(d_, o.d_);
  return *this *= o.inverse();
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result(1);
  Scalar base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  if (d_ == 0) {
    os << a_.get_str();
    return os.str();
  }
  if (sgn(a_) != 0) {
    os << a_.get_str();
    if (sgn(b_) > 0) os << "+";
  }
  os << b_.get_str() << "*sqrt(" << d_ << ")";
  return os.str();
}

}  // namespace covgerm
