#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covgerm/scalar.hpp"

namespace covgerm {

/// Dense univariate polynomial over Q or Q(√D), lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial has no
/// coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs, std::string var = "t", long ext = 0);
  static UniPoly constant(const Scalar& c, std::string var = "t", long ext = 0);
  /// c·var^e
  static UniPoly monomial(const Scalar& c, int e, std::string var = "t", long ext = 0);
  /// var − a
  static UniPoly linear_root(const Scalar& a, std::string var = "t", long ext = 0);

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const std::string& var() const { return var_; }
  long ext() const { return ext_; }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of var^i (zero outside the stored range).
  Scalar coeff(int i) const;
  Scalar leading() const;
  /// Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int order() const;

  Scalar operator()(const Scalar& t) const;
  UniPoly derivative() const;
  UniPoly scaled(const Scalar& c) const;
  UniPoly pow(unsigned e) const;
  /// p(t + shift)
  UniPoly shifted(const Scalar& shift) const;
  UniPoly monic() const;
  /// Keep the terms of degree < n.
  UniPoly truncated(int n) const;
  /// Rename / retag without touching coefficients.
  UniPoly with_var(std::string var) const;
  UniPoly with_ext(long ext) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  friend UniPoly operator+(UniPoly l, const UniPoly& r) { return l += r; }
  friend UniPoly operator-(UniPoly l, const UniPoly& r) { return l -= r; }
  friend UniPoly operator*(UniPoly l, const UniPoly& r) { return l *= r; }

  /// Values are equal; variable names and ring tags are not compared.
  friend bool operator==(const UniPoly& l, const UniPoly& r) { return l.coeffs_ == r.coeffs_; }

  std::string to_string() const;

 private:
  void trim();

  std::vector<Scalar> coeffs_;
  std::string var_ = "t";
  long ext_ = 0;
};

/// Euclidean division over the coefficient field: num = q·den + r, deg r < deg den.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);
/// r with p = q·r, or nullopt when q does not divide p.
std::optional<UniPoly> exact_divide(const UniPoly& p, const UniPoly& q);
/// Monic greatest common divisor (zero only if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
bool is_squarefree(const UniPoly& p);
/// Largest m with (t − a)^m dividing p. Throws for the zero polynomial.
int root_multiplicity(const UniPoly& p, const Scalar& a);

}  // namespace covgerm
