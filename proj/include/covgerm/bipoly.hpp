#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covgerm/scalar.hpp"
#include "covgerm/unipoly.hpp"

namespace covgerm {

/// Exponent pair of the monomial x^i y^j. Ordered lexicographically, x first.
struct Exponent {
  int i = 0;
  int j = 0;
  auto operator<=>(const Exponent&) const = default;
};

enum class Var { First, Second };

/// Sparse bivariate polynomial over Q or Q(√D).
///
/// No stored coefficient is zero; exponents are non-negative. Variable names
/// are carried for printing and serialization only.
class BiPoly {
 public:
  using Terms = std::map<Exponent, Scalar>;

  BiPoly() = default;
  explicit BiPoly(std::array<std::string, 2> vars, long ext = 0);
  BiPoly(Terms terms, std::array<std::string, 2> vars, long ext = 0);

  static BiPoly constant(const Scalar& c, std::array<std::string, 2> vars = {"x", "y"}, long ext = 0);
  static BiPoly monomial(const Scalar& c, int i, int j, std::array<std::string, 2> vars = {"x", "y"},
                         long ext = 0);
  /// The first / second coordinate function.
  static BiPoly x(std::array<std::string, 2> vars = {"x", "y"}, long ext = 0);
  static BiPoly y(std::array<std::string, 2> vars = {"x", "y"}, long ext = 0);

  const Terms& terms() const { return terms_; }
  const std::array<std::string, 2>& vars() const { return vars_; }
  long ext() const { return ext_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar coeff(int i, int j) const;
  int degree_in(Var v) const;
  int total_degree() const;
  /// Smallest i + j over the support (the multiplicity at the origin); -1 if zero.
  int order() const;
  /// Weighted degree max(w1·i + w2·j); -1 if zero.
  int weighted_degree(int w1, int w2) const;

  void add_term(const Scalar& c, int i, int j);

  Scalar operator()(const Scalar& x, const Scalar& y) const;
  BiPoly derivative(Var v) const;
  BiPoly scaled(const Scalar& c) const;
  BiPoly pow(unsigned e) const;
  /// Multiply by x^i y^j.
  BiPoly shifted(int i, int j) const;
  /// p(c1 t^e1, c2 t^e2) as a polynomial in t.
  UniPoly substitute_monomial(const Scalar& c1, int e1, const Scalar& c2, int e2,
                              const std::string& var = "t") const;
  /// p(x + a·y, y)
  BiPoly sheared(const Scalar& a) const;
  /// Coefficients of p viewed as a polynomial in v, each a polynomial in the other variable.
  std::vector<UniPoly> as_poly_in(Var v) const;
  BiPoly with_vars(std::array<std::string, 2> vars) const;
  BiPoly with_ext(long ext) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend BiPoly operator+(BiPoly l, const BiPoly& r) { return l += r; }
  friend BiPoly operator-(BiPoly l, const BiPoly& r) { return l -= r; }
  friend BiPoly operator*(BiPoly l, const BiPoly& r) { return l *= r; }

  friend bool operator==(const BiPoly& l, const BiPoly& r) { return l.terms_ == r.terms_; }

  std::string to_string() const;

 private:
  Terms terms_;
  std::array<std::string, 2> vars_{"x", "y"};
  long ext_ = 0;
};

/// r with p = q·r exactly, or nullopt when q does not divide p.
/// Runs the lex-order division algorithm; for a single divisor a nonzero
/// remainder is equivalent to non-divisibility.
std::optional<BiPoly> exact_divide(const BiPoly& p, const BiPoly& q);

}  // namespace covgerm
