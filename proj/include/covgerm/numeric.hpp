#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>
#include <json.hpp>

#include "covgerm/bipoly.hpp"
#include "covgerm/ramdata.hpp"
#include "covgerm/scalar.hpp"
#include "covgerm/unipoly.hpp"

namespace covgerm {

using Real = boost::multiprecision::mpfr_float;

/// Sets the default MPFR working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits_;
};

struct Complex {
  Real re{0}, im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int v) : re(v) {}  // NOLINT(google-explicit-constructor)

  /// Embedding of a + b√D with √D on the positive real or imaginary axis.
  static Complex from(const Scalar& s);

  Real abs() const;
  Complex conj() const { return {re, -im}; }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  friend Complex operator+(Complex l, const Complex& r) { return l += r; }
  friend Complex operator-(Complex l, const Complex& r) { return l -= r; }
  friend Complex operator*(Complex l, const Complex& r) { return l *= r; }
  friend Complex operator/(Complex l, const Complex& r) { return l /= r; }
};

Real to_real(const Rational& q);

/// Dense complex coefficient list, lowest degree first.
using CPoly = std::vector<Complex>;

CPoly to_complex(const UniPoly& p);
Complex evaluate(const CPoly& p, const Complex& t);
/// max_i |p_i - q_i| over the longer of the two lists.
Real max_abs_diff(const CPoly& p, const CPoly& q);
/// Numeric Sylvester determinant of two univariate polynomials.
Complex numeric_resultant(const CPoly& p, const CPoly& q);

struct NumericBelyi {
  Params params;
  DerivedData derived;
  /// g_i in powers of t (lowest first) and in powers of (t - 1) (a_i[0] = 1).
  CPoly g1, g2, a1, a2;
  Complex mu_h;
  /// max |coefficient| of the Belyi conditions, and of h - mu_h (t-1)^(n-1)
  /// relative to max(1, |mu_h|).
  Real residual_belyi, residual_h;
  int restarts_used = 0;
  int iterations = 0;
  unsigned precision_bits = 0;
};

struct NumericOptions {
  unsigned precision_bits = 256;
  int restarts = 32;
  std::uint64_t seed = 0x5eed;
  double accept = 1e-20;
  int max_iterations = 200;
  /// Run on the literal tuple even if it fails validation.
  bool require_valid = true;
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Damped Newton on the square system for g_i = 1 + Σ a_ij (t-1)^j from seeded
/// random starts. Solutions with g_i(0) = 0, deg g_i < l_i or a common root of
/// g1, g2 are rejected. Throws NonConvergence when the budget runs out.
NumericBelyi solve_belyi_numeric(const Params& p, const NumericOptions& opts = {});

/// Sparse bivariate polynomial with complex coefficients.
struct NumBiPoly {
  std::map<Exponent, Complex> terms;

  static NumBiPoly from(const BiPoly& p);
  void add_term(const Complex& c, int i, int j);
  NumBiPoly derivative(Var v) const;
  NumBiPoly pow(unsigned e) const;
  NumBiPoly scaled(const Complex& c) const;
  /// p(c1 s^e1, c2 s^e2) as a coefficient list in s.
  CPoly substitute_monomial(const Complex& c1, int e1, const Complex& c2, int e2) const;
  /// p(x0, y) as a coefficient list in y.
  CPoly at_first(const Complex& x0) const;
  int degree_in(Var v) const;
  Real max_abs() const;

  NumBiPoly& operator+=(const NumBiPoly& o);
  NumBiPoly& operator-=(const NumBiPoly& o);
  friend NumBiPoly operator+(NumBiPoly l, const NumBiPoly& r) { return l += r; }
  friend NumBiPoly operator-(NumBiPoly l, const NumBiPoly& r) { return l -= r; }
  friend NumBiPoly operator*(const NumBiPoly& l, const NumBiPoly& r);
};

struct NumericMap {
  NumBiPoly u, v;
  Params params;
  DerivedData derived;
};

/// u = x^ν G1, v = x^(1-ν) y G2 from numeric Belyi data.
NumericMap numeric_from_belyi(const NumericBelyi& b);

/// Complex numbers serialize as [re, im] decimal strings at the working precision.
nlohmann::json to_json(const Complex& c);
Complex complex_from_json(const nlohmann::json& j);
nlohmann::json to_json(const NumericBelyi& b);
/// {"numeric": true, "params", "u", "v"} with terms [{"e": [i, j], "c": [re, im]}].
nlohmann::json to_json(const NumericMap& f);
NumericMap numeric_map_from_json(const nlohmann::json& j);

}  // namespace covgerm
