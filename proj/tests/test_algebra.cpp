#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "covgerm/bipoly.hpp"
#include "covgerm/poly_json.hpp"
#include "covgerm/resultant.hpp"

using namespace covgerm;

namespace {

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }

// Laplace expansion along the first row; independent of the Bareiss path.
UniPoly cofactor_det(const std::vector<std::vector<UniPoly>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  UniPoly acc({}, m[0][0].var(), m[0][0].ext());
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<UniPoly>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<UniPoly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    UniPoly term = m[0][c] * cofactor_det(minor);
    acc += c % 2 == 0 ? term : -term;
  }
  return acc;
}

BiPoly random_bipoly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, max_deg);
  BiPoly p;
  for (int k = 0; k < 5; ++k) p.add_term(coef(rng), deg(rng), deg(rng));
  return p;
}

}  // namespace

TEST_CASE("scalar arithmetic in Q(sqrt D)") {
  Scalar r2 = Scalar::sqrt_of(2);
  CHECK((Scalar(1) + r2) * (Scalar(1) - r2) == Scalar(-1));
  CHECK((Scalar(1) + r2).norm() == -1);
  Scalar z = Scalar::sqrt_of(-20);
  CHECK(z.ext() == -5);
  CHECK(z.b() == 2);
  CHECK(z * z == Scalar(-20));
  CHECK(Scalar::sqrt_of(9) == Scalar(3));
  Scalar q = Scalar::quadratic(Rational(1, 3), Rational(2, 5), 7);
  CHECK(q * q.inverse() == Scalar(1));
  CHECK_THROWS_AS(Scalar::sqrt_of(2) + Scalar::sqrt_of(3), RingMismatch);
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
}

TEST_CASE("bivariate ring operations") {
  CHECK((X() - Y()) * (X() + Y()) == X().pow(2) - Y().pow(2));
  BiPoly f = X().pow(3) + Y().pow(2).shifted(1, 0).scaled(9) + Y().pow(3).scaled(9);
  CHECK(f + BiPoly() == f);
  CHECK(f.derivative(Var::First) == X().pow(2).scaled(3) + Y().pow(2).scaled(9));
  CHECK(f.derivative(Var::Second) == BiPoly::monomial(18, 1, 1) + Y().pow(2).scaled(27));
  CHECK(BiPoly::constant(7).derivative(Var::First).is_zero());
  CHECK(f.substitute_monomial(1, 1, 0, 0) == UniPoly::monomial(1, 3));
  CHECK((Y().pow(3) - X().pow(2)).substitute_monomial(1, 3, 1, 2).is_zero());
  CHECK((X() * Y()).substitute_monomial(1, 3, 1, 2) == UniPoly::monomial(1, 5));
}

TEST_CASE("exact division") {
  std::array<std::string, 2> v{"x1", "x2"};
  BiPoly x1 = BiPoly::x(v), x2 = BiPoly::y(v);
  auto q = exact_divide(x1.pow(3) - x2.pow(3), x1 - x2);
  REQUIRE(q);
  CHECK(*q == x1.pow(2) + x1 * x2 + x2.pow(2));
  auto d = exact_divide(X().pow(2) - Y().pow(2), X() - Y());
  REQUIRE(d);
  CHECK(*d == X() + Y());
  CHECK_FALSE(exact_divide(X().pow(2) + BiPoly::constant(1), X() - BiPoly::constant(1)));
  CHECK_FALSE(exact_divide(UniPoly({1, 0, 1}), UniPoly({-1, 1})));
}

TEST_CASE("root multiplicity") {
  UniPoly t = UniPoly::monomial(1, 1);
  UniPoly g1 = UniPoly({-1, 3}).scaled(Rational(1, 2));
  CHECK(root_multiplicity(t.pow(3) - g1.pow(2), 1) == 2);
  CHECK(root_multiplicity(UniPoly::linear_root(1).pow(5), 1) == 5);
  CHECK(root_multiplicity(t, 1) == 0);
  CHECK_THROWS(root_multiplicity(UniPoly(), 1));
}

TEST_CASE("univariate division and gcd properties") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Scalar> a(6), b(4);
    for (auto& v : a) v = c(rng);
    for (auto& v : b) v = c(rng);
    b.back() = 1;
    UniPoly pa(a), pb(b);
    auto [q, r] = divmod(pa, pb);
    CHECK(q * pb + r == pa);
    CHECK(r.degree() < pb.degree());
    UniPoly g = gcd(pa * pb, pb.pow(2));
    CHECK(exact_divide(pa * pb, g));
    CHECK(exact_divide(pb.pow(2), g));
    CHECK(g.degree() >= pb.degree());
  }
  CHECK(is_squarefree(UniPoly({-1, 0, 1})));
  CHECK_FALSE(is_squarefree(UniPoly::linear_root(2).pow(2)));
}

TEST_CASE("resultant examples") {
  UniPoly r = resultant(Y() - X(), Y() + X(), Var::Second);
  CHECK(r == UniPoly::monomial(2, 1, "x"));
  BiPoly p = X().pow(2) - Y().pow(3);
  CHECK(resultant(p, p, Var::Second).is_zero());
  UniPoly cusp = resultant(p, X().pow(2).scaled(2) - Y().pow(3), Var::Second);
  CHECK(cusp.order() == 6);
}

TEST_CASE("resultant equals the brute-force Sylvester determinant") {
  std::mt19937_64 rng(2024);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    BiPoly p = random_bipoly(rng, 3), q = random_bipoly(rng, 3);
    if (p.degree_in(Var::Second) < 1 || q.degree_in(Var::Second) < 1) continue;
    UniPoly oracle = cofactor_det(sylvester_matrix(p, q, Var::Second));
    CHECK(resultant(p, q, Var::Second) == oracle);
    ++compared;
  }
  CHECK(compared > 20);
  BiPoly a = X() * Y().pow(2) - BiPoly::constant(3), b = Y() - X().pow(2);
  CHECK(resultant(a, b, Var::Second) == cofactor_det(sylvester_matrix(a, b, Var::Second)));
  CHECK(resultant(b, a, Var::Second) == cofactor_det(sylvester_matrix(b, a, Var::Second)));
  CHECK_THROWS_AS(resultant(X(), Y(), Var::Second), DegenerateInput);
}

TEST_CASE("resultant over a quadratic field") {
  Scalar s = Scalar::sqrt_of(-5);
  BiPoly p = Y().pow(2).with_ext(-5) - X().scaled(s);
  BiPoly q = Y().pow(2).shifted(1, 0).with_ext(-5) + Y().with_ext(-5) - BiPoly::constant(1, {"x", "y"}, -5);
  CHECK(resultant(p, q, Var::Second) == cofactor_det(sylvester_matrix(p, q, Var::Second)));
}

TEST_CASE("polynomial JSON round trip") {
  Scalar s = Scalar::sqrt_of(6);
  BiPoly p = (X().pow(3).scaled(Rational(2, 7)) + Y().scaled(s)).with_ext(6);
  BiPoly back = json_io::bipoly_from_json(json_io::to_json(p));
  CHECK(back == p);
  CHECK(back.ext() == 6);
  UniPoly u({Rational(1, 2), 0, 3}, "t");
  CHECK(json_io::unipoly_from_json(json_io::to_json(u)) == u);
  auto j = json_io::to_json(X());
  CHECK(j["terms"][0]["c"][0] == "1/1");
  j["terms"].push_back(j["terms"][0]);
  CHECK_THROWS_AS(json_io::bipoly_from_json(j), json_io::FormatError);
  nlohmann::json bad = json_io::to_json(X());
  bad["ring"]["ext"] = {{"D", 4}};
  CHECK_THROWS_AS(json_io::bipoly_from_json(bad), json_io::FormatError);
  CHECK(json_io::rational_from_string("3") == 3);
}
