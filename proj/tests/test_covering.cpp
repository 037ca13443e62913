#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "covgerm/covering.hpp"
#include "covgerm/verify.hpp"

using namespace covgerm;

namespace {

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }

std::set<std::string> mu_pair(const std::string& builder, long k1, long k2) {
  std::set<std::string> out;
  for (int sign : {1, -1}) {
    CoveringMap f = builder == "a_n3" ? build_a_n3(k1, k2, sign) : build_b_n3(k1, k2, sign);
    out.insert(f.mu.to_string());
  }
  return out;
}

}  // namespace

TEST_CASE("binomial jets") {
  CHECK(jet_series(2, 5, 1) == UniPoly({1, Rational(2, 5)}, "T"));
  CHECK(jet_series(3, 7, 0) == UniPoly::constant(1, "T"));
  CHECK(jet_series(4, 4, 3) == UniPoly({1, 1}, "T"));
  CHECK(binomial_jet(Rational(-1), 3) == UniPoly({1, -1, 1, -1}, "T"));
  CHECK(binomial_jet(Rational(1, 2), 2) == UniPoly({1, Rational(1, 2), Rational(-1, 8)}, "T"));
}

TEST_CASE("row formulas at l1 = 1") {
  CoveringMap r1 = build_row1(2, 3, 1);
  CHECK(r1.u == (X().pow(2).scaled(3) + Y().pow(3).scaled(2)).scaled(Rational(1, 5)));
  CHECK(r1.v == X() * Y());
  CHECK(r1.mu == Scalar(Rational(-6, 5)));
  CHECK(r1.pushforward_constants == std::pair<Scalar, Scalar>{1, 1});
  for (long k2 : {2, 3, 5}) {
    CoveringMap f = build_row1(1, k2, 1);
    CHECK(f.u == (Y().pow(static_cast<unsigned>(k2)) + X().scaled(k2)).scaled(Rational(1, 1 + k2)));
  }
  CoveringMap r2 = build_row2(2, 3, 1);
  CHECK(r2.u == (Y().pow(3).scaled(3) - X().pow(2)).shifted(1, 0).scaled(Rational(1, 2)));
  CHECK(r2.v == Y());
  CHECK(jacobian(r2) == (Y().pow(3) - X().pow(2)).scaled(Rational(3, 2)));
  CHECK(check_jacobian_form(build_row1(2, 3, 3)).pass);
}

TEST_CASE("P-series closed form") {
  CoveringMap f = build_p_series();
  CHECK(f.frame == Frame::Axis);
  CHECK(jacobian(f) == BiPoly::monomial(2835, 0, 6));
  CHECK(f.mu == Scalar(2835));
  CHECK(f.u.substitute_monomial(1, 1, 0, 0) == UniPoly::monomial(1, 3));
  CHECK(f.v.substitute_monomial(1, 1, 0, 0) == UniPoly::monomial(1, 5));
  CHECK(f.u(Scalar(1), Scalar(0)) == Scalar(1));
}

TEST_CASE("n = 3 families over quadratic fields") {
  CoveringMap a = build_a_n3(1, 2, 1);
  CHECK(a.ext() == -5);
  CHECK(a.derived.d1 == 5);
  CHECK(a.derived.d2 == 2);
  CHECK(check_jacobian_form(a).pass);
  CHECK(mu_pair("a_n3", 1, 2) == std::set<std::string>{Scalar::quadratic(Rational(2, 9), Rational(14, 45), -5).to_string(),
                                                       Scalar::quadratic(Rational(2, 9), Rational(-14, 45), -5).to_string()});
  CHECK(mu_pair("b_n3", 1, 2) == std::set<std::string>{Scalar::quadratic(30, 21, 2).to_string(),
                                                       Scalar::quadratic(30, -21, 2).to_string()});
  CoveringMap b = build_b_n3(2, 3, 1);
  CHECK(b.ext() == 6);
  CHECK(b.derived == DerivedData{8, 9, 4, 3, 12, 3, 1});
  CHECK(mu_pair("b_n3", 2, 3) == std::set<std::string>{Scalar::quadratic(84, 34, 6).to_string(),
                                                       Scalar::quadratic(84, -34, 6).to_string()});
  for (int sign : {1, -1}) {
    CHECK_FALSE(build_a_n3(1, 2, sign).pushforward_constants.first.is_zero());
    CHECK_FALSE(build_b_n3(2, 3, sign).pushforward_constants.second.is_zero());
  }
  CHECK_THROWS(build_b_n3(1, 1, 1));
}

TEST_CASE("Belyi data") {
  Params p{Case::B, 2, 3, 1, 0};
  UniPoly g1({Rational(-1, 2), Rational(3, 2)}), g2 = UniPoly::constant(1);
  CHECK(h_polynomial(g1, g2, p) == UniPoly::linear_root(1).scaled(Rational(3, 2)));
  CHECK(belyi_mu(g1, g2, p) == Scalar(Rational(3, 2)));
  CoveringMap f = from_belyi({g1, g2, p, Scalar(Rational(3, 2))});
  CHECK(f.u == build_row2(2, 3, 1).u);
  CHECK(f.v == build_row2(2, 3, 1).v);
  CHECK_THROWS_AS(belyi_mu(UniPoly({0, 1}), g2, p), BelyiError);
  CHECK_THROWS_AS(belyi_mu(UniPoly({Rational(-1, 2), Rational(4, 2)}), g2, p), BelyiError);
  CHECK_THROWS_AS(belyi_mu(UniPoly({Rational(-1, 3), Rational(3, 2)}), g2, p), BelyiError);
  CHECK_THROWS_AS(from_belyi({g1, g2, p, Scalar(7)}), BelyiError);

  auto jet = jet_belyi({Case::A, 2, 3, 1, 0});
  REQUIRE(jet);
  CoveringMap r1 = from_belyi(*jet);
  CHECK(r1.u == build_row1(2, 3, 1).u);
  CHECK_FALSE(jet_belyi({Case::B, 1, 2, 1, 1}));
}

TEST_CASE("extract_belyi inverts from_belyi on closed forms") {
  for (const Params& p : enumerate(20)) {
    for (const auto& name : closed_forms(p)) {
      CoveringMap f = build_closed(p, name, 1);
      if (f.frame != Frame::Standard) continue;
      auto b = extract_belyi(f);
      REQUIRE(b);
      CoveringMap g = from_belyi(*b);
      CHECK(g.u == f.u);
      CHECK(g.v == f.v);
    }
  }
  CoveringMap bad = build_row1(2, 3, 1);
  bad.u += X() * Y();
  CHECK_FALSE(extract_belyi(bad));
}

TEST_CASE("closed form dispatch") {
  auto has = [](const Params& p, const std::string& b) {
    auto v = closed_forms(p);
    return std::find(v.begin(), v.end(), b) != v.end();
  };
  CHECK(has({Case::A, 2, 3, 1, 0}, "row1"));
  CHECK(has({Case::B, 2, 3, 1, 0}, "row2"));
  CHECK(has({Case::A, 2, 3, 1, 1}, "a_n3"));
  CHECK(has({Case::B, 2, 3, 1, 1}, "b_n3"));
  CHECK(has({Case::B, 1, 1, 2, 4}, "p_series"));
  CHECK(closed_forms({Case::B, 1, 2, 1, 2}).empty());
  CHECK_THROWS(build_closed({Case::B, 1, 2, 1, 2}, "row1"));
  CHECK_THROWS(closed_forms({Case::B, 1, 1, 1, 1}));
}

TEST_CASE("covering map JSON round trip") {
  for (const CoveringMap& f : {build_row1(2, 3, 1), build_b_n3(2, 3, -1), build_a_n3(1, 2, 1), build_p_series()}) {
    CoveringMap g = covering_from_json(to_json(f));
    CHECK(g.u == f.u);
    CHECK(g.v == f.v);
    CHECK(g.params == f.params);
    CHECK(g.frame == f.frame);
    CHECK(g.mu == f.mu);
    CHECK(to_json(g) == to_json(f));
  }
}
