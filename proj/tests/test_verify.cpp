#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "covgerm/verify.hpp"

using namespace covgerm;

namespace {

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }

}  // namespace

TEST_CASE("jacobian and its shape") {
  CoveringMap extra = build_extra_map(2, 3);
  CHECK(jacobian(extra) == (Y().pow(3) - X().pow(2)).scaled(3));
  CHECK(jacobian(X(), Y()) == BiPoly::constant(1));
  CHECK(check_jacobian_form(build_row1(2, 3, 1)).mu == Scalar(Rational(-6, 5)));
  JacobianCheck e = check_jacobian_form(extra);
  CHECK(e.pass);
  CHECK(e.mu == Scalar(3));
  JacobianCheck p = check_jacobian_form(build_p_series());
  CHECK(p.mu == Scalar(2835));

  CoveringMap bad = build_row1(2, 3, 1);
  bad.u += X();
  CHECK_FALSE(check_jacobian_form(bad).pass);
  VerificationReport rep = verify_covering(bad);
  CHECK_FALSE(rep.passed());
  CHECK(rep.failures().front() == "check_jacobian_form");
}

TEST_CASE("pushforward") {
  PushforwardCheck r = check_pushforward(build_row1(2, 3, 1));
  CHECK(r.pass);
  CHECK(r.c1 == Scalar(1));
  CHECK(r.c2 == Scalar(1));
  PushforwardCheck e = check_pushforward(build_extra_map(2, 3));
  CHECK(e.c1 == Scalar(2));
  CHECK(e.c2 == Scalar(1));
  CHECK(check_pushforward(build_p_series()).pass);
  CoveringMap bad = build_extra_map(2, 3);
  bad.v += X();
  CHECK_FALSE(check_pushforward(bad).pass);
}

TEST_CASE("covering degree") {
  CHECK(covering_degree(build_extra_map(2, 3)) == 3);
  CHECK(covering_degree(build_p_series()) == 15);
  CHECK(covering_degree(build_row1(2, 3, 1)) == 5);
  CHECK(covering_degree(X().pow(2), Y().pow(3)) == 6);
  for (std::uint64_t seed : {1u, 2u, 3u, 99u}) CHECK(covering_degree(build_b_n3(2, 3, 1), seed) == 12);
  CHECK_THROWS_AS(covering_degree(X(), X()), DegenerateCovering);
}

TEST_CASE("exact Belyi checks") {
  Params p{Case::B, 2, 3, 1, 0};
  BelyiData good{UniPoly({Rational(-1, 2), Rational(3, 2)}), UniPoly::constant(1), p, Scalar(Rational(3, 2))};
  CHECK(check_belyi(good).passed());
  BelyiData zero_root{UniPoly({0, 1}), UniPoly::constant(1), p, Scalar(0)};
  VerificationReport rep = check_belyi(zero_root);
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.find("g1 g2 (0) != 0")->pass);
  BelyiData wrong_mu = good;
  wrong_mu.mu_h = 2;
  CHECK_FALSE(check_belyi(wrong_mu).passed());
}

TEST_CASE("delta invariant") {
  CHECK(delta_invariant(2, 3) == 1);
  CHECK(delta_invariant(1, 7) == 0);
  CHECK(delta_invariant(3, 4) == 3);
  for (long p = 1; p <= 30; ++p)
    for (long q = 1; q <= 30; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CHECK(delta_invariant(p, q) == (p - 1) * (q - 1) / 2);
      CHECK(delta_invariant(p, q) == delta_invariant(q, p));
    }
  CHECK_THROWS(delta_invariant(2, 4));
}

TEST_CASE("local intersection") {
  CHECK(local_intersection(X(), Y()) == 1);
  CHECK(local_intersection(X().pow(2) - Y().pow(3), X().pow(2).scaled(2) - Y().pow(3)) == 6);
  CHECK(local_intersection(X().pow(3) - Y().pow(4), X().pow(3).scaled(5) - Y().pow(4)) == 12);
  CHECK(local_intersection(X() + BiPoly::constant(1), Y()) == 0);
  BiPoly f = Y().pow(2) - X().pow(3), g = Y() - X(), h = Y() + X().pow(2);
  CHECK(local_intersection(f, g * h) == local_intersection(f, g) + local_intersection(f, h));
  CHECK(local_intersection(f, g) == local_intersection(g, f));
  CHECK(local_intersection(f, h) == local_intersection(h, f));
  CHECK_THROWS(local_intersection(f, f * g));
}

TEST_CASE("extra property identities") {
  CHECK(extra_rhs(2, 3) == 3);
  CHECK(extra_rhs(2, 5) == 5);
  CHECK(extra_rhs(3, 4) == 8);
  CHECK(extra_rhs(3, 7) == 14);
  std::array<std::string, 2> v{"x1", "x2"};
  CHECK(phi_polynomial(2) == (BiPoly::x(v).pow(2) + BiPoly::x(v) * BiPoly::y(v) + BiPoly::y(v).pow(2)).scaled(Rational(1, 3)));
  CHECK(phi_polynomial(1)(1, 1) == Scalar(1));
  for (long p = 1; p <= 5; ++p) CHECK(phi_polynomial(p)(3, 3) == Scalar(3).pow(static_cast<unsigned>(p)));
  CHECK(check_fiber_split(2, 3).passed());
  CHECK(check_fiber_split(3, 2).passed());
  CHECK(check_fiber_split(4, 3).passed());
  VerificationReport e = check_extra_identity(2, 3);
  CHECK(e.passed());
  CHECK(e.checks.front().witness.rfind("(R,D)=6", 0) == 0);
  CHECK(check_extra_identity(2, 5).checks.front().witness.rfind("(R,D)=10", 0) == 0);
  CHECK(check_extra_identity(3, 7).passed());
  CHECK_THROWS(check_extra_identity(3, 2));
}

TEST_CASE("verify_covering on builder outputs") {
  VerificationReport p = verify_covering(build_p_series());
  CHECK(p.passed());
  VerificationReport e = verify_covering(build_extra_map(2, 3));
  CHECK(e.passed());
  CHECK_FALSE(e.tolerance.has_value());
  for (long k2 : {3, 5, 7}) CHECK(verify_covering(build_row2(2, k2, 2)).passed());
  CHECK(verify_covering(build_a_n3(2, 3, -1)).passed());
  CoveringMap wrong = build_row1(2, 3, 1);
  wrong.params = Params{Case::A, 2, 5, 1, 0};
  CHECK_FALSE(verify_covering(wrong).passed());
}
