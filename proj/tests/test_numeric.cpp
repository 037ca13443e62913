#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "covgerm/covering.hpp"
#include "covgerm/numeric.hpp"
#include "covgerm/resultant.hpp"
#include "covgerm/verify.hpp"

using namespace covgerm;

namespace {

Real distance_to_closed(const NumericBelyi& num, const Params& p, const std::string& builder) {
  Real best = -1;
  for (int sign : {1, -1}) {
    auto exact = extract_belyi(build_closed(p, builder, sign));
    REQUIRE(exact);
    Real d = std::max(max_abs_diff(num.g1, to_complex(exact->g1)), max_abs_diff(num.g2, to_complex(exact->g2)));
    if (best < 0 || d < best) best = d;
  }
  return best;
}

}  // namespace

TEST_CASE("complex embedding of quadratic scalars") {
  PrecisionScope scope(256);
  Complex c = Complex::from(Scalar::quadratic(1, 2, -5));
  CHECK(c.re == 1);
  CHECK(abs(c.im * c.im - 20) < Real("1e-70"));
  Complex r = Complex::from(Scalar::sqrt_of(2));
  CHECK(abs(r.re * r.re - 2) < Real("1e-70"));
  CHECK(r.im == 0);
}

TEST_CASE("numeric resultant matches the exact one") {
  PrecisionScope scope(256);
  UniPoly a({-2, 0, 1}), b({3, -4, 0, 1});
  BiPoly pa, pb;
  for (int i = 0; i <= a.degree(); ++i) pa.add_term(a.coeff(i), 0, i);
  for (int i = 0; i <= b.degree(); ++i) pb.add_term(b.coeff(i), 0, i);
  Scalar exact = resultant(pa, pb, Var::Second).coeff(0);
  Complex num = numeric_resultant(to_complex(a), to_complex(b));
  CHECK(abs(num.re - to_real(exact.a())) < Real("1e-60"));
  CHECK(abs(num.im) < Real("1e-60"));
}

TEST_CASE("Newton recovers the quadratic-surd solutions") {
  PrecisionScope scope(256);
  NumericBelyi b = solve_belyi_numeric({Case::B, 1, 2, 1, 1});
  CHECK(distance_to_closed(b, {Case::B, 1, 2, 1, 1}, "b_n3") < Real("1e-25"));
  CHECK(b.residual_belyi < Real("1e-20"));
  NumericBelyi a = solve_belyi_numeric({Case::A, 1, 2, 1, 1});
  CHECK(distance_to_closed(a, {Case::A, 1, 2, 1, 1}, "a_n3") < Real("1e-25"));
  CHECK(check_belyi(a, 1e-20).passed());
}

TEST_CASE("Newton solution without a closed form") {
  Params p{Case::B, 1, 2, 1, 2};
  NumericBelyi b = solve_belyi_numeric(p);
  PrecisionScope scope(256);
  CHECK(b.residual_belyi < Real("1e-20"));
  CHECK(b.residual_h < Real("1e-20"));
  CHECK(check_belyi(b, 1e-20).passed());
  NumericMap f = numeric_from_belyi(b);
  CHECK(verify_numeric(f, 1e-20).passed());
  NumericMap back = numeric_map_from_json(to_json(f));
  CHECK(verify_numeric(back, 1e-20).passed());
}

TEST_CASE("solver is deterministic under a seed") {
  NumericBelyi x = solve_belyi_numeric({Case::B, 1, 2, 1, 2});
  NumericBelyi y = solve_belyi_numeric({Case::B, 1, 2, 1, 2});
  PrecisionScope scope(256);
  CHECK(to_json(x) == to_json(y));
}

TEST_CASE("tolerance mode catches a perturbed map") {
  NumericBelyi b = solve_belyi_numeric({Case::B, 1, 2, 1, 2});
  PrecisionScope scope(256);
  NumericMap f = numeric_from_belyi(b);
  f.u.add_term(Complex(Real("1e-10")), 1, 1);
  VerificationReport rep = verify_numeric(f, 1e-20);
  CHECK_FALSE(rep.find("check_jacobian_form")->pass);
  CHECK(rep.tolerance == 1e-20);
}

TEST_CASE("invalid or degenerate tuples") {
  CHECK_THROWS_AS(solve_belyi_numeric({Case::B, 1, 2, 2, 1}), InvalidParams);
  NumericOptions loose;
  loose.require_valid = false;
  CHECK_THROWS_AS(solve_belyi_numeric({Case::B, 1, 2, 2, 1}, loose), NonConvergence);
  NumericOptions low;
  low.precision_bits = 64;
  CHECK_THROWS_AS(solve_belyi_numeric({Case::B, 1, 2, 1, 1}, low), std::invalid_argument);
}
