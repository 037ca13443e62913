#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "covgerm/bipoly.hpp"
#include "covgerm/covering.hpp"
#include "covgerm/numeric.hpp"
#include "covgerm/report.hpp"

namespace covgerm {

constexpr std::uint64_t kDefaultSeed = 0x5eed;

BiPoly jacobian(const BiPoly& u, const BiPoly& v);
BiPoly jacobian(const CoveringMap& f);

/// y^k2 - x^k1, or y in the axis frame.
BiPoly ramification_form(const CoveringMap& f);

struct JacobianCheck {
  bool pass = false;
  Scalar mu;
  std::string witness;
};

/// J(u, v) = mu·form^(n-1) with mu a nonzero constant.
JacobianCheck check_jacobian_form(const BiPoly& u, const BiPoly& v, const BiPoly& form, long n);
JacobianCheck check_jacobian_form(const CoveringMap& f);

struct PushforwardCheck {
  bool pass = false;
  Scalar c1, c2;
  std::string witness;
};

/// u(γ(s)) = c1 s^d2 and v(γ(s)) = c2 s^d1 with c1, c2 != 0, where
/// γ(s) = (s^k2, s^k1), or (s, 0) in the axis frame.
PushforwardCheck check_pushforward(const CoveringMap& f);

class DegenerateCovering : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Size of a generic fiber: degree in x of Res_y(u - u0, v - v0) for seeded
/// random rational targets, requiring a squarefree resultant and the same
/// degree for three targets.
long covering_degree(const BiPoly& u, const BiPoly& v, std::uint64_t seed = kDefaultSeed);
long covering_degree(const CoveringMap& f, std::uint64_t seed = kDefaultSeed);

VerificationReport check_belyi(const BelyiData& b);
/// Tolerance-mode check of numeric Belyi data; residuals recomputed here.
VerificationReport check_belyi(const NumericBelyi& b, double eps);

/// Number of gaps of the numerical semigroup ⟨p, q⟩, by sieve.
long delta_invariant(long p, long q);

/// Intersection multiplicity at the origin: order at x = 0 of Res_y(f, g),
/// under seeded random shears until two consecutive values agree.
long local_intersection(const BiPoly& f, const BiPoly& g, std::uint64_t seed = kDefaultSeed);

/// 2·δ(p, q) + p - 1.
long extra_rhs(long p, long q);

/// Φ with (p+1)Φ(x1, x2) = (x1^(p+1) - x2^(p+1)) / (x1 - x2).
BiPoly phi_polynomial(long p);

VerificationReport check_fiber_split(long p, long q);
VerificationReport check_extra_identity(long p, long q, std::uint64_t seed = kDefaultSeed);

/// Jacobian shape, pushforward, degree N, and the branch-image identity.
VerificationReport verify_covering(const CoveringMap& f, std::uint64_t seed = kDefaultSeed);
/// Tolerance-mode counterpart for maps with numeric coefficients.
VerificationReport verify_numeric(const NumericMap& f, double eps);

}  // namespace covgerm
