#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "covgerm/bipoly.hpp"
#include "covgerm/ramdata.hpp"
#include "covgerm/unipoly.hpp"

namespace covgerm {

/// Which curve the map ramifies along: y^k2 = x^k1 (standard) or y = 0 (axis).
enum class Frame { Standard, Axis };

struct CoveringMap {
  BiPoly u, v;
  Params params;
  DerivedData derived;
  Frame frame = Frame::Standard;
  std::string builder;
  /// J(F) = mu·form^(n-1), form = y^k2 - x^k1 (standard) or y (axis).
  Scalar mu;
  /// F(γ(s)) = (c1 s^d2, c2 s^d1) along the ramification curve.
  std::pair<Scalar, Scalar> pushforward_constants{1, 1};
  long ext() const { return join_ext(u.ext(), v.ext()); }
};

/// Polynomial data (g1, g2) of a Belyi function g = t^m2 g2^d2 / g1^d1.
struct BelyiData {
  UniPoly g1, g2;
  Params params;
  Scalar mu_h;
};

class BelyiError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Σ_{i<=order} C(e, i) T^i for a rational exponent e.
UniPoly binomial_jet(const Rational& e, int order, const std::string& var = "T");
/// l1-jet of (1 + T)^(m2/d1).
UniPoly jet_series(long m2, long d1, long l1);

/// m2 g1 g2 - d1 t g1' g2 + d2 t g1 g2'
UniPoly h_polynomial(const UniPoly& g1, const UniPoly& g2, const Params& p);
/// t^m2 g2^d2 - g1^d1
UniPoly belyi_numerator(const UniPoly& g1, const UniPoly& g2, const Params& p);
/// Check the Belyi-data invariants and return the constant mu_h; throws BelyiError.
Scalar belyi_mu(const UniPoly& g1, const UniPoly& g2, const Params& p);

/// Closed-form Belyi data when one of (l1, l2) vanishes (g on the other side
/// is a binomial jet). nullopt otherwise.
std::optional<BelyiData> jet_belyi(const Params& p);

/// u = x^ν G1, v = x^(1-ν) y G2 with G_i = g_i(y^k2/x^k1) x^(k1 l_i).
CoveringMap from_belyi(const BelyiData& b);
/// Inverse of from_belyi on maps of that shape (standard frame); nullopt when
/// u or v is not of the form above.
std::optional<BelyiData> extract_belyi(const CoveringMap& f);

CoveringMap build_row1(long k1, long k2, long l1);
CoveringMap build_row2(long k1, long k2, long l1);
CoveringMap build_p_series();
CoveringMap build_a_n3(long k1, long k2, int sign);
CoveringMap build_b_n3(long k1, long k2, int sign);
/// u = (p+1) x y^q - x^(p+1), v = y.
CoveringMap build_extra_map(long p, long q);

/// Closed-form constructions available for valid params, as builder names:
/// "row1", "row2", "jet", "a_n3", "b_n3", "p_series".
std::vector<std::string> closed_forms(const Params& p);
/// Build with a named closed form; sign picks s = ±√· for the n = 3 families.
CoveringMap build_closed(const Params& p, const std::string& builder, int sign = 1);

nlohmann::json to_json(const CoveringMap& f);
CoveringMap covering_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BelyiData& b);

}  // namespace covgerm
