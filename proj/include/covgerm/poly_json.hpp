#pragma once

#include <json.hpp>

#include "covgerm/bipoly.hpp"
#include "covgerm/scalar.hpp"
#include "covgerm/unipoly.hpp"

// Wire format shared by every module:
//
//   {"ring":  {"vars": ["x","y"], "ext": null | {"D": -5}},
//    "terms": [{"e": [i, j], "c": ["num/den"] | ["num/den", "num/den"]}]}
//
// "c" = [a, b] stands for a + b·√D, [a] for a rational. Terms are written in
// increasing exponent order so serialization is canonical and round-trips
// byte for byte.

namespace covgerm::json_io {

using nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

json scalar_coeff_to_json(const Scalar& s);
Scalar scalar_coeff_from_json(const json& j, long ext);

/// Standalone scalar: {"ext": null | {"D": d}, "c": [...]}.
json scalar_to_json(const Scalar& s, long ext);
Scalar scalar_from_json(const json& j);

json ring_to_json(const std::vector<std::string>& vars, long ext);

json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const json& j);

json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const json& j);

}  // namespace covgerm::json_io
