#include "covgerm/poly_json.hpp"

namespace covgerm::json_io {

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw FormatError("not a rational: '" + s + "'");
  if (q.get_den() == 0) throw FormatError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

json scalar_coeff_to_json(const Scalar& s) {
  if (s.is_rational()) return json::array({rational_to_string(s.a())});
  return json::array({rational_to_string(s.a()), rational_to_string(s.b())});
}

Scalar scalar_coeff_from_json(const json& j, long ext) {
  if (!j.is_array() || j.empty() || j.size() > 2) throw FormatError("coefficient must be [a] or [a, b]");
  Rational a = rational_from_string(j[0].get<std::string>());
  if (j.size() == 1) return Scalar(a);
  Rational b = rational_from_string(j[1].get<std::string>());
  if (sgn(b) == 0) return Scalar(a);
  if (ext == 0) throw FormatError("irrational coefficient in a rational ring");
  return Scalar::quadratic(a, b, ext);
}

namespace {

json ext_to_json(long ext) {
  if (ext == 0) return nullptr;
  return json{{"D", ext}};
}

long ext_from_json(const json& j) {
  if (j.is_null()) return 0;
  long d = j.at("D").get<long>();
  if (d == 0 || d == 1 || split_square(d).factor != 1) throw FormatError("D must be square-free and not 0 or 1");
  return d;
}

}  // namespace

json scalar_to_json(const Scalar& s, long ext) {
  return json{{"ext", ext_to_json(join_ext(ext, s.ext()))}, {"c", scalar_coeff_to_json(s)}};
}

Scalar scalar_from_json(const json& j) { return scalar_coeff_from_json(j.at("c"), ext_from_json(j.at("ext"))); }

json ring_to_json(const std::vector<std::string>& vars, long ext) {
  return json{{"vars", vars}, {"ext", ext_to_json(ext)}};
}

json to_json(const BiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json{{"e", {e.i, e.j}}, {"c", scalar_coeff_to_json(c)}});
  return json{{"ring", ring_to_json({p.vars()[0], p.vars()[1]}, p.ext())}, {"terms", terms}};
}

BiPoly bipoly_from_json(const json& j) {
  const json& ring = j.at("ring");
  auto vars = ring.at("vars").get<std::vector<std::string>>();
  if (vars.size() != 2) throw FormatError("bivariate ring needs two variable names");
  long ext = ext_from_json(ring.at("ext"));
  BiPoly p({vars[0], vars[1]}, ext);
  for (const auto& t : j.at("terms")) {
    const auto& e = t.at("e");
    if (!e.is_array() || e.size() != 2) throw FormatError("bivariate exponent must be [i, j]");
    Scalar c = scalar_coeff_from_json(t.at("c"), ext);
    if (c.is_zero()) throw FormatError("stored zero coefficient");
    int i = e[0].get<int>(), k = e[1].get<int>();
    if (!p.coeff(i, k).is_zero()) throw FormatError("duplicate exponent");
    p.add_term(c, i, k);
  }
  return p;
}

json to_json(const UniPoly& p) {
  json terms = json::array();
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i).is_zero()) continue;
    terms.push_back(json{{"e", {i}}, {"c", scalar_coeff_to_json(p.coeff(i))}});
  }
  return json{{"ring", ring_to_json({p.var()}, p.ext())}, {"terms", terms}};
}

UniPoly unipoly_from_json(const json& j) {
  const json& ring = j.at("ring");
  auto vars = ring.at("vars").get<std::vector<std::string>>();
  if (vars.size() != 1) throw FormatError("univariate ring needs one variable name");
  long ext = ext_from_json(ring.at("ext"));
  std::vector<Scalar> coeffs;
  for (const auto& t : j.at("terms")) {
    const auto& e = t.at("e");
    if (!e.is_array() || e.size() != 1) throw FormatError("univariate exponent must be [i]");
    int i = e[0].get<int>();
    if (i < 0) throw FormatError("negative exponent");
    if (static_cast<int>(coeffs.size()) <= i) coeffs.resize(static_cast<size_t>(i) + 1);
    coeffs[static_cast<size_t>(i)] = scalar_coeff_from_json(t.at("c"), ext);
  }
  return UniPoly(std::move(coeffs), vars[0], ext);
}

}  // namespace covgerm::json_io
