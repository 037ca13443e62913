#include "covgerm/covering.hpp"

#include <algorithm>

#include "covgerm/poly_json.hpp"

namespace covgerm {

namespace {

using Vars = std::array<std::string, 2>;
const Vars kXY{"x", "y"};

BiPoly ramification_form(const CoveringMap& f) {
  if (f.frame == Frame::Axis) return BiPoly::y();
  BiPoly form = BiPoly::monomial(1, 0, static_cast<int>(f.params.k2));
  form.add_term(-1, static_cast<int>(f.params.k1), 0);
  return form;
}

Scalar monomial_coefficient(const UniPoly& p, long degree, const char* what) {
  if (p.degree() != degree || p.order() != degree)
    throw std::logic_error(std::string("builder produced a non-monomial pushforward of ") + what + ": " +
                           p.to_string());
  return p.coeff(static_cast<int>(degree));
}

// Fill in mu and the pushforward constants of a freshly built map.
CoveringMap finalize(CoveringMap f) {
  f.derived = validate(f.params);
  BiPoly jac = f.u.derivative(Var::First) * f.v.derivative(Var::Second) -
               f.u.derivative(Var::Second) * f.v.derivative(Var::First);
  auto q = exact_divide(jac, ramification_form(f).pow(static_cast<unsigned>(f.derived.n - 1)));
  if (!q || !q->is_constant() || q->is_zero())
    throw std::logic_error("builder " + f.builder + " produced a map without the Jacobian shape");
  f.mu = q->coeff(0, 0);
  UniPoly pu, pv;
  if (f.frame == Frame::Axis) {
    pu = f.u.substitute_monomial(1, 1, 0, 0, "s");
    pv = f.v.substitute_monomial(1, 1, 0, 0, "s");
  } else {
    int k1 = static_cast<int>(f.params.k1), k2 = static_cast<int>(f.params.k2);
    pu = f.u.substitute_monomial(1, k2, 1, k1, "s");
    pv = f.v.substitute_monomial(1, k2, 1, k1, "s");
  }
  f.pushforward_constants = {monomial_coefficient(pu, f.derived.d2, "u"),
                             monomial_coefficient(pv, f.derived.d1, "v")};
  return f;
}

// g(y^k2 / x^k1)·x^(k1·deg) as a bivariate polynomial, shifted by x^sx y^sy.
BiPoly homogenize(const UniPoly& g, long deg, long k1, long k2, int sx, int sy) {
  if (g.degree() > deg) throw BelyiError("g has degree above its slot l_i");
  BiPoly out(kXY, g.ext());
  for (int j = 0; j <= g.degree(); ++j)
    out.add_term(g.coeff(j), static_cast<int>(k1 * (deg - j)) + sx, static_cast<int>(k2 * j) + sy);
  return out;
}

// Read g back from Σ c_j y^(k2 j) x^(k1 (deg - j)) shifted by x^sx y^sy.
std::optional<UniPoly> dehomogenize(const BiPoly& p, long deg, long k1, long k2, int sx, int sy) {
  std::vector<Scalar> c(static_cast<size_t>(deg + 1));
  for (const auto& [e, v] : p.terms()) {
    long i = e.i - sx, j = e.j - sy;
    if (i < 0 || j < 0 || j % k2 != 0) return std::nullopt;
    long jj = j / k2;
    if (jj > deg || i != k1 * (deg - jj)) return std::nullopt;
    c[static_cast<size_t>(jj)] = v;
  }
  return UniPoly(std::move(c), "t", p.ext());
}

}  // namespace

UniPoly binomial_jet(const Rational& e, int order, const std::string& var) {
  std::vector<Scalar> c;
  Rational coeff = 1;
  for (int i = 0; i <= order; ++i) {
    c.emplace_back(coeff);
    coeff = coeff * (e - i) / (i + 1);
  }
  return UniPoly(std::move(c), var);
}

UniPoly jet_series(long m2, long d1, long l1) {
  if (d1 < 1 || l1 < 0) throw std::invalid_argument("jet_series needs d1 >= 1, l1 >= 0");
  return binomial_jet(Rational(m2, d1), static_cast<int>(l1));
}

UniPoly h_polynomial(const UniPoly& g1, const UniPoly& g2, const Params& p) {
  DerivedData d = validate(p);
  UniPoly t = UniPoly::monomial(1, 1, g1.var(), join_ext(g1.ext(), g2.ext()));
  return (g1 * g2).scaled(d.m2) - (t * g1.derivative() * g2).scaled(d.d1) +
         (t * g1 * g2.derivative()).scaled(d.d2);
}

UniPoly belyi_numerator(const UniPoly& g1, const UniPoly& g2, const Params& p) {
  DerivedData d = validate(p);
  UniPoly tm = UniPoly::monomial(1, static_cast<int>(d.m2), g1.var(), join_ext(g1.ext(), g2.ext()));
  return tm * g2.pow(static_cast<unsigned>(d.d2)) - g1.pow(static_cast<unsigned>(d.d1));
}

Scalar belyi_mu(const UniPoly& g1, const UniPoly& g2, const Params& p) {
  DerivedData d = validate(p);
  if (g1.degree() != p.l1 || g2.degree() != p.l2) throw BelyiError("deg g_i must equal l_i");
  if (!g1(1).is_one() || !g2(1).is_one()) throw BelyiError("g_i(1) must be 1");
  if (g1(0).is_zero() || g2(0).is_zero()) throw BelyiError("g_i(0) must be nonzero");
  if (root_multiplicity(belyi_numerator(g1, g2, p), 1) < d.n)
    throw BelyiError("t^m2 g2^d2 - g1^d1 is not divisible by (t-1)^n");
  UniPoly base = UniPoly::linear_root(1, g1.var()).pow(static_cast<unsigned>(d.n - 1));
  auto q = exact_divide(h_polynomial(g1, g2, p), base);
  if (!q || q->degree() != 0) throw BelyiError("h is not a constant multiple of (t-1)^(n-1)");
  return q->coeff(0);
}

std::optional<BelyiData> jet_belyi(const Params& p) {
  DerivedData d = validate(p);
  UniPoly one = UniPoly::constant(1);
  BelyiData b;
  b.params = p;
  if (p.l2 == 0) {
    b.g1 = jet_series(d.m2, d.d1, p.l1).with_var("t").shifted(-1);
    b.g2 = one;
  } else if (p.l1 == 0 && p.kase == Case::B) {
    b.g1 = one;
    b.g2 = binomial_jet(Rational(-d.m2, d.d2), static_cast<int>(p.l2)).with_var("t").shifted(-1);
  } else {
    return std::nullopt;
  }
  b.mu_h = belyi_mu(b.g1, b.g2, p);
  return b;
}

CoveringMap from_belyi(const BelyiData& b) {
  Scalar mu_h = belyi_mu(b.g1, b.g2, b.params);
  if (!(mu_h == b.mu_h)) throw BelyiError("stored mu_h disagrees with h");
  const Params& p = b.params;
  int nu = p.kase == Case::A ? 0 : 1;
  CoveringMap f;
  f.params = p;
  f.builder = "from_belyi";
  f.u = homogenize(b.g1, p.l1, p.k1, p.k2, nu, 0);
  f.v = homogenize(b.g2, p.l2, p.k1, p.k2, 1 - nu, 1);
  return finalize(std::move(f));
}

std::optional<BelyiData> extract_belyi(const CoveringMap& f) {
  if (f.frame != Frame::Standard) return std::nullopt;
  const Params& p = f.params;
  int nu = p.kase == Case::A ? 0 : 1;
  auto g1 = dehomogenize(f.u, p.l1, p.k1, p.k2, nu, 0);
  auto g2 = dehomogenize(f.v, p.l2, p.k1, p.k2, 1 - nu, 1);
  if (!g1 || !g2) return std::nullopt;
  BelyiData b{*g1, *g2, p, Scalar(0)};
  try {
    b.mu_h = belyi_mu(b.g1, b.g2, p);
  } catch (const BelyiError&) {
    return std::nullopt;
  }
  return b;
}

CoveringMap build_row1(long k1, long k2, long l1) {
  Params p{Case::A, k1, k2, l1, 0};
  auto b = jet_belyi(p);
  CoveringMap f = from_belyi(*b);
  f.builder = "row1";
  return f;
}

CoveringMap build_row2(long k1, long k2, long l1) {
  Params p{Case::B, k1, k2, l1, 0};
  DerivedData d = validate(p);
  BiPoly base = BiPoly::monomial(1, static_cast<int>(k1), 0);
  base.add_term(-1, 0, static_cast<int>(k2));
  BiPoly integrand = base.pow(static_cast<unsigned>(d.n - 1));
  BiPoly u(kXY);
  for (const auto& [e, c] : integrand.terms()) u.add_term(c / Scalar(e.i + 1), e.i + 1, e.j);
  Scalar at_one = u(1, 1);
  CoveringMap f;
  f.params = p;
  f.builder = "row2";
  f.u = u.scaled(at_one.inverse());
  f.v = BiPoly::y();
  return finalize(std::move(f));
}

CoveringMap build_p_series() {
  CoveringMap f;
  f.params = Params{Case::B, 1, 1, 2, 4};
  f.frame = Frame::Axis;
  f.builder = "p_series";
  f.u = BiPoly(BiPoly::Terms{{{3, 0}, 1}, {{1, 2}, 9}, {{0, 3}, 9}}, kXY);
  f.v = BiPoly(BiPoly::Terms{{{5, 0}, 1}, {{3, 2}, 15}, {{2, 3}, 15}, {{1, 4}, 45}, {{0, 5}, 90}}, kXY);
  return finalize(std::move(f));
}

CoveringMap build_a_n3(long k1, long k2, int sign) {
  Params p{Case::A, k1, k2, 1, 1};
  DerivedData d = validate(p);
  Scalar s = Scalar::sqrt_of(-d.d1) * Scalar(sign < 0 ? -1 : 1);
  if (s.is_rational()) throw std::logic_error("-d1 cannot be a rational square");
  long ext = s.ext();
  const int e1 = static_cast<int>(k1), e2 = static_cast<int>(k2);
  Scalar denom = Scalar(k1 + k2).inverse();
  BiPoly A(kXY, ext), B(kXY, ext);
  A.add_term(Scalar(k2) * denom, e1, 0);
  A.add_term(Scalar(k1) * denom, 0, e2);
  B.add_term(denom, e1, 0);
  B.add_term(-denom, 0, e2);
  CoveringMap f;
  f.params = p;
  f.builder = "a_n3";
  f.u = A - B.scaled(Scalar(d.d2) / s);
  f.v = (A + B.scaled(s)).shifted(1, 1);
  return finalize(std::move(f));
}

CoveringMap build_b_n3(long k1, long k2, int sign) {
  Params p{Case::B, k1, k2, 1, 1};
  validate(p);
  if (k1 == k2) throw std::invalid_argument("b_n3 needs k1 != k2");
  Scalar s = Scalar::sqrt_of(k1 * k2) * Scalar(sign < 0 ? -1 : 1);
  long ext = s.ext();
  Scalar a = Scalar(k1 + 1) * (Scalar(k1) + s) / Scalar(k1 * (k1 - k2));
  Scalar b = Scalar(k2 + 1) * (Scalar(k2) + s) / Scalar(k2 * (k2 - k1));
  const int e1 = static_cast<int>(k1), e2 = static_cast<int>(k2);
  CoveringMap f;
  f.params = p;
  f.builder = "b_n3";
  f.u = BiPoly(kXY, ext);
  f.u.add_term(a, 1, e2);
  f.u.add_term(Scalar(1) - a, 1 + e1, 0);
  f.v = BiPoly(kXY, ext);
  f.v.add_term(b, e1, 1);
  f.v.add_term(Scalar(1) - b, 0, 1 + e2);
  return finalize(std::move(f));
}

CoveringMap build_extra_map(long p, long q) {
  CoveringMap f;
  f.params = Params{Case::B, p, q, 1, 0};
  f.builder = "extra";
  f.u = BiPoly(kXY);
  f.u.add_term(p + 1, 1, static_cast<int>(q));
  f.u.add_term(-1, static_cast<int>(p + 1), 0);
  f.v = BiPoly::y();
  return finalize(std::move(f));
}

std::vector<std::string> closed_forms(const Params& p) {
  validate(p);
  std::vector<std::string> out;
  if (p.kase == Case::A && p.l2 == 0) out.push_back("row1");
  if (p.kase == Case::B && p.k1 == 1 && p.l2 == 1 && p.l1 >= 1) out.push_back("row1");
  if (p.kase == Case::B && p.l2 == 0) out.push_back("row2");
  if (p.l2 == 0 || (p.kase == Case::B && p.l1 == 0)) out.push_back("jet");
  if (p.kase == Case::A && p.l1 == 1 && p.l2 == 1) out.push_back("a_n3");
  if (p.kase == Case::B && p.l1 == 1 && p.l2 == 1 && p.k1 != p.k2) out.push_back("b_n3");
  if (p == Params{Case::B, 1, 1, 2, 4}) out.push_back("p_series");
  return out;
}

CoveringMap build_closed(const Params& p, const std::string& builder, int sign) {
  auto avail = closed_forms(p);
  if (std::find(avail.begin(), avail.end(), builder) == avail.end())
    throw std::invalid_argument("no closed form '" + builder + "' for " + p.to_string());
  if (builder == "row1")
    return p.kase == Case::A ? build_row1(p.k1, p.k2, p.l1) : build_row1(1, p.k2, p.l1 + 1);
  if (builder == "row2") return build_row2(p.k1, p.k2, p.l1);
  if (builder == "jet") {
    CoveringMap f = from_belyi(*jet_belyi(p));
    f.builder = "jet";
    return f;
  }
  if (builder == "a_n3") return build_a_n3(p.k1, p.k2, sign);
  if (builder == "b_n3") return build_b_n3(p.k1, p.k2, sign);
  return build_p_series();
}

nlohmann::json to_json(const CoveringMap& f) {
  long ext = f.ext();
  return {{"params", to_json(f.params)},
          {"derived", to_json(f.derived)},
          {"frame", f.frame == Frame::Axis ? "axis" : "standard"},
          {"builder", f.builder},
          {"u", json_io::to_json(f.u.with_ext(ext))},
          {"v", json_io::to_json(f.v.with_ext(ext))},
          {"mu", json_io::scalar_to_json(f.mu, ext)},
          {"pushforward_constants",
           {json_io::scalar_to_json(f.pushforward_constants.first, ext),
            json_io::scalar_to_json(f.pushforward_constants.second, ext)}}};
}

CoveringMap covering_from_json(const nlohmann::json& j) {
  CoveringMap f;
  f.params = params_from_json(j.at("params"));
  f.derived = validate(f.params);
  std::string frame = j.value("frame", "standard");
  if (frame != "standard" && frame != "axis") throw json_io::FormatError("frame must be standard or axis");
  f.frame = frame == "axis" ? Frame::Axis : Frame::Standard;
  f.builder = j.value("builder", "");
  f.u = json_io::bipoly_from_json(j.at("u"));
  f.v = json_io::bipoly_from_json(j.at("v"));
  if (j.contains("mu")) f.mu = json_io::scalar_from_json(j.at("mu"));
  if (j.contains("pushforward_constants")) {
    const auto& c = j.at("pushforward_constants");
    f.pushforward_constants = {json_io::scalar_from_json(c.at(0)), json_io::scalar_from_json(c.at(1))};
  }
  return f;
}

nlohmann::json to_json(const BelyiData& b) {
  long ext = join_ext(b.g1.ext(), b.g2.ext());
  return {{"params", to_json(b.params)},
          {"g1", json_io::to_json(b.g1.with_ext(ext))},
          {"g2", json_io::to_json(b.g2.with_ext(ext))},
          {"mu_h", json_io::scalar_to_json(b.mu_h, ext)}};
}

}  // namespace covgerm
