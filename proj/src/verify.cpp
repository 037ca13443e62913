#include "covgerm/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "covgerm/resultant.hpp"

namespace covgerm {

namespace {

Rational random_rational(std::mt19937_64& rng, long span = 30) {
  std::uniform_int_distribution<long> num(-span, span), den(1, 9);
  return Rational(num(rng), den(rng));
}

Rational random_shear(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 17), den(1, 7);
  return Rational(num(rng), den(rng));
}

// Coefficients of p(1 + τ) up to τ^(count-1).
CPoly taylor_at_one(CPoly p, size_t count) {
  CPoly out;
  for (size_t k = 0; k < count && !p.empty(); ++k) {
    // Synthetic division by (t - 1): remainder is the next Taylor coefficient.
    CPoly q(p.size() - 1);
    Complex carry;
    for (size_t i = p.size(); i-- > 0;) {
      carry = carry + p[i];
      if (i > 0) {
        q[i - 1] = carry;
      }
      if (i == 0) out.push_back(carry);
    }
    p = std::move(q);
  }
  out.resize(count);
  return out;
}

CPoly cmul(const CPoly& a, const CPoly& b) {
  if (a.empty() || b.empty()) return {};
  CPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

CPoly cpow(const CPoly& a, long e) {
  CPoly r{Complex(1)};
  for (long k = 0; k < e; ++k) r = cmul(r, a);
  return r;
}

CPoly cderiv(const CPoly& p) {
  CPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Complex(Real(static_cast<long>(i))));
  return d;
}

CPoly cadd(const CPoly& a, const CPoly& b, long sb) {
  CPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += Complex(Real(sb)) * b[i];
  return r;
}

// Squarefree over Q when squarefree modulo a prime not dividing the leading
// coefficient or any denominator; otherwise decided exactly.
bool squarefree(const UniPoly& p) {
  if (p.degree() <= 1) return true;
  bool rational = std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Scalar& c) { return c.is_rational(); });
  if (rational) {
    for (unsigned long prime : {2147483647UL, 2147483629UL, 2147483587UL}) {
      std::vector<unsigned long> c;
      bool usable = true;
      for (const auto& s : p.coeffs()) {
        mpz_class num = s.a().get_num() % prime, den = s.a().get_den() % prime;
        if (num < 0) num += prime;
        if (den == 0) {
          usable = false;
          break;
        }
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(prime).get_mpz_t());
        c.push_back(mpz_class(num * inv % prime).get_ui());
      }
      if (!usable || c.back() == 0) continue;
      auto mulmod = [prime](unsigned long a, unsigned long b) {
        return static_cast<unsigned long>(static_cast<unsigned __int128>(a) * b % prime);
      };
      auto powmod = [&](unsigned long a, unsigned long e) {
        unsigned long r = 1;
        for (; e; e >>= 1, a = mulmod(a, a))
          if (e & 1) r = mulmod(r, a);
        return r;
      };
      auto trim = [](std::vector<unsigned long>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
      };
      std::vector<unsigned long> a = c, b;
      for (size_t i = 1; i < c.size(); ++i) b.push_back(mulmod(c[i], i % prime));
      trim(b);
      while (!b.empty()) {
        unsigned long inv = powmod(b.back(), prime - 2);
        while (a.size() >= b.size()) {
          unsigned long f = mulmod(a.back(), inv);
          size_t shift = a.size() - b.size();
          for (size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + prime - mulmod(f, b[i])) % prime;
          trim(a);
          if (a.empty()) break;
        }
        std::swap(a, b);
      }
      if (a.size() == 1) return true;
    }
  }
  return is_squarefree(p);
}

std::string real_str(const Real& r) { return r.str(6, std::ios_base::scientific); }

}  // namespace

BiPoly jacobian(const BiPoly& u, const BiPoly& v) {
  return u.derivative(Var::First) * v.derivative(Var::Second) - u.derivative(Var::Second) * v.derivative(Var::First);
}

BiPoly jacobian(const CoveringMap& f) { return jacobian(f.u, f.v); }

BiPoly ramification_form(const CoveringMap& f) {
  if (f.frame == Frame::Axis) return BiPoly::y();
  BiPoly form = BiPoly::monomial(1, 0, static_cast<int>(f.params.k2));
  form.add_term(-1, static_cast<int>(f.params.k1), 0);
  return form;
}

JacobianCheck check_jacobian_form(const BiPoly& u, const BiPoly& v, const BiPoly& form, long n) {
  JacobianCheck r;
  BiPoly jac = jacobian(u, v);
  auto q = exact_divide(jac, form.pow(static_cast<unsigned>(n - 1)));
  if (!q) {
    r.witness = "J not divisible by form^(n-1): J = " + jac.to_string();
  } else if (!q->is_constant() || q->is_zero()) {
    r.witness = "quotient is not a nonzero constant: " + q->to_string();
  } else {
    r.pass = true;
    r.mu = q->coeff(0, 0);
    r.witness = "mu=" + r.mu.to_string();
  }
  return r;
}

JacobianCheck check_jacobian_form(const CoveringMap& f) {
  return check_jacobian_form(f.u, f.v, ramification_form(f), validate(f.params).n);
}

PushforwardCheck check_pushforward(const CoveringMap& f) {
  DerivedData d = validate(f.params);
  UniPoly pu, pv;
  if (f.frame == Frame::Axis) {
    pu = f.u.substitute_monomial(1, 1, 0, 0, "s");
    pv = f.v.substitute_monomial(1, 1, 0, 0, "s");
  } else {
    auto k1 = static_cast<int>(f.params.k1), k2 = static_cast<int>(f.params.k2);
    pu = f.u.substitute_monomial(1, k2, 1, k1, "s");
    pv = f.v.substitute_monomial(1, k2, 1, k1, "s");
  }
  PushforwardCheck r;
  auto monomial = [](const UniPoly& p, long deg) { return p.degree() == deg && p.order() == deg; };
  if (!monomial(pu, d.d2)) {
    r.witness = "u(gamma) = " + pu.to_string() + ", expected c*s^" + std::to_string(d.d2);
    return r;
  }
  if (!monomial(pv, d.d1)) {
    r.witness = "v(gamma) = " + pv.to_string() + ", expected c*s^" + std::to_string(d.d1);
    return r;
  }
  r.pass = true;
  r.c1 = pu.coeff(static_cast<int>(d.d2));
  r.c2 = pv.coeff(static_cast<int>(d.d1));
  r.witness = "c=(" + r.c1.to_string() + "," + r.c2.to_string() + ")";
  return r;
}

long covering_degree(const BiPoly& u, const BiPoly& v, std::uint64_t seed) {
  if (jacobian(u, v).is_zero()) throw DegenerateCovering("zero Jacobian: the map is not dominant");
  std::mt19937_64 rng(seed);
  std::optional<long> agreed;
  int agreeing = 0;
  for (int attempt = 0; attempt < 12 && agreeing < 3; ++attempt) {
    BiPoly p = u - BiPoly::constant(random_rational(rng), u.vars(), u.ext());
    BiPoly q = v - BiPoly::constant(random_rational(rng), v.vars(), v.ext());
    bool shear = p.degree_in(Var::Second) < 1 || q.degree_in(Var::Second) < 1;
    if (!shear) {
      UniPoly lp = p.as_poly_in(Var::Second).back(), lq = q.as_poly_in(Var::Second).back();
      shear = gcd(lp, lq).degree() > 0;
    }
    if (shear) {
      Scalar a(random_shear(rng));
      p = p.sheared(a);
      q = q.sheared(a);
      if (p.degree_in(Var::Second) < 1 || q.degree_in(Var::Second) < 1) continue;
    }
    UniPoly res = resultant(p, q, Var::Second);
    if (res.is_zero() || !squarefree(res)) continue;
    long deg = res.degree();
    if (agreed && *agreed != deg) throw DegenerateCovering("fiber size changes between generic targets");
    agreed = deg;
    ++agreeing;
  }
  if (agreeing < 3) throw DegenerateCovering("no three squarefree generic fibers found");
  return *agreed;
}

long covering_degree(const CoveringMap& f, std::uint64_t seed) { return covering_degree(f.u, f.v, seed); }

VerificationReport check_belyi(const BelyiData& b) {
  VerificationReport r;
  DerivedData d = validate(b.params);
  const UniPoly& g1 = b.g1;
  const UniPoly& g2 = b.g2;
  r.add("deg g_i = l_i", g1.degree() == b.params.l1 && g2.degree() == b.params.l2,
        std::to_string(g1.degree()) + "," + std::to_string(g2.degree()));
  r.add("g_i(1) = 1", g1(1).is_one() && g2(1).is_one(), g1(1).to_string() + "," + g2(1).to_string());
  r.add("g1 g2 (0) != 0", !g1(0).is_zero() && !g2(0).is_zero(), g1(0).to_string() + "," + g2(0).to_string());
  UniPoly t = UniPoly::monomial(1, 1, g1.var(), join_ext(g1.ext(), g2.ext()));
  UniPoly num = t.pow(static_cast<unsigned>(d.m2)) * g2.pow(static_cast<unsigned>(d.d2)) -
                g1.pow(static_cast<unsigned>(d.d1));
  int mult = num.is_zero() ? -1 : root_multiplicity(num, 1);
  r.add("(t-1)^n | t^m2 g2^d2 - g1^d1", mult >= d.n,
        "multiplicity " + std::to_string(mult) + ", n=" + std::to_string(d.n));
  UniPoly h = (g1 * g2).scaled(d.m2) - (t * g1.derivative() * g2).scaled(d.d1) + (t * g1 * g2.derivative()).scaled(d.d2);
  auto q = exact_divide(h, UniPoly::linear_root(1, g1.var()).pow(static_cast<unsigned>(d.n - 1)));
  bool prop = q && q->degree() == 0;
  r.add("h = mu (t-1)^(n-1)", prop && q->coeff(0) == b.mu_h,
        prop ? "mu_h=" + q->coeff(0).to_string() : "h=" + h.to_string());
  r.add("gcd(g1, g2) = 1", gcd(g1, g2).degree() == 0);
  r.add("h coprime to t g1 g2", !h.is_zero() && gcd(h, t * g1 * g2).degree() == 0);
  return r;
}

VerificationReport check_belyi(const NumericBelyi& b, double eps) {
  VerificationReport r;
  r.tolerance = eps;
  PrecisionScope scope(std::max(b.precision_bits, 128u));
  const DerivedData& d = b.derived;
  const Real tol(eps);
  const auto n = static_cast<size_t>(d.n);
  CPoly tpow(static_cast<size_t>(d.m2) + 1);
  tpow.back() = Complex(1);
  CPoly num = cadd(cmul(tpow, cpow(b.g2, d.d2)), cpow(b.g1, d.d1), -1);
  CPoly low = taylor_at_one(num, n);
  Real scale = 1;
  for (const auto& c : num) scale = std::max(scale, c.abs());
  Real worst = 0;
  for (const auto& c : low) worst = std::max(worst, c.abs());
  r.add("(t-1)^n | t^m2 g2^d2 - g1^d1", worst / scale <= tol, "residual " + real_str(worst / scale));

  CPoly t{Complex(0), Complex(1)};
  CPoly h = cmul(b.g1, b.g2);
  for (auto& c : h) c *= Complex(Real(d.m2));
  h = cadd(h, cmul(t, cmul(cderiv(b.g1), b.g2)), -d.d1);
  h = cadd(h, cmul(t, cmul(b.g1, cderiv(b.g2))), d.d2);
  CPoly ht = taylor_at_one(h, n);
  Complex mu = ht[n - 1];
  Real hres = 0;
  for (size_t k = 0; k + 1 < n; ++k) hres = std::max(hres, ht[k].abs());
  hres /= std::max(Real(1), mu.abs());
  r.add("h = mu (t-1)^(n-1)", hres <= tol && mu.abs() > tol, "residual " + real_str(hres));
  r.add("g_i(1) = 1", (evaluate(b.g1, Complex(1)) - Complex(1)).abs() <= tol &&
                          (evaluate(b.g2, Complex(1)) - Complex(1)).abs() <= tol);
  Real g10 = b.g1.empty() ? Real(0) : b.g1[0].abs();
  Real g20 = b.g2.empty() ? Real(0) : b.g2[0].abs();
  r.add("g1 g2 (0) != 0", g10 > tol && g20 > tol, real_str(g10) + "," + real_str(g20));
  Real res = numeric_resultant(b.g1, b.g2).abs();
  r.add("g1, g2 share no root", res > tol, "|Res(g1,g2)| = " + real_str(res));
  return r;
}

long delta_invariant(long p, long q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw std::invalid_argument("delta_invariant needs coprime p, q >= 1");
  // Every integer >= (p-1)(q-1) lies in ⟨p, q⟩, so sieving below it suffices.
  long bound = (p - 1) * (q - 1);
  std::vector<char> in(static_cast<size_t>(bound + 1), 0);
  in[0] = 1;
  for (long k = 1; k <= bound; ++k)
    in[static_cast<size_t>(k)] = (k >= p && in[static_cast<size_t>(k - p)]) || (k >= q && in[static_cast<size_t>(k - q)]);
  long gaps = 0;
  for (long k = 0; k < bound; ++k) gaps += in[static_cast<size_t>(k)] ? 0 : 1;
  return gaps;
}

long local_intersection(const BiPoly& f, const BiPoly& g, std::uint64_t seed) {
  if (!f(0, 0).is_zero() || !g(0, 0).is_zero()) return 0;
  std::mt19937_64 rng(seed);
  std::optional<long> prev;
  for (int attempt = 0; attempt < 16; ++attempt) {
    BiPoly a = f, b = g;
    if (attempt > 0) {
      Scalar s(random_shear(rng));
      a = f.sheared(s);
      b = g.sheared(s);
    }
    if (a.degree_in(Var::Second) < 1 || b.degree_in(Var::Second) < 1) continue;
    UniPoly res = resultant(a, b, Var::Second);
    if (res.is_zero()) throw std::invalid_argument("curves share a component through the origin");
    long ord = res.order();
    if (prev && *prev == ord) return ord;
    prev = ord;
  }
  throw std::runtime_error("intersection multiplicity did not stabilize");
}

long extra_rhs(long p, long q) {
  if (p < 2 || q <= p || std::gcd(p, q) != 1) throw std::invalid_argument("extra_rhs needs coprime 2 <= p < q");
  return 2 * delta_invariant(p, q) + p - 1;
}

BiPoly phi_polynomial(long p) {
  if (p < 1) throw std::invalid_argument("phi_polynomial needs p >= 1");
  const std::array<std::string, 2> vars{"x1", "x2"};
  BiPoly num(vars);
  num.add_term(1, static_cast<int>(p + 1), 0);
  num.add_term(-1, 0, static_cast<int>(p + 1));
  BiPoly den(vars);
  den.add_term(1, 1, 0);
  den.add_term(-1, 0, 1);
  auto q = exact_divide(num, den);
  if (!q) throw std::logic_error("x1 - x2 does not divide x1^(p+1) - x2^(p+1)");
  return q->scaled(Scalar(Rational(1, p + 1)));
}

VerificationReport check_fiber_split(long p, long q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) throw std::invalid_argument("fiber split needs coprime p, q >= 2");
  const std::array<std::string, 2> vars{"x1", "x2"};
  CoveringMap f = build_extra_map(p, q);
  // Polynomials in y with coefficients in Q[x1, x2].
  std::map<int, BiPoly> lhs, rhs;
  for (const auto& [e, c] : f.u.terms()) {
    auto [it, fresh] = lhs.try_emplace(e.j, BiPoly(vars));
    it->second.add_term(c, e.i, 0);
    it->second.add_term(-c, 0, e.i);
  }
  BiPoly diff(vars);
  diff.add_term(p + 1, 1, 0);
  diff.add_term(-(p + 1), 0, 1);
  rhs.emplace(static_cast<int>(q), diff);
  rhs.emplace(0, -(diff * phi_polynomial(p)));
  auto clean = [](std::map<int, BiPoly> m) {
    for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
    return m;
  };
  lhs = clean(lhs);
  rhs = clean(rhs);
  VerificationReport r;
  std::string witness;
  if (lhs != rhs)
    for (const auto& [k, c] : lhs)
      if (!rhs.count(k) || !(rhs.at(k) == c)) witness += "y^" + std::to_string(k) + ": " + c.to_string() + "; ";
  r.add("f(x1,y) - f(x2,y) = (p+1)(x1-x2)(y^q - Phi)", lhs == rhs, witness);
  return r;
}

VerificationReport check_extra_identity(long p, long q, std::uint64_t seed) {
  if (p < 2 || q <= p || std::gcd(p, q) != 1) throw std::invalid_argument("extra identity needs coprime 2 <= p < q");
  VerificationReport r;
  std::mt19937_64 rng(seed);
  Rational c;
  do c = random_rational(rng); while (c == 0 || c == 1);
  BiPoly f(BiPoly::Terms{{{static_cast<int>(p), 0}, 1}, {{0, static_cast<int>(q)}, -1}}, {"x", "y"});
  BiPoly g(BiPoly::Terms{{{static_cast<int>(p), 0}, Scalar(c)}, {{0, static_cast<int>(q)}, -1}}, {"x", "y"});
  long rd = local_intersection(f, g, seed);
  r.add("(R,D) = pq", rd == p * q, "(R,D)=" + std::to_string(rd) + " c=" + c.get_str());
  long delta = delta_invariant(p, q);
  r.add("2 delta = (p-1)(q-1)", 2 * delta == (p - 1) * (q - 1), "delta=" + std::to_string(delta));
  long rhs = extra_rhs(p, q);
  r.add("2 delta + p - 1 = pq - q", rhs == p * q - q, "rhs=" + std::to_string(rhs));
  return r;
}

VerificationReport verify_covering(const CoveringMap& f, std::uint64_t seed) {
  VerificationReport r;
  DerivedData d;
  try {
    d = validate(f.params);
  } catch (const InvalidParams& e) {
    r.add("params", false, e.what());
    return r;
  }
  JacobianCheck jc = check_jacobian_form(f);
  r.add("check_jacobian_form", jc.pass, jc.witness);
  if (jc.pass && !f.mu.is_zero())
    r.add("recorded mu", jc.mu == f.mu, "computed " + jc.mu.to_string() + ", recorded " + f.mu.to_string());
  PushforwardCheck pc = check_pushforward(f);
  r.add("check_pushforward", pc.pass, pc.witness);
  try {
    long deg = covering_degree(f, seed);
    r.add("covering_degree = N", deg == d.N, "degree " + std::to_string(deg) + ", N=" + std::to_string(d.N));
  } catch (const std::exception& e) {
    r.add("covering_degree = N", false, e.what());
  }
  if (pc.pass) {
    // u^d1 - c v^d2 vanishes along γ with c = c1^d1 / c2^d2.
    Scalar c = pc.c1.pow(static_cast<unsigned>(d.d1)) / pc.c2.pow(static_cast<unsigned>(d.d2));
    UniPoly pu, pv;
    if (f.frame == Frame::Axis) {
      pu = f.u.substitute_monomial(1, 1, 0, 0, "s");
      pv = f.v.substitute_monomial(1, 1, 0, 0, "s");
    } else {
      auto k1 = static_cast<int>(f.params.k1), k2 = static_cast<int>(f.params.k2);
      pu = f.u.substitute_monomial(1, k2, 1, k1, "s");
      pv = f.v.substitute_monomial(1, k2, 1, k1, "s");
    }
    UniPoly img = pu.pow(static_cast<unsigned>(d.d1)) - pv.pow(static_cast<unsigned>(d.d2)).scaled(c);
    r.add("branch image u^d1 = c v^d2", img.is_zero(), "c=" + c.to_string());
  } else {
    r.add("branch image u^d1 = c v^d2", false, "pushforward failed");
  }
  return r;
}

VerificationReport verify_numeric(const NumericMap& f, double eps) {
  VerificationReport r;
  r.tolerance = eps;
  const Real tol(eps);
  const DerivedData& d = f.derived;
  auto k1 = static_cast<int>(f.params.k1), k2 = static_cast<int>(f.params.k2);

  NumBiPoly jac = f.u.derivative(Var::First) * f.v.derivative(Var::Second) -
                  f.u.derivative(Var::Second) * f.v.derivative(Var::First);
  NumBiPoly form;
  form.add_term(Complex(1), 0, k2);
  form.add_term(Complex(-1), k1, 0);
  NumBiPoly power = form.pow(static_cast<unsigned>(d.n - 1));
  auto top = jac.terms.find(Exponent{0, k2 * static_cast<int>(d.n - 1)});
  Complex mu = top == jac.terms.end() ? Complex() : top->second;
  Real jres = (jac - power.scaled(mu)).max_abs() / std::max(Real(1), mu.abs());
  r.add("check_jacobian_form", jres <= tol && mu.abs() > tol,
        "residual " + real_str(jres) + ", |mu|=" + real_str(mu.abs()));

  CPoly pu = f.u.substitute_monomial(Complex(1), k2, Complex(1), k1);
  CPoly pv = f.v.substitute_monomial(Complex(1), k2, Complex(1), k1);
  auto monomial = [&](const CPoly& p, long deg, Complex& c) {
    Real off = 0;
    for (size_t i = 0; i < p.size(); ++i)
      if (static_cast<long>(i) != deg) off = std::max(off, p[i].abs());
    c = static_cast<long>(p.size()) > deg ? p[static_cast<size_t>(deg)] : Complex();
    return off <= tol * std::max(Real(1), c.abs()) && c.abs() > tol;
  };
  Complex c1, c2;
  bool push = monomial(pu, d.d2, c1) && monomial(pv, d.d1, c2);
  r.add("check_pushforward", push, "|c1|=" + real_str(c1.abs()) + ", |c2|=" + real_str(c2.abs()));

  // Weighted homogeneity with weights (k2, k1): u of degree d2, v of degree d1.
  auto homogeneous = [&](const NumBiPoly& p, long w) {
    for (const auto& [e, c] : p.terms)
      if (static_cast<long>(e.i) * k2 + static_cast<long>(e.j) * k1 != w && c.abs() > tol) return false;
    return true;
  };
  bool hom = homogeneous(f.u, d.d2) && homogeneous(f.v, d.d1);
  // Finiteness: no common zero of u, v besides 0 on the chart x = 1 or on x = 0.
  Real res = numeric_resultant(f.u.at_first(Complex(1)), f.v.at_first(Complex(1))).abs();
  CPoly u0 = f.u.at_first(Complex(0)), v0 = f.v.at_first(Complex(0));
  Real axis = 0;
  for (const auto* p : {&u0, &v0})
    for (const auto& c : *p) axis = std::max(axis, c.abs());
  long bezout = d.d1 * d.d2 / (f.params.k1 * f.params.k2);
  bool finite = res > tol && axis > tol;
  r.add("covering_degree = N", hom && finite && bezout == d.N,
        "weighted Bezout " + std::to_string(bezout) + ", |Res(u(1,y),v(1,y))|=" + real_str(res));
  return r;
}

}  // namespace covgerm
