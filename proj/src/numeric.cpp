#include "covgerm/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace covgerm {

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits_); }

Real to_real(const Rational& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }

Complex Complex::from(const Scalar& s) {
  Complex c(to_real(s.a()));
  if (s.is_rational()) return c;
  Real root = boost::multiprecision::sqrt(Real(std::labs(s.ext())));
  Real b = to_real(s.b()) * root;
  if (s.ext() < 0)
    c.im = b;
  else
    c.re += b;
  return c;
}

Real Complex::abs() const { return boost::multiprecision::sqrt(re * re + im * im); }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real den = o.re * o.re + o.im * o.im;
  if (den == 0) throw DivisionByZero("complex division by zero");
  Real r = (re * o.re + im * o.im) / den;
  im = (im * o.re - re * o.im) / den;
  re = std::move(r);
  return *this;
}

CPoly to_complex(const UniPoly& p) {
  CPoly out;
  for (const auto& c : p.coeffs()) out.push_back(Complex::from(c));
  return out;
}

Complex evaluate(const CPoly& p, const Complex& t) {
  Complex acc;
  for (size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
  return acc;
}

Real max_abs_diff(const CPoly& p, const CPoly& q) {
  Real m = 0;
  for (size_t i = 0; i < std::max(p.size(), q.size()); ++i) {
    Complex a = i < p.size() ? p[i] : Complex();
    Complex b = i < q.size() ? q[i] : Complex();
    m = std::max(m, (a - b).abs());
  }
  return m;
}

namespace {

// Gaussian elimination with partial pivoting; returns the determinant and
// optionally solves m·x = rhs in place.
Complex eliminate(std::vector<CPoly>& m, CPoly* rhs) {
  const size_t n = m.size();
  Complex det(1);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    for (size_t i = k + 1; i < n; ++i)
      if (m[i][k].abs() > m[piv][k].abs()) piv = i;
    if (m[piv][k].abs() == 0) return Complex();
    if (piv != k) {
      std::swap(m[piv], m[k]);
      if (rhs) std::swap((*rhs)[piv], (*rhs)[k]);
      det = -det;
    }
    det *= m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      Complex f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      if (rhs) (*rhs)[i] -= f * (*rhs)[k];
    }
  }
  if (rhs) {
    for (size_t k = n; k-- > 0;) {
      Complex acc = (*rhs)[k];
      for (size_t j = k + 1; j < n; ++j) acc -= m[k][j] * (*rhs)[j];
      (*rhs)[k] = acc / m[k][k];
    }
  }
  return det;
}

CPoly trunc_mul(const CPoly& a, const CPoly& b, size_t len) {
  CPoly r(std::min(len, a.size() + b.size() - 1));
  for (size_t i = 0; i < a.size() && i < r.size(); ++i)
    for (size_t j = 0; j < b.size() && i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

CPoly trunc_pow(CPoly base, long e, size_t len) {
  CPoly result{Complex(1)};
  while (e > 0) {
    if (e & 1) result = trunc_mul(result, base, len);
    e >>= 1;
    if (e) base = trunc_mul(base, base, len);
  }
  result.resize(len);
  return result;
}

Real max_abs(const CPoly& p, size_t from, size_t to) {
  Real m = 0;
  for (size_t i = from; i < to && i < p.size(); ++i) m = std::max(m, p[i].abs());
  return m;
}

// Coefficients in powers of τ = t - 1 to powers of t.
CPoly shift_to_t(const CPoly& a) {
  CPoly out(a.size());
  for (size_t j = 0; j < a.size(); ++j) {
    // (t - 1)^j = Σ C(j, i) t^i (-1)^(j - i)
    Real binom = 1;
    for (size_t i = 0; i <= j; ++i) {
      Complex term = a[j] * Complex(binom);
      if ((j - i) % 2 == 1) term = -term;
      out[i] += term;
      binom = binom * Real(static_cast<long>(j - i)) / Real(static_cast<long>(i + 1));
    }
  }
  return out;
}

CPoly derivative(const CPoly& p) {
  CPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Complex(Real(static_cast<long>(i))));
  return d;
}

CPoly add(const CPoly& a, const CPoly& b, const Complex& sb) {
  CPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += sb * b[i];
  return r;
}

CPoly full_mul(const CPoly& a, const CPoly& b) {
  if (a.empty() || b.empty()) return {};
  return trunc_mul(a, b, a.size() + b.size() - 1);
}

struct System {
  long d1, d2, m2, l1, l2, n;

  // G_i(τ) = 1 + Σ x_j τ^j
  std::pair<CPoly, CPoly> series(const CPoly& x) const {
    CPoly G1(static_cast<size_t>(l1 + 1)), G2(static_cast<size_t>(l2 + 1));
    G1[0] = G2[0] = Complex(1);
    for (long j = 0; j < l1; ++j) G1[static_cast<size_t>(j + 1)] = x[static_cast<size_t>(j)];
    for (long j = 0; j < l2; ++j) G2[static_cast<size_t>(j + 1)] = x[static_cast<size_t>(l1 + j)];
    return {G1, G2};
  }

  CPoly one_plus_tau_pow() const {
    CPoly p(static_cast<size_t>(n));
    Real binom = 1;
    for (long i = 0; i < n; ++i) {
      p[static_cast<size_t>(i)] = Complex(binom);
      binom = binom * Real(m2 - i) / Real(i + 1);
    }
    return p;
  }

  // F_k = [τ^k] ((1+τ)^m2 G2^d2 - G1^d1), k = 1..n-1; optionally the Jacobian.
  CPoly residual(const CPoly& x, std::vector<CPoly>* jac) const {
    const auto len = static_cast<size_t>(n);
    auto [G1, G2] = series(x);
    CPoly P = one_plus_tau_pow();
    CPoly g1p = trunc_pow(G1, d1 - 1, len);
    CPoly g2p = trunc_mul(P, trunc_pow(G2, d2 - 1, len), len);
    CPoly lhs = trunc_mul(g2p, G2, len), rhs = trunc_mul(g1p, G1, len);
    lhs.resize(len);
    rhs.resize(len);
    CPoly F(len - 1);
    for (size_t k = 1; k < len; ++k) F[k - 1] = lhs[k] - rhs[k];
    if (jac) {
      const size_t m = len - 1;
      jac->assign(m, CPoly(m));
      for (size_t k = 1; k < len; ++k) {
        for (long j = 1; j <= l1; ++j)
          if (static_cast<long>(k) >= j)
            (*jac)[k - 1][static_cast<size_t>(j - 1)] = -Complex(Real(d1)) * g1p[k - static_cast<size_t>(j)];
        for (long j = 1; j <= l2; ++j)
          if (static_cast<long>(k) >= j)
            (*jac)[k - 1][static_cast<size_t>(l1 + j - 1)] = Complex(Real(d2)) * g2p[k - static_cast<size_t>(j)];
      }
    }
    return F;
  }
};

Real norm_inf(const CPoly& v) { return max_abs(v, 0, v.size()); }

}  // namespace

Complex numeric_resultant(const CPoly& p, const CPoly& q) {
  auto trim = [](CPoly v) {
    while (!v.empty() && v.back().abs() == 0) v.pop_back();
    return v;
  };
  CPoly a = trim(p), b = trim(q);
  if (a.empty() || b.empty()) return Complex();
  size_t m = a.size() - 1, n = b.size() - 1;
  if (m == 0 && n == 0) return Complex(1);
  size_t size = m + n;
  std::vector<CPoly> s(size, CPoly(size));
  for (size_t r = 0; r < n; ++r)
    for (size_t k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  for (size_t r = 0; r < m; ++r)
    for (size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
  return eliminate(s, nullptr);
}

NumericBelyi solve_belyi_numeric(const Params& p, const NumericOptions& opts) {
  if (opts.precision_bits < 128) throw std::invalid_argument("precision_bits must be at least 128");
  DerivedData d = opts.require_valid ? validate(p) : derive_unchecked(p);
  if (d.n < 2) throw std::invalid_argument("numeric solver needs n >= 2");
  PrecisionScope scope(opts.precision_bits);
  System sys{d.d1, d.d2, d.m2, p.l1, p.l2, d.n};
  const auto m = static_cast<size_t>(d.n - 1);
  const Real accept(opts.accept);
  const Real target = boost::multiprecision::pow(Real(2), -static_cast<int>(opts.precision_bits) + 24);
  const Real degenerate(1e-12);
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::string last_reason = "no restart converged";

  for (int attempt = 0; attempt < opts.restarts; ++attempt) {
    CPoly x(m);
    for (auto& c : x) {
      double re = dist(rng), im = dist(rng);
      c = Complex(Real(re), Real(im));
    }
    CPoly F = sys.residual(x, nullptr);
    Real fn = norm_inf(F);
    int it = 0;
    for (; it < opts.max_iterations && fn > target; ++it) {
      std::vector<CPoly> jac;
      CPoly step = sys.residual(x, &jac);
      if (eliminate(jac, &step).abs() == 0) break;
      Real lambda = 1;
      bool improved = false;
      for (int halving = 0; halving < 40; ++halving) {
        CPoly trial = x;
        for (size_t i = 0; i < m; ++i) trial[i] -= Complex(lambda) * step[i];
        CPoly Ft = sys.residual(trial, nullptr);
        Real ft = norm_inf(Ft);
        if (ft < fn) {
          x = std::move(trial);
          fn = ft;
          improved = true;
          break;
        }
        lambda /= 2;
      }
      if (!improved) break;
    }
    if (!(fn <= accept)) {
      last_reason = "residual " + fn.str(6) + " above threshold";
      continue;
    }

    auto [A1, A2] = sys.series(x);
    NumericBelyi out;
    out.params = p;
    out.derived = d;
    out.a1 = A1;
    out.a2 = A2;
    out.g1 = shift_to_t(A1);
    out.g2 = shift_to_t(A2);
    out.restarts_used = attempt + 1;
    out.iterations = it;
    out.precision_bits = opts.precision_bits;
    out.residual_belyi = fn;

    bool degenerate_sol = out.g1[0].abs() < degenerate || out.g2[0].abs() < degenerate ||
                          A1.back().abs() < degenerate || A2.back().abs() < degenerate;
    if (!degenerate_sol && p.l1 > 0 && p.l2 > 0)
      degenerate_sol = numeric_resultant(out.g1, out.g2).abs() < degenerate;
    if (degenerate_sol) {
      last_reason = "only degenerate solutions (g_i(0) = 0, degree drop or common root)";
      continue;
    }

    // h(1 + τ) = m2 G1 G2 - d1 (1+τ) G1' G2 + d2 (1+τ) G1 G2' should be mu_h τ^(n-1).
    CPoly one_tau{Complex(1), Complex(1)};
    CPoly h = full_mul(A1, A2);
    for (auto& c : h) c *= Complex(Real(d.m2));
    h = add(h, full_mul(one_tau, full_mul(derivative(A1), A2)), Complex(Real(-d.d1)));
    h = add(h, full_mul(one_tau, full_mul(A1, derivative(A2))), Complex(Real(d.d2)));
    h.resize(static_cast<size_t>(d.n));
    out.mu_h = h[m];
    Real scale = std::max(Real(1), out.mu_h.abs());
    out.residual_h = max_abs(h, 0, m) / scale;
    if (!(out.residual_h <= accept)) {
      last_reason = "h not proportional to (t-1)^(n-1)";
      continue;
    }
    return out;
  }
  throw NonConvergence("Newton failed for " + p.to_string() + " after " + std::to_string(opts.restarts) +
                       " restarts: " + last_reason);
}

NumBiPoly NumBiPoly::from(const BiPoly& p) {
  NumBiPoly out;
  for (const auto& [e, c] : p.terms()) out.terms.emplace(e, Complex::from(c));
  return out;
}

void NumBiPoly::add_term(const Complex& c, int i, int j) {
  auto [it, inserted] = terms.try_emplace(Exponent{i, j}, c);
  if (!inserted) it->second += c;
}

NumBiPoly NumBiPoly::derivative(Var v) const {
  NumBiPoly d;
  for (const auto& [e, c] : terms) {
    int k = v == Var::First ? e.i : e.j;
    if (k == 0) continue;
    Complex f = c * Complex(Real(k));
    if (v == Var::First)
      d.add_term(f, e.i - 1, e.j);
    else
      d.add_term(f, e.i, e.j - 1);
  }
  return d;
}

NumBiPoly NumBiPoly::scaled(const Complex& c) const {
  NumBiPoly r;
  for (const auto& [e, v] : terms) r.terms.emplace(e, v * c);
  return r;
}

NumBiPoly NumBiPoly::pow(unsigned e) const {
  NumBiPoly result;
  result.add_term(Complex(1), 0, 0);
  NumBiPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

CPoly NumBiPoly::substitute_monomial(const Complex& c1, int e1, const Complex& c2, int e2) const {
  CPoly out;
  for (const auto& [e, c] : terms) {
    Complex v = c;
    for (int k = 0; k < e.i; ++k) v *= c1;
    for (int k = 0; k < e.j; ++k) v *= c2;
    auto deg = static_cast<size_t>(e.i * e1 + e.j * e2);
    if (out.size() <= deg) out.resize(deg + 1);
    out[deg] += v;
  }
  return out;
}

CPoly NumBiPoly::at_first(const Complex& x0) const {
  CPoly out;
  for (const auto& [e, c] : terms) {
    Complex v = c;
    for (int k = 0; k < e.i; ++k) v *= x0;
    auto deg = static_cast<size_t>(e.j);
    if (out.size() <= deg) out.resize(deg + 1);
    out[deg] += v;
  }
  return out;
}

int NumBiPoly::degree_in(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms) d = std::max(d, v == Var::First ? e.i : e.j);
  return d;
}

Real NumBiPoly::max_abs() const {
  Real m = 0;
  for (const auto& [e, c] : terms) m = std::max(m, c.abs());
  return m;
}

NumBiPoly& NumBiPoly::operator+=(const NumBiPoly& o) {
  for (const auto& [e, c] : o.terms) add_term(c, e.i, e.j);
  return *this;
}

NumBiPoly& NumBiPoly::operator-=(const NumBiPoly& o) {
  for (const auto& [e, c] : o.terms) add_term(-c, e.i, e.j);
  return *this;
}

NumBiPoly operator*(const NumBiPoly& l, const NumBiPoly& r) {
  NumBiPoly out;
  for (const auto& [e1, c1] : l.terms)
    for (const auto& [e2, c2] : r.terms) out.add_term(c1 * c2, e1.i + e2.i, e1.j + e2.j);
  return out;
}

NumericMap numeric_from_belyi(const NumericBelyi& b) {
  const Params& p = b.params;
  int nu = p.kase == Case::A ? 0 : 1;
  auto k1 = static_cast<int>(p.k1), k2 = static_cast<int>(p.k2);
  NumericMap f;
  f.params = p;
  f.derived = b.derived;
  for (size_t j = 0; j < b.g1.size(); ++j)
    f.u.add_term(b.g1[j], k1 * (static_cast<int>(p.l1) - static_cast<int>(j)) + nu, k2 * static_cast<int>(j));
  for (size_t j = 0; j < b.g2.size(); ++j)
    f.v.add_term(b.g2[j], k1 * (static_cast<int>(p.l2) - static_cast<int>(j)) + 1 - nu,
                 k2 * static_cast<int>(j) + 1);
  return f;
}

}  // namespace covgerm

namespace covgerm {

namespace {

std::string decimal(const Real& r) {
  return r.str(static_cast<std::streamsize>(Real::default_precision()), std::ios_base::scientific);
}

nlohmann::json cpoly_json(const CPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p) arr.push_back(to_json(c));
  return arr;
}

nlohmann::json numbipoly_json(const NumBiPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms) arr.push_back({{"e", {e.i, e.j}}, {"c", to_json(c)}});
  return arr;
}

NumBiPoly numbipoly_from_json(const nlohmann::json& j) {
  NumBiPoly p;
  for (const auto& t : j) {
    const auto& e = t.at("e");
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("term exponent must be [i, j]");
    int i = e[0].get<int>(), k = e[1].get<int>();
    if (i < 0 || k < 0) throw std::invalid_argument("negative exponent");
    p.add_term(complex_from_json(t.at("c")), i, k);
  }
  return p;
}

}  // namespace

nlohmann::json to_json(const Complex& c) { return {decimal(c.re), decimal(c.im)}; }

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex value must be [re, im]");
  return {Real(j[0].get<std::string>()), Real(j[1].get<std::string>())};
}

nlohmann::json to_json(const NumericBelyi& b) {
  return {{"params", to_json(b.params)},
          {"derived", to_json(b.derived)},
          {"g1", cpoly_json(b.g1)},
          {"g2", cpoly_json(b.g2)},
          {"mu_h", to_json(b.mu_h)},
          {"residual_belyi", b.residual_belyi.str(6, std::ios_base::scientific)},
          {"residual_h", b.residual_h.str(6, std::ios_base::scientific)},
          {"restarts_used", b.restarts_used},
          {"iterations", b.iterations},
          {"precision_bits", b.precision_bits}};
}

nlohmann::json to_json(const NumericMap& f) {
  return {{"numeric", true},
          {"params", to_json(f.params)},
          {"derived", to_json(f.derived)},
          {"u", numbipoly_json(f.u)},
          {"v", numbipoly_json(f.v)}};
}

NumericMap numeric_map_from_json(const nlohmann::json& j) {
  NumericMap f;
  f.params = params_from_json(j.at("params"));
  f.derived = validate(f.params);
  f.u = numbipoly_from_json(j.at("u"));
  f.v = numbipoly_from_json(j.at("v"));
  return f;
}

}  // namespace covgerm
