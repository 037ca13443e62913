#include "covgerm/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace covgerm {

UniPoly::UniPoly(std::vector<Scalar> coeffs, std::string var, long ext)
    : coeffs_(std::move(coeffs)), var_(std::move(var)), ext_(ext) {
  for (const auto& c : coeffs_) ext_ = join_ext(ext_, c.ext());
  trim();
}

UniPoly UniPoly::constant(const Scalar& c, std::string var, long ext) {
  return UniPoly({c}, std::move(var), ext);
}

UniPoly UniPoly::monomial(const Scalar& c, int e, std::string var, long ext) {
  std::vector<Scalar> v(static_cast<size_t>(e) + 1);
  v.back() = c;
  return UniPoly(std::move(v), std::move(var), ext);
}

UniPoly UniPoly::linear_root(const Scalar& a, std::string var, long ext) {
  return UniPoly({-a, Scalar(1)}, std::move(var), ext);
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar(0);
  return coeffs_[static_cast<size_t>(i)];
}

Scalar UniPoly::leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

int UniPoly::order() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Scalar UniPoly::operator()(const Scalar& t) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Scalar> d;
  for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Scalar(static_cast<long>(i)));
  return UniPoly(std::move(d), var_, ext_);
}

UniPoly UniPoly::scaled(const Scalar& c) const {
  std::vector<Scalar> v = coeffs_;
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v), var_, join_ext(ext_, c.ext()));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(Scalar(1), var_, ext_);
  UniPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

UniPoly UniPoly::shifted(const Scalar& shift) const {
  // Horner in the shifted variable: p(t+s) = (...(c_n (t+s) + c_{n-1})(t+s) + ...)
  UniPoly lin({shift, Scalar(1)}, var_, ext_);
  UniPoly acc({}, var_, ext_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= lin;
    acc += constant(*it, var_, ext_);
  }
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

UniPoly UniPoly::truncated(int n) const {
  std::vector<Scalar> v(coeffs_.begin(), coeffs_.begin() + std::min<long>(std::max(n, 0), coeffs_.size()));
  return UniPoly(std::move(v), var_, ext_);
}

UniPoly UniPoly::with_var(std::string var) const {
  UniPoly p = *this;
  p.var_ = std::move(var);
  return p;
}

UniPoly UniPoly::with_ext(long ext) const {
  UniPoly p = *this;
  p.ext_ = join_ext(ext_, ext);
  return p;
}

UniPoly UniPoly::operator-() const {
  UniPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  ext_ = join_ext(ext_, o.ext_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  ext_ = join_ext(ext_, o.ext_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  ext_ = join_ext(ext_, o.ext_);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (i > 0) os << "*" << var_;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
  long ext = join_ext(num.ext(), den.ext());
  std::vector<Scalar> rem = num.coeffs();
  int dn = den.degree();
  if (num.degree() < dn) return {UniPoly({}, num.var(), ext), num.with_ext(ext)};
  std::vector<Scalar> quo(static_cast<size_t>(num.degree() - dn + 1));
  Scalar inv_lead = den.leading().inverse();
  for (int i = num.degree(); i >= dn; --i) {
    Scalar c = rem[static_cast<size_t>(i)] * inv_lead;
    if (c.is_zero()) continue;
    quo[static_cast<size_t>(i - dn)] = c;
    for (int j = 0; j <= dn; ++j) rem[static_cast<size_t>(i - dn + j)] -= c * den.coeff(j);
  }
  rem.resize(static_cast<size_t>(dn));
  return {UniPoly(std::move(quo), num.var(), ext), UniPoly(std::move(rem), num.var(), ext)};
}

std::optional<UniPoly> exact_divide(const UniPoly& p, const UniPoly& q) {
  auto [quo, rem] = divmod(p, q);
  if (!rem.is_zero()) return std::nullopt;
  return quo;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? std::move(r) : r.monic();
  }
  return x.monic();
}

bool is_squarefree(const UniPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

int root_multiplicity(const UniPoly& p, const Scalar& a) {
  if (p.is_zero()) throw std::invalid_argument("root multiplicity of the zero polynomial");
  // Repeated synthetic division by (t - a).
  std::vector<Scalar> c = p.coeffs();
  int m = 0;
  while (c.size() > 1) {
    std::vector<Scalar> q(c.size() - 1);
    Scalar acc(0);
    for (size_t i = c.size(); i-- > 1;) {
      acc = acc * a + c[i];
      q[i - 1] = acc;
    }
    Scalar remainder = acc * a + c[0];
    if (!remainder.is_zero()) break;
    c = std::move(q);
    ++m;
  }
  return m;
}

}  // namespace covgerm
