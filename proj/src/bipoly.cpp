#include "covgerm/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace covgerm {

BiPoly::BiPoly(std::array<std::string, 2> vars, long ext) : vars_(std::move(vars)), ext_(ext) {}

BiPoly::BiPoly(Terms terms, std::array<std::string, 2> vars, long ext)
    : vars_(std::move(vars)), ext_(ext) {
  for (auto& [e, c] : terms) add_term(c, e.i, e.j);
}

BiPoly BiPoly::constant(const Scalar& c, std::array<std::string, 2> vars, long ext) {
  return monomial(c, 0, 0, std::move(vars), ext);
}

BiPoly BiPoly::monomial(const Scalar& c, int i, int j, std::array<std::string, 2> vars, long ext) {
  BiPoly p(std::move(vars), ext);
  p.add_term(c, i, j);
  return p;
}

BiPoly BiPoly::x(std::array<std::string, 2> vars, long ext) { return monomial(1, 1, 0, std::move(vars), ext); }
BiPoly BiPoly::y(std::array<std::string, 2> vars, long ext) { return monomial(1, 0, 1, std::move(vars), ext); }

void BiPoly::add_term(const Scalar& c, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent in bivariate polynomial");
  ext_ = join_ext(ext_, c.ext());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

Scalar BiPoly::coeff(int i, int j) const {
  auto it = terms_.find(Exponent{i, j});
  return it == terms_.end() ? Scalar(0) : it->second;
}

int BiPoly::degree_in(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, v == Var::First ? e.i : e.j);
  return d;
}

int BiPoly::total_degree() const { return weighted_degree(1, 1); }

int BiPoly::order() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.i + terms_.begin()->first.j;
  for (const auto& [e, c] : terms_) d = std::min(d, e.i + e.j);
  return d;
}

int BiPoly::weighted_degree(int w1, int w2) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, w1 * e.i + w2 * e.j);
  return d;
}

Scalar BiPoly::operator()(const Scalar& x, const Scalar& y) const {
  Scalar acc(0);
  for (const auto& [e, c] : terms_) acc += c * x.pow(static_cast<unsigned>(e.i)) * y.pow(static_cast<unsigned>(e.j));
  return acc;
}

BiPoly BiPoly::derivative(Var v) const {
  BiPoly d(vars_, ext_);
  for (const auto& [e, c] : terms_) {
    int k = v == Var::First ? e.i : e.j;
    if (k == 0) continue;
    if (v == Var::First)
      d.add_term(c * Scalar(k), e.i - 1, e.j);
    else
      d.add_term(c * Scalar(k), e.i, e.j - 1);
  }
  return d;
}

BiPoly BiPoly::scaled(const Scalar& c) const {
  BiPoly r(vars_, join_ext(ext_, c.ext()));
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.add_term(v * c, e.i, e.j);
  return r;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result = constant(1, vars_, ext_);
  BiPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

BiPoly BiPoly::shifted(int i, int j) const {
  BiPoly r(vars_, ext_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.i + i, e.j + j}, c);
  return r;
}

UniPoly BiPoly::substitute_monomial(const Scalar& c1, int e1, const Scalar& c2, int e2,
                                    const std::string& var) const {
  if (e1 < 0 || e2 < 0) throw std::invalid_argument("negative exponent in monomial substitution");
  long ext = join_ext(join_ext(ext_, c1.ext()), c2.ext());
  std::map<int, Scalar> acc;
  for (const auto& [e, c] : terms_) {
    Scalar v = c * c1.pow(static_cast<unsigned>(e.i)) * c2.pow(static_cast<unsigned>(e.j));
    acc[e.i * e1 + e.j * e2] += v;
  }
  int top = acc.empty() ? -1 : acc.rbegin()->first;
  std::vector<Scalar> coeffs(static_cast<size_t>(top + 1));
  for (auto& [k, v] : acc) coeffs[static_cast<size_t>(k)] = v;
  return UniPoly(std::move(coeffs), var, ext);
}

BiPoly BiPoly::sheared(const Scalar& a) const {
  long ext = join_ext(ext_, a.ext());
  BiPoly lin(vars_, ext);
  lin.add_term(1, 1, 0);
  lin.add_term(a, 0, 1);
  // Group by power of x so each power of (x + a y) is formed once.
  std::map<int, BiPoly> by_x;
  for (const auto& [e, c] : terms_) {
    auto it = by_x.try_emplace(e.i, BiPoly(vars_, ext)).first;
    it->second.add_term(c, 0, e.j);
  }
  BiPoly result(vars_, ext);
  BiPoly power = constant(1, vars_, ext);
  int at = 0;
  for (auto& [i, ys] : by_x) {
    while (at < i) {
      power *= lin;
      ++at;
    }
    result += power * ys;
  }
  return result;
}

std::vector<UniPoly> BiPoly::as_poly_in(Var v) const {
  int deg = degree_in(v);
  const std::string& other = v == Var::First ? vars_[1] : vars_[0];
  std::vector<std::vector<Scalar>> raw(static_cast<size_t>(deg + 1));
  for (const auto& [e, c] : terms_) {
    int k = v == Var::First ? e.i : e.j;
    int o = v == Var::First ? e.j : e.i;
    auto& slot = raw[static_cast<size_t>(k)];
    if (static_cast<int>(slot.size()) <= o) slot.resize(static_cast<size_t>(o) + 1);
    slot[static_cast<size_t>(o)] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r), other, ext_);
  return out;
}

BiPoly BiPoly::with_vars(std::array<std::string, 2> vars) const {
  BiPoly p = *this;
  p.vars_ = std::move(vars);
  return p;
}

BiPoly BiPoly::with_ext(long ext) const {
  BiPoly p = *this;
  p.ext_ = join_ext(ext_, ext);
  return p;
}

BiPoly BiPoly::operator-() const {
  BiPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  ext_ = join_ext(ext_, o.ext_);
  for (const auto& [e, c] : o.terms_) add_term(c, e.i, e.j);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  ext_ = join_ext(ext_, o.ext_);
  for (const auto& [e, c] : o.terms_) add_term(-c, e.i, e.j);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  long ext = join_ext(ext_, o.ext_);
  BiPoly r(vars_, ext);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(c1 * c2, e1.i + e2.i, e1.j + e2.j);
  *this = std::move(r);
  return *this;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (e.i > 0) os << "*" << vars_[0] << (e.i > 1 ? "^" + std::to_string(e.i) : "");
    if (e.j > 0) os << "*" << vars_[1] << (e.j > 1 ? "^" + std::to_string(e.j) : "");
  }
  return os.str();
}

std::optional<BiPoly> exact_divide(const BiPoly& p, const BiPoly& q) {
  if (q.is_zero()) throw DivisionByZero("bivariate division by the zero polynomial");
  long ext = join_ext(p.ext(), q.ext());
  BiPoly rem = p.with_ext(ext);
  BiPoly quo(p.vars(), ext);
  const auto& [lead_e, lead_c] = *q.terms().rbegin();
  Scalar inv = lead_c.inverse();
  while (!rem.is_zero()) {
    const auto [e, c] = *rem.terms().rbegin();
    if (e.i < lead_e.i || e.j < lead_e.j) return std::nullopt;
    BiPoly t = BiPoly::monomial(c * inv, e.i - lead_e.i, e.j - lead_e.j, p.vars(), ext);
    quo += t;
    rem -= t * q;
  }
  return quo;
}

}  // namespace covgerm
