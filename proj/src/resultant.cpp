#include "covgerm/resultant.hpp"

#include <algorithm>

namespace covgerm {

namespace {

int max_degree(const std::vector<UniPoly>& coeffs) {
  int d = 0;
  for (const auto& c : coeffs) d = std::max(d, c.degree());
  return d;
}

// Res(p, a·y + b) = (−1)^m Σ p_i (−b)^i a^{m−i}, m = deg p; Res(a·y + b, q) = Σ q_j (−b)^j a^{n−j}.
UniPoly linear_resultant(const std::vector<UniPoly>& general, const std::vector<UniPoly>& linear,
                         bool linear_first, const std::string& var, long ext) {
  const UniPoly& b = linear[0];
  const UniPoly& a = linear[1];
  int m = static_cast<int>(general.size()) - 1;
  UniPoly acc({}, var, ext);
  UniPoly neg_b_pow = UniPoly::constant(1, var, ext);
  std::vector<UniPoly> a_pows{UniPoly::constant(1, var, ext)};
  for (int k = 1; k <= m; ++k) a_pows.push_back(a_pows.back() * a);
  for (int i = 0; i <= m; ++i) {
    acc += general[static_cast<size_t>(i)] * neg_b_pow * a_pows[static_cast<size_t>(m - i)];
    neg_b_pow *= -b;
  }
  if (!linear_first && (m % 2 == 1)) acc = -acc;
  return acc.with_var(var);
}

}  // namespace

PolyMatrix sylvester_matrix(const BiPoly& p, const BiPoly& q, Var eliminate) {
  auto pc = p.as_poly_in(eliminate);
  auto qc = q.as_poly_in(eliminate);
  int m = static_cast<int>(pc.size()) - 1;
  int n = static_cast<int>(qc.size()) - 1;
  if (m < 1 || n < 1) throw DegenerateInput("resultant needs positive degree in the eliminated variable");
  long ext = join_ext(p.ext(), q.ext());
  const std::string& var = eliminate == Var::First ? p.vars()[1] : p.vars()[0];
  int size = m + n;
  PolyMatrix s(static_cast<size_t>(size), std::vector<UniPoly>(static_cast<size_t>(size), UniPoly({}, var, ext)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = pc[static_cast<size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] = qc[static_cast<size_t>(n - k)];
  return s;
}

Scalar determinant(ScalarMatrix m) {
  const size_t n = m.size();
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return Scalar(0);
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = Scalar(0);
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

UniPoly resultant(const BiPoly& p, const BiPoly& q, Var eliminate) {
  auto pc = p.as_poly_in(eliminate);
  auto qc = q.as_poly_in(eliminate);
  int m = static_cast<int>(pc.size()) - 1;
  int n = static_cast<int>(qc.size()) - 1;
  if (m < 1 || n < 1) throw DegenerateInput("resultant needs positive degree in the eliminated variable");
  long ext = join_ext(p.ext(), q.ext());
  const std::string var = eliminate == Var::First ? p.vars()[1] : p.vars()[0];

  if (n == 1) return linear_resultant(pc, qc, false, var, ext);
  if (m == 1) return linear_resultant(qc, pc, true, var, ext);

  // Each Sylvester row's entries have degree at most that block's max degree,
  // which bounds the determinant's degree.
  int bound = n * max_degree(pc) + m * max_degree(qc);
  // Bezout: deg Res ≤ deg p · deg q in total degree.
  bound = std::min(bound, p.total_degree() * q.total_degree());
  PolyMatrix syl = sylvester_matrix(p, q, eliminate);
  std::vector<Scalar> xs, ys;
  for (int k = 0; k <= bound; ++k) {
    Scalar at(k);
    ScalarMatrix sm(syl.size(), std::vector<Scalar>(syl.size()));
    for (size_t i = 0; i < syl.size(); ++i)
      for (size_t j = 0; j < syl.size(); ++j) sm[i][j] = syl[i][j](at);
    xs.push_back(at);
    ys.push_back(determinant(std::move(sm)));
  }
  // Newton divided differences, then expand the Newton form.
  std::vector<Scalar> dd = ys;
  for (size_t lvl = 1; lvl < xs.size(); ++lvl)
    for (size_t i = xs.size() - 1; i >= lvl; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
  UniPoly result({}, var, ext);
  for (size_t i = xs.size(); i-- > 0;) {
    result *= UniPoly::linear_root(xs[i], var, ext);
    result += UniPoly::constant(dd[i], var, ext);
  }
  return result;
}

}  // namespace covgerm
