#include "covgerm/resolution.hpp"

#include <numeric>
#include <string>
#include <tuple>

namespace covgerm {

long det(const Ray& a, const Ray& b) { return a.x * b.y - a.y * b.x; }

namespace {

// (g, s, t) with s·a + t·b = g = gcd(a, b) >= 0.
std::tuple<long, long, long> ext_gcd(long a, long b) {
  long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

long ceil_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

bool primitive(const Ray& r) { return std::gcd(r.x, r.y) == 1; }

}  // namespace

std::vector<Ray> subdivide_cone(const Ray& v, const Ray& w) {
  if (!primitive(v) || !primitive(w)) throw std::invalid_argument("cone rays must be primitive");
  const long total = det(v, w);
  if (total <= 0) throw std::invalid_argument("cone needs det(v, w) > 0");
  std::vector<Ray> out;
  Ray cur = v;
  while (true) {
    // p on the line det(cur, ·) = 1; the next ray is the point of that line
    // inside the cone that lies furthest from cur.
    auto [g, s, t] = ext_gcd(cur.x, cur.y);
    Ray p{-t, s};
    long d = det(cur, w);
    long shift = ceil_div(-det(p, w), d);
    Ray next{p.x + shift * cur.x, p.y + shift * cur.y};
    if (next == w) break;
    out.push_back(next);
    cur = next;
    if (static_cast<long>(out.size()) > total) throw std::logic_error("cone subdivision did not terminate");
  }
  return out;
}

long chain_determinant(const LinearChain& c) {
  long prev = 0, cur = 1;
  for (long w : c) {
    long next = -w * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

LinearChain blowup_chain(const LinearChain& c, size_t edge) {
  if (c.empty() || edge > c.size()) throw std::out_of_range("blowup edge out of range");
  LinearChain out(c.begin(), c.end());
  if (edge > 0) out[edge - 1] -= 1;
  if (edge < c.size()) out[edge] -= 1;
  out.insert(out.begin() + static_cast<long>(edge), -1);
  return out;
}

ResolutionData resolution_chains(long d1, long d2) {
  if (std::min(d1, d2) < 2 || std::gcd(d1, d2) != 1)
    throw std::invalid_argument("resolution needs coprime d1, d2 >= 2");
  const Ray e1{1, 0}, e2{0, 1}, e0{d2, d1};
  ResolutionData r;
  r.rays.push_back(e1);
  auto left = subdivide_cone(e1, e0);
  r.rays.insert(r.rays.end(), left.begin(), left.end());
  r.rays.push_back(e0);
  auto right = subdivide_cone(e0, e2);
  r.rays.insert(r.rays.end(), right.begin(), right.end());
  r.rays.push_back(e2);

  // u_{i-1} + u_{i+1} = c·u_i with det(u_{i-1}, u_i) = 1 gives c = det(u_{i-1}, u_{i+1}).
  for (size_t i = 1; i + 1 < r.rays.size(); ++i) r.full_chain.push_back(-det(r.rays[i - 1], r.rays[i + 1]));
  const size_t e0_at = left.size();
  r.chain_E1.assign(r.full_chain.begin(), r.full_chain.begin() + static_cast<long>(e0_at));
  r.weight_E0 = r.full_chain[e0_at];
  r.chain_E2.assign(r.full_chain.begin() + static_cast<long>(e0_at) + 1, r.full_chain.end());

  if (chain_determinant(r.chain_E1) != d1 || chain_determinant(r.chain_E2) != d2)
    throw std::logic_error("chain determinants differ from (" + std::to_string(d1) + "," + std::to_string(d2) + ")");
  return r;
}

nlohmann::json to_json(const ResolutionData& r) {
  auto rays = nlohmann::json::array();
  for (const auto& ray : r.rays) rays.push_back({ray.x, ray.y});
  return {{"chain_E1", r.chain_E1},
          {"chain_E2", r.chain_E2},
          {"weight_E0", r.weight_E0},
          {"full_chain", r.full_chain},
          {"rays", rays},
          {"determinants", {chain_determinant(r.chain_E1), chain_determinant(r.chain_E2)}}};
}

}  // namespace covgerm
