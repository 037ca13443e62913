#pragma once

#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace covgerm {

struct Ray {
  long x = 0, y = 0;
  bool operator==(const Ray&) const = default;
};

long det(const Ray& a, const Ray& b);

/// Self-intersection weights along a chain of rational curves, each <= -1 for
/// exceptional chains.
using LinearChain = std::vector<long>;

struct ResolutionData {
  LinearChain chain_E1, chain_E2;
  long weight_E0 = 0;
  /// Rays from e1 = (1,0) to e2 = (0,1), including both ends and e0.
  std::vector<Ray> rays;
  /// Weights of every interior ray in order: chain_E1, E0, chain_E2.
  LinearChain full_chain;
};

/// Interior rays of the minimal unimodular subdivision of the cone ⟨v, w⟩,
/// in order from v to w. Requires primitive v, w with det(v, w) > 0.
std::vector<Ray> subdivide_cone(const Ray& v, const Ray& w);

/// Requires gcd(d1, d2) = 1 and min(d1, d2) >= 2. Throws std::logic_error if
/// the chain determinants come out different from (d1, d2).
ResolutionData resolution_chains(long d1, long d2);

/// det of the tridiagonal matrix with diagonal -w_i and off-diagonal -1.
long chain_determinant(const LinearChain& c);

/// Blow up the point at `edge`: 0 is the free end before the first curve,
/// c.size() the free end after the last, and 0 < i < c.size() the meeting
/// point of curves i - 1 and i.
LinearChain blowup_chain(const LinearChain& c, size_t edge);

nlohmann::json to_json(const ResolutionData& r);

}  // namespace covgerm
