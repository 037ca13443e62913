#pragma once

#include <stdexcept>
#include <vector>

#include "covgerm/bipoly.hpp"
#include "covgerm/unipoly.hpp"

namespace covgerm {

class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using PolyMatrix = std::vector<std::vector<UniPoly>>;
using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Sylvester matrix of p and q with respect to `eliminate`. The deg_q rows
/// built from p come first, then the deg_p rows built from q; each row lists
/// coefficients from the top degree down.
PolyMatrix sylvester_matrix(const BiPoly& p, const BiPoly& q, Var eliminate);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
Scalar determinant(ScalarMatrix m);

/// Res(p, q) with respect to `eliminate`, as a polynomial in the other
/// variable. Equal to det(sylvester_matrix(p, q, eliminate)). Both inputs must
/// have positive degree in the eliminated variable.
UniPoly resultant(const BiPoly& p, const BiPoly& q, Var eliminate);

}  // namespace covgerm
