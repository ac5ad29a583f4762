#pragma once

#include "bfc/core/boolean_function.hpp"
#include "bfc/poly/polynomial.hpp"

namespace bfc {

struct LpDegreeResult {
  int value = 0;
  MultilinearPolynomial witness;  // PlusMinus basis, verified at every cube point
};

/// Least d with a degree-d p satisfying sign(p(x)) = f(x) (±1 view) everywhere.
/// Total f only.
LpDegreeResult sign_degree(const BooleanFunction& f);

/// Least d with |p(x) - f(x)| <= eps on D and |p(x)| <= 1 on the whole cube, f in its
/// ±1 view. eps must lie in [0, 1/2).
LpDegreeResult approx_degree(const BooleanFunction& f, const Rational& eps = make_rational(1, 3));

}  // namespace bfc
