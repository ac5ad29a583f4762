#pragma once

#include <vector>

#include "bfc/core/boolean_function.hpp"
#include "bfc/poly/polynomial.hpp"

namespace bfc {

struct NdegResult {
  int value = 0;
  /// ZeroOne-basis polynomial with zero set inside D exactly f^{-1}(0) ∩ D.
  MultilinearPolynomial witness;
};

struct RdegResult {
  int value = 0;
  /// p/q = f on D with q nonzero on D; max(deg p, deg q) = value.
  MultilinearPolynomial p, q;
};

/// Nondeterministic degree. Constraints are imposed on D only. The returned value is
/// certified from both sides: the witness is checked pointwise, and for value > 0 an
/// exact linear dependency shows no polynomial of degree value-1 exists.
NdegResult ndeg(const BooleanFunction& f);

/// max(ndeg f, ndeg of the complement) with witness p = g1, q = g1 - g2.
RdegResult rdeg(const BooleanFunction& f);

/// Positive weights α with Σ_i α_i V[i][y] != 0 for every column y. Rows that are
/// identically zero get weight 1. Throws UncoveredColumn if some column is all zero.
std::vector<Rational> avoidance_combine(const std::vector<std::vector<Rational>>& v);

bool is_nondeterministic_rep(const BooleanFunction& f, const MultilinearPolynomial& p);
bool is_rational_rep(const BooleanFunction& f, const MultilinearPolynomial& p, const MultilinearPolynomial& q);

}  // namespace bfc
