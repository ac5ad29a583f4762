#pragma once

#include "bfc/core/boolean_function.hpp"

namespace bfc {

inline constexpr int kSearchCap = 14;     // bs and C
inline constexpr int kDimensionCap = 12;  // and_dimension, or_dimension

/// Degree of the unique multilinear interpolant. Total f only.
int deg(const BooleanFunction& f);

/// Number of neighbors of x inside D with a different value. x must lie in D.
int sensitivity_at(const BooleanFunction& f, Point x);
int sensitivity(const BooleanFunction& f);
/// Maximum of sensitivity_at over points where f takes the value b.
int one_sided_sensitivity(const BooleanFunction& f, bool b);

int block_sensitivity_at(const BooleanFunction& f, Point x);
int block_sensitivity(const BooleanFunction& f);

struct CertificateComplexity {
  int value = 0;
  int zero = 0;  // max over f^{-1}(0)
  int one = 0;   // max over f^{-1}(1)
};
CertificateComplexity certificate_complexity(const BooleanFunction& f);

/// Largest number of free variables in a subcube holding exactly one 1-point
/// (AND up to input negations), resp. exactly one 0-point.
int and_dimension(const BooleanFunction& f);
int or_dimension(const BooleanFunction& f);

}  // namespace bfc
