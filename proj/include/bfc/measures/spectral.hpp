#pragma once

#include <cstddef>

#include "bfc/core/boolean_function.hpp"
#include "bfc/rational.hpp"

namespace bfc {

inline constexpr int kSpectralCap = 18;
inline constexpr double kSpectralTolerance = 1e-9;
inline constexpr std::size_t kSpectralIterations = 1000000;

struct SpectralResult {
  double lambda = 0;
  /// lower is the Rayleigh quotient of an explicit positive vector u, upper the
  /// largest ratio (A u)_x / u_x within a connected component; both exact.
  Rational lower, upper;
  std::size_t iterations = 0;
};

/// Largest eigenvalue of the sensitivity graph (neighbors with different values).
/// Total f only, n <= kSpectralCap.
SpectralResult spectral_sensitivity(const BooleanFunction& f, double tol = kSpectralTolerance);

}  // namespace bfc
