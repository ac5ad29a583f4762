#pragma once

#include <optional>
#include <vector>

#include "bfc/linalg/matrix.hpp"

namespace bfc {

enum class Relation { GreaterEqual, LessEqual, Equal };

struct Constraint {
  RationalVector coeffs;
  Relation relation;
  Rational rhs;
};

/// Feasibility problem over free (unbounded) real variables.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }

  /// Throws DimensionMismatch when the coefficient vector has the wrong length.
  void add(RationalVector coeffs, Relation rel, Rational rhs);

  bool satisfied_by(const RationalVector& x) const;

 private:
  std::size_t num_vars_;
  std::vector<Constraint> constraints_;
};

struct LpResult {
  bool feasible = false;
  RationalVector witness;  // meaningful when feasible
};

/// Exact feasibility: equalities are eliminated by exact RREF, the remaining
/// inequalities go through phase-1 simplex with Bland's rule. A returned witness
/// has been checked against every constraint.
LpResult lp_feasible(const LinearProgram& lp);

}  // namespace bfc
