#pragma once

#include <span>
#include <string>

#include "bfc/core/boolean_function.hpp"

namespace bfc {

BooleanFunction parity_fn(int n);
BooleanFunction and_fn(int n);
BooleanFunction or_fn(int n);
/// Dictator on variable `var` of an n-variable cube.
BooleanFunction dictator(int n, int var = 0);
/// 1 iff |x| >= k, with 1 <= k <= n.
BooleanFunction threshold_fn(int k, int n);
/// 1 iff |x| = n/2 (n even).
BooleanFunction exact_half(int n);
/// 1 iff |x| != n/2 (n even).
BooleanFunction exact_half_complement(int n);
/// 1 iff n/3 <= |x| <= 2n/3 (3 divides n).
BooleanFunction middle_third(int n);
/// Partial: domain is |x| = 0 or |x| >= ceil(n/2); value 0 only at the all-zero input.
BooleanFunction majority_or_none(int n);
/// Partial, n = 4m+2. Halves L = vars [0, 2m], R = the rest. Value 0 when both halves
/// have weight m, 1 when the half weights are {m, m+1}; undefined elsewhere.
BooleanFunction balanced_halves(int n);
/// AND of a blocks, each an OR of b variables; block i holds vars i*b .. i*b+b-1.
BooleanFunction and_of_ors(int a, int b);

/// Named constructor. Names: parity, and, or, thr (k, n), eh, ehbar, mt, majn, bi,
/// andor (a, b). Case-insensitive. Throws BadParams naming the violated constraint.
BooleanFunction family(const std::string& name, std::span<const int> params);

}  // namespace bfc
