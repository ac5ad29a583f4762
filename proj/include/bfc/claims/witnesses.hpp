#pragma once

#include <utility>

#include "json.hpp"
#include "bfc/poly/polynomial.hpp"

namespace bfc {

using RationalRep = std::pair<MultilinearPolynomial, MultilinearPolynomial>;

/// p = Π_i (Σ_j x_ij), q = p + Σ_i Π_j (1 - x_ij) for AND of a ORs of fan-in b.
/// Verified on every point. Throws CapExceeded when a*b exceeds the variable cap.
RationalRep andor_rational_rep(int a, int b);

/// Σ x_i - n/2, nonzero exactly off the middle slice. n even.
MultilinearPolynomial ehbar_witness(int n);

/// Π_{i=n/3}^{2n/3} (Σ x - i), vanishing exactly on the middle third. 3 | n, n <= 15.
MultilinearPolynomial mt_complement_witness(int n);

/// Degree <= n/3 polynomial vanishing outside the middle third and nonzero inside it,
/// obtained from the kernel-plus-avoidance search. 3 | n, n <= 12.
MultilinearPolynomial mt_existence_witness(int n);

/// With L, R the ±1 sums over the two halves: p = (R - L)/2, q = R, a degree-1
/// representation of the balanced-halves promise function. n = 4m + 2 <= 18.
RationalRep bi_rational_witness(int n);

/// Measure row for AND_n of n copies of the complement of EH_n (n in {2, 4}).
nlohmann::json separation_report(int n);

}  // namespace bfc
