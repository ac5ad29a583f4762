#include "bfc/claims/witnesses.hpp"

#include <cmath>
#include <string>

#include "bfc/core/families.hpp"
#include "bfc/measures/combinatorial.hpp"
#include "bfc/measures/ndeg.hpp"
#include "bfc/measures/report.hpp"
#include "bfc/measures/spectral.hpp"

namespace bfc {

namespace {

using Poly = MultilinearPolynomial;

Poly linear_sum(int n, int first, int count, const Rational& shift) {
  Poly p = Poly::constant(n, Basis::ZeroOne, shift);
  for (int i = first; i < first + count; ++i) p += Poly::variable(n, Basis::ZeroOne, i);
  return p;
}

/// Σ_{i in block} (1 - 2 x_i)
Poly sign_sum(int n, int first, int count) {
  Poly p = Poly::constant(n, Basis::ZeroOne, count);
  for (int i = first; i < first + count; ++i) p -= Poly::variable(n, Basis::ZeroOne, i) * Rational(2);
  return p;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

void verified(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::Internal, what + " failed pointwise verification");
}

}  // namespace

RationalRep andor_rational_rep(int a, int b) {
  require(a >= 1 && b >= 1, "fan-ins must be positive");
  if (a * b > variable_cap()) throw Error(ErrorCode::CapExceeded, "andor has a*b variables");
  const int n = a * b;
  Poly p = Poly::constant(n, Basis::ZeroOne, 1);
  Poly none(n, Basis::ZeroOne);
  for (int i = 0; i < a; ++i) {
    p = p * linear_sum(n, i * b, b, 0);
    Poly all_zero = Poly::constant(n, Basis::ZeroOne, 1);
    for (int j = 0; j < b; ++j)
      all_zero = all_zero * (Poly::constant(n, Basis::ZeroOne, 1) - Poly::variable(n, Basis::ZeroOne, i * b + j));
    none += all_zero;
  }
  RationalRep rep{p, p + none};
  verified(is_rational_rep(and_of_ors(a, b), rep.first, rep.second), "AND-of-OR representation");
  return rep;
}

Poly ehbar_witness(int n) {
  require(n >= 2 && n % 2 == 0, "n must be even");
  Poly p = linear_sum(n, 0, n, -n / 2);
  verified(is_nondeterministic_rep(exact_half_complement(n), p), "off-middle witness");
  return p;
}

Poly mt_complement_witness(int n) {
  require(n >= 3 && n % 3 == 0 && n <= 15, "n must be a multiple of 3 in [3, 15]");
  Poly p = Poly::constant(n, Basis::ZeroOne, 1);
  for (int i = n / 3; i <= 2 * n / 3; ++i) p = p * linear_sum(n, 0, n, -i);
  verified(is_nondeterministic_rep(negate_output(middle_third(n)), p), "middle-third complement witness");
  return p;
}

Poly mt_existence_witness(int n) {
  require(n >= 3 && n % 3 == 0 && n <= 12, "n must be a multiple of 3 in [3, 12]");
  const auto f = middle_third(n);
  Poly p = ndeg(f).witness;
  verified(p.degree() <= n / 3 && is_nondeterministic_rep(f, p), "middle-third witness");
  return p;
}

RationalRep bi_rational_witness(int n) {
  require(n >= 2 && n % 4 == 2 && n <= 18, "n must be 4m+2 and at most 18");
  const int half = n / 2;
  const Poly l = sign_sum(n, 0, half), r = sign_sum(n, half, half);
  RationalRep rep{(r - l) * make_rational(1, 2), r};
  verified(is_rational_rep(balanced_halves(n), rep.first, rep.second), "balanced-halves representation");
  return rep;
}

nlohmann::json separation_report(int n) {
  require(n == 2 || n == 4, "n must be 2 or 4");
  const std::vector<BooleanFunction> inner(static_cast<std::size_t>(n), exact_half_complement(n));
  const auto f = compose_disjoint(and_fn(n), inner);
  const auto r = rdeg(f);
  const int ndeg_f = ndeg(f).value, ndeg_bar = ndeg(negate_output(f)).value;
  const int degree = deg(f), s = sensitivity(f);
  const auto lambda = spectral_sensitivity(f);
  nlohmann::json out = {{"function", "and:" + std::to_string(n) + " of eh-complement:" + std::to_string(n)},
                        {"n", n},
                        {"variables", f.num_vars()},
                        {"rdeg", r.value},
                        {"ndeg", ndeg_f},
                        {"ndeg_complement", ndeg_bar},
                        {"deg", degree},
                        {"s", s},
                        {"lambda", {{"value", lambda.lambda}, {"lower", rational_json(lambda.lower)}, {"upper", rational_json(lambda.upper)}}},
                        {"lambda_over_rdeg", lambda.lambda / r.value},
                        {"deg_over_rdeg_squared", static_cast<double>(degree) / (r.value * r.value)}};
  if (f.num_vars() <= kSearchCap) {
    out["bs"] = block_sensitivity(f);
    out["cert"] = certificate_complexity(f).value;
  }
  return out;
}

}  // namespace bfc
