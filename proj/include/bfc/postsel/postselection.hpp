#pragma once

#include <utility>

#include "json.hpp"
#include "bfc/core/boolean_function.hpp"
#include "bfc/poly/polynomial.hpp"

namespace bfc {

/// Measurement statistics of the post-selected state p(x)|0> + q(x)|1> in the ±
/// basis. Outcome |-> is read as value -1, |+> as +1.
struct PostSelectionOutcome {
  Point x = 0;
  Rational p_val, q_val;
  Rational prob_minus, prob_plus;
  Rational prob_wrong;  // probability that the label differs from f_val
};

/// prob(-) = (q-p)^2 / (2(p^2+q^2)), prob(+) = (q+p)^2 / (2(p^2+q^2)).
/// f_val is ±1. Throws PostselectionImpossible when p(x) = q(x) = 0.
PostSelectionOutcome outcome(const MultilinearPolynomial& p, const MultilinearPolynomial& q, Point x, int f_val);

struct ErrorCertificate {
  Rational max_error;
  Point worst = 0;
  int postq_bound = 0;  // 2 * max(deg p, deg q)
  bool within_eps = false;
  nlohmann::json to_json() const;
};

/// Largest prob_wrong over D for a representation p/q of f in its ±1 view.
ErrorCertificate certify_error(const BooleanFunction& f, const MultilinearPolynomial& p, const MultilinearPolynomial& q,
                               const Rational& eps = 0);

/// Turns a representation p/q of the 0/1 values into one of the ±1 view,
/// (q - 2p)/q, both in the PlusMinus basis.
std::pair<MultilinearPolynomial, MultilinearPolynomial> to_sign_representation(const MultilinearPolynomial& p,
                                                                               const MultilinearPolynomial& q);

}  // namespace bfc
