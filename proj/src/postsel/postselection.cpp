#include "bfc/postsel/postselection.hpp"

#include <algorithm>
#include <string>

namespace bfc {

namespace {

PostSelectionOutcome outcome_from_values(Point x, const Rational& p, const Rational& q, int f_val) {
  if (p == 0 && q == 0)
    throw Error(ErrorCode::PostselectionImpossible, "p and q both vanish at point " + std::to_string(x));
  PostSelectionOutcome o;
  o.x = x;
  o.p_val = p;
  o.q_val = q;
  const Rational norm = 2 * (p * p + q * q);
  o.prob_minus = (q - p) * (q - p) / norm;
  o.prob_plus = (q + p) * (q + p) / norm;
  o.prob_wrong = f_val < 0 ? o.prob_plus : o.prob_minus;
  return o;
}

}  // namespace

PostSelectionOutcome outcome(const MultilinearPolynomial& p, const MultilinearPolynomial& q, Point x, int f_val) {
  if (f_val != 1 && f_val != -1) throw Error(ErrorCode::BadParams, "f_val must be 1 or -1");
  return outcome_from_values(x, p.eval(x), q.eval(x), f_val);
}

nlohmann::json ErrorCertificate::to_json() const {
  return {{"max_error", numerator_string(max_error) + "/" + denominator_string(max_error)},
          {"postq_bound", postq_bound},
          {"basis", "pm"}};
}

ErrorCertificate certify_error(const BooleanFunction& f, const MultilinearPolynomial& p, const MultilinearPolynomial& q,
                               const Rational& eps) {
  if (p.num_vars() != f.num_vars() || q.num_vars() != f.num_vars())
    throw Error(ErrorCode::DimensionMismatch, "representation arity differs from f");
  const ScaledValues pv = evaluate_all_scaled(p), qv = evaluate_all_scaled(q);
  ErrorCertificate cert;
  for (Point x = 0; x < f.num_points(); ++x) {
    if (!f.in_domain(x)) continue;
    const auto o = outcome_from_values(x, ratio(pv.values[x], pv.scale), ratio(qv.values[x], qv.scale), f.sign(x));
    if (o.prob_wrong > cert.max_error) {
      cert.max_error = o.prob_wrong;
      cert.worst = x;
    }
  }
  cert.postq_bound = 2 * std::max(p.degree(), q.degree());
  cert.within_eps = cert.max_error <= eps;
  return cert;
}

std::pair<MultilinearPolynomial, MultilinearPolynomial> to_sign_representation(const MultilinearPolynomial& p,
                                                                               const MultilinearPolynomial& q) {
  MultilinearPolynomial num = q - p * Rational(2);
  return {basis_convert(num, Basis::PlusMinus), basis_convert(q, Basis::PlusMinus)};
}

}  // namespace bfc
