#include "bfc/linalg/lp.hpp"

#include "bfc/error.hpp"

namespace bfc {

void LinearProgram::add(RationalVector coeffs, Relation rel, Rational rhs) {
  if (coeffs.size() != num_vars_) throw Error(ErrorCode::DimensionMismatch, "constraint length differs from variable count");
  constraints_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

bool LinearProgram::satisfied_by(const RationalVector& x) const {
  if (x.size() != num_vars_) return false;
  Rational lhs;
  for (const auto& c : constraints_) {
    lhs = 0;
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (c.coeffs[i] != 0) lhs += c.coeffs[i] * x[i];
    const bool ok = c.relation == Relation::Equal          ? lhs == c.rhs
                    : c.relation == Relation::GreaterEqual ? lhs >= c.rhs
                                                           : lhs <= c.rhs;
    if (!ok) return false;
  }
  return true;
}

namespace {

/// Phase-1 simplex on { A z - s = h, z >= 0, s >= 0 } (rows of A z >= h).
/// Returns z on success.
std::optional<RationalVector> phase_one(const std::vector<RationalVector>& a, const RationalVector& h) {
  const std::size_t m = a.size();
  const std::size_t nz = m == 0 ? 0 : a[0].size();
  // Columns: z (nz), slacks (m), artificials (one per row that needs it).
  std::vector<std::size_t> art_row;
  for (std::size_t i = 0; i < m; ++i)
    if (h[i] > 0) art_row.push_back(i);
  const std::size_t cols = nz + m + art_row.size();
  std::vector<RationalVector> t(m, RationalVector(cols + 1));  // last column = rhs
  std::vector<std::size_t> basis(m);
  std::size_t next_art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = h[i] <= 0;
    // flip: -A z + s = -h with s basic; else A z - s + art = h with art basic.
    for (std::size_t j = 0; j < nz; ++j)
      if (a[i][j] != 0) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][nz + i] = flip ? 1 : -1;
    t[i][cols] = flip ? Rational(-h[i]) : h[i];
    if (flip) {
      basis[i] = nz + i;
    } else {
      t[i][nz + m + next_art] = 1;
      basis[i] = nz + m + next_art;
      ++next_art;
    }
  }
  // Reduced costs of the phase-1 objective (minimize sum of artificials):
  // cost_j = -sum over artificial rows of t[i][j] for non-artificial j.
  RationalVector cost(cols + 1);
  for (std::size_t i : art_row)
    for (std::size_t j = 0; j <= cols; ++j)
      if (j < nz + m || j == cols)
        if (t[i][j] != 0) cost[j] -= t[i][j];

  Rational ratio, best, factor;
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) throw Error(ErrorCode::Internal, "phase-1 simplex is unbounded");
    RationalVector& prow = t[leave];
    const Rational inv = 1 / prow[enter];
    std::vector<std::size_t> nz_cols;
    for (std::size_t j = 0; j <= cols; ++j)
      if (prow[j] != 0) {
        prow[j] *= inv;
        nz_cols.push_back(j);
      }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      factor = t[i][enter];
      for (std::size_t j : nz_cols) t[i][j] -= factor * prow[j];
    }
    if (cost[enter] != 0) {
      factor = cost[enter];
      for (std::size_t j : nz_cols) cost[j] -= factor * prow[j];
    }
    basis[leave] = enter;
  }
  // Objective value is -cost[cols]; feasible iff it is zero.
  if (cost[cols] != 0) return std::nullopt;
  RationalVector z(nz);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < nz) z[basis[i]] = t[i][cols];
  return z;
}

}  // namespace

LpResult lp_feasible(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  std::vector<const Constraint*> equalities, inequalities;
  for (const auto& c : lp.constraints()) (c.relation == Relation::Equal ? equalities : inequalities).push_back(&c);

  // x = x0 + N t parametrizes the equality solutions.
  RationalVector x0(n);
  std::vector<RationalVector> null_basis;
  if (equalities.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector e(n);
      e[i] = 1;
      null_basis.push_back(std::move(e));
    }
  } else {
    RationalMatrix aug(equalities.size(), n + 1);
    for (std::size_t r = 0; r < equalities.size(); ++r) {
      for (std::size_t c = 0; c < n; ++c) aug(r, c) = equalities[r]->coeffs[c];
      aug(r, n) = equalities[r]->rhs;
    }
    const RrefResult red = rref(std::move(aug));
    if (red.rank > 0 && red.pivots[red.rank - 1] == n) return {};
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < red.rank; ++i) {
      is_pivot[red.pivots[i]] = true;
      x0[red.pivots[i]] = red.matrix(i, n);
    }
    for (std::size_t free = 0; free < n; ++free) {
      if (is_pivot[free]) continue;
      RationalVector v(n);
      v[free] = 1;
      for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.matrix(i, free);
      null_basis.push_back(std::move(v));
    }
  }

  const std::size_t k = null_basis.size();
  // Rows g t >= h over split variables t = t+ - t-.
  std::vector<RationalVector> rows;
  RationalVector rhs;
  Rational ax0, gj;
  for (const Constraint* c : inequalities) {
    const bool le = c->relation == Relation::LessEqual;
    ax0 = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (c->coeffs[i] != 0 && x0[i] != 0) ax0 += c->coeffs[i] * x0[i];
    RationalVector row(2 * k);
    bool any = false;
    for (std::size_t j = 0; j < k; ++j) {
      gj = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (c->coeffs[i] != 0 && null_basis[j][i] != 0) gj += c->coeffs[i] * null_basis[j][i];
      if (le) gj = -gj;
      if (gj != 0) any = true;
      row[j] = gj;
      row[k + j] = -gj;
    }
    Rational h = le ? Rational(ax0 - c->rhs) : Rational(c->rhs - ax0);
    if (!any) {
      if (h > 0) return {};
      continue;
    }
    rows.push_back(std::move(row));
    rhs.push_back(std::move(h));
  }

  RationalVector t(k);
  if (!rows.empty()) {
    const auto z = phase_one(rows, rhs);
    if (!z) return {};
    for (std::size_t j = 0; j < k; ++j) t[j] = (*z)[j] - (*z)[k + j];
  }
  LpResult out{true, x0};
  for (std::size_t j = 0; j < k; ++j)
    if (t[j] != 0)
      for (std::size_t i = 0; i < n; ++i)
        if (null_basis[j][i] != 0) out.witness[i] += t[j] * null_basis[j][i];
  if (!lp.satisfied_by(out.witness)) throw Error(ErrorCode::Internal, "LP witness failed verification");
  return out;
}

}  // namespace bfc
