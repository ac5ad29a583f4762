#include "bfc/measures/lp_degrees.hpp"

#include <functional>

#include "bfc/linalg/lp.hpp"

namespace bfc {

namespace {

/// Polynomials averaged over the permutations inside each symmetry block. A type a
/// counts how many variables of each block a monomial uses; at a point with block
/// weights w its orbit sum is Π_i K_{a_i}(w_i; |B_i|) with the Krawtchouk polynomial
/// K_a(w; N) = Σ_j (-1)^j C(w, j) C(N - w, a - j).
class SymmetricLp {
 public:
  explicit SymmetricLp(const BooleanFunction& f) : f_(f), blocks_(symmetry_blocks(f)) {
    for (VarSet b : blocks_) {
      const int size = std::popcount(b);
      sizes_.push_back(size);
      std::vector<std::vector<Integer>> k(size + 1, std::vector<Integer>(size + 1));
      for (int a = 0; a <= size; ++a)
        for (int w = 0; w <= size; ++w)
          for (int j = 0; j <= std::min(a, w); ++j) {
            const Integer term = binomial(w, j) * binomial(size - w, a - j);
            k[a][w] += j % 2 ? Integer(-term) : term;
          }
      kraw_.push_back(std::move(k));
    }
    for_each_vector(sizes_, -1, [&](const std::vector<int>& w) { classes_.push_back(w); });
  }

  /// Types of degree at most d.
  std::vector<std::vector<int>> types(int d) const {
    std::vector<std::vector<int>> out;
    for_each_vector(sizes_, d, [&](const std::vector<int>& a) { out.push_back(a); });
    return out;
  }

  const std::vector<std::vector<int>>& classes() const noexcept { return classes_; }

  Point representative(const std::vector<int>& w) const {
    Point x = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      VarSet b = blocks_[i];
      for (int j = 0; j < w[i]; ++j, b &= b - 1) x |= b & (~b + 1);
    }
    return x;
  }

  RationalVector row(const std::vector<int>& w, const std::vector<std::vector<int>>& types) const {
    RationalVector r;
    r.reserve(types.size());
    for (const auto& a : types) {
      Integer v = 1;
      for (std::size_t i = 0; i < a.size(); ++i) v *= kraw_[i][a[i]][w[i]];
      r.emplace_back(v);
    }
    return r;
  }

  MultilinearPolynomial expand(const std::vector<std::vector<int>>& types, const RationalVector& c, int d) const {
    MultilinearPolynomial p(f_.num_vars(), Basis::PlusMinus);
    for (VarSet s : subsets_up_to(f_.num_vars(), d)) {
      std::vector<int> a;
      for (VarSet b : blocks_) a.push_back(std::popcount(s & b));
      for (std::size_t t = 0; t < types.size(); ++t)
        if (types[t] == a) {
          p.add_term(s, c[t]);
          break;
        }
    }
    return p;
  }

 private:
  /// Calls fn on every vector v with 0 <= v_i <= bound_i and, if cap >= 0, Σ v_i <= cap.
  static void for_each_vector(const std::vector<int>& bound, int cap, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> v(bound.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i == bound.size()) {
        fn(v);
        return;
      }
      for (int x = 0; x <= bound[i] && (cap < 0 || x <= left); ++x) {
        v[i] = x;
        rec(i + 1, left - x);
      }
    };
    rec(0, cap);
  }

  const BooleanFunction& f_;
  std::vector<VarSet> blocks_;
  std::vector<int> sizes_;
  std::vector<std::vector<std::vector<Integer>>> kraw_;
  std::vector<std::vector<int>> classes_;
};

using Rows = std::function<void(LinearProgram&, const RationalVector&, Point)>;
using Check = std::function<bool(const ScaledValues&)>;

LpDegreeResult minimal_degree(const BooleanFunction& f, const Rows& add_rows, const Check& verify) {
  const SymmetricLp sym(f);
  for (int d = 0; d <= f.num_vars(); ++d) {
    const auto types = sym.types(d);
    LinearProgram lp(types.size());
    for (const auto& w : sym.classes()) add_rows(lp, sym.row(w, types), sym.representative(w));
    const LpResult res = lp_feasible(lp);
    if (!res.feasible) continue;
    LpDegreeResult out{d, sym.expand(types, res.witness, d)};
    if (!verify(evaluate_all_scaled(out.witness)))
      throw Error(ErrorCode::Internal, "LP witness failed pointwise verification");
    return out;
  }
  throw Error(ErrorCode::Internal, "no feasible degree found");
}

}  // namespace

LpDegreeResult sign_degree(const BooleanFunction& f) {
  if (!f.is_total()) throw Error(ErrorCode::PartialNotSupported, "sign degree requires a total function");
  return minimal_degree(
      f,
      [&](LinearProgram& lp, const RationalVector& row, Point x) {
        lp.add(row, f.value(x) ? Relation::LessEqual : Relation::GreaterEqual, f.sign(x));
      },
      [&](const ScaledValues& v) {
        for (Point x = 0; x < f.num_points(); ++x)
          if (v.values[x] * f.sign(x) <= 0) return false;
        return true;
      });
}

LpDegreeResult approx_degree(const BooleanFunction& f, const Rational& eps) {
  if (eps < 0 || eps >= make_rational(1, 2)) throw Error(ErrorCode::BadParams, "eps must lie in [0, 1/2)");
  return minimal_degree(
      f,
      [&](LinearProgram& lp, const RationalVector& row, Point x) {
        if (!f.in_domain(x)) {
          lp.add(row, Relation::GreaterEqual, -1);
          lp.add(row, Relation::LessEqual, 1);
          return;
        }
        const int target = f.sign(x);
        if (eps == 0) {
          lp.add(row, Relation::Equal, target);
        } else if (target == 1) {
          lp.add(row, Relation::GreaterEqual, 1 - eps);
          lp.add(row, Relation::LessEqual, 1);
        } else {
          lp.add(row, Relation::GreaterEqual, -1);
          lp.add(row, Relation::LessEqual, eps - 1);
        }
      },
      [&](const ScaledValues& v) {
        for (Point x = 0; x < f.num_points(); ++x) {
          if (abs(v.values[x]) > v.scale) return false;
          if (f.in_domain(x) && Rational(v.values[x] - v.scale * f.sign(x)) > eps * v.scale) return false;
          if (f.in_domain(x) && Rational(v.scale * f.sign(x) - v.values[x]) > eps * v.scale) return false;
        }
        return true;
      });
}

}  // namespace bfc
