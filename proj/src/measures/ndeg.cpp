#include "bfc/measures/ndeg.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <variant>

#include "bfc/linalg/modular.hpp"

namespace bfc {

namespace {

/// Small binomials; C(n, k) for n <= 20 fits comfortably in int64.
const std::array<std::array<std::int64_t, 21>, 21>& small_binomials() {
  static const auto table = [] {
    std::array<std::array<std::int64_t, 21>, 21> c{};
    for (int n = 0; n <= 20; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0);
    }
    return c;
  }();
  return table;
}

template <class F>
void subsets_of_size_at_most(const int* bits, int count, int d, Point acc, int size, F& fn) {
  fn(acc, size);
  if (size == d) return;
  for (int i = 0; i < count; ++i) subsets_of_size_at_most(bits + i + 1, count - i - 1, d, acc | (Point{1} << bits[i]), size + 1, fn);
}

/// Polynomials of degree <= d are parametrized by their values v_U = p(1_U) on the
/// points of weight <= d. Unknowns fixed to zero by f are eliminated.
class Layout {
 public:
  Layout(const BooleanFunction& f, int d) : n_(f.num_vars()), d_(d), col_of_(std::size_t{1} << n_, -1) {
    for (VarSet u : subsets_up_to(n_, d)) {
      if (f.in_domain(u) && !f.value(u)) continue;
      col_of_[u] = static_cast<std::int32_t>(points_.size());
      points_.push_back(u);
    }
  }

  int num_vars() const noexcept { return n_; }
  int degree() const noexcept { return d_; }
  std::size_t cols() const noexcept { return points_.size(); }
  Point point(std::size_t col) const { return points_[col]; }

  /// Coefficients expressing p(z) through the unknowns:
  /// p(z) = Σ_{U ⊆ z, |U| <= d} (-1)^{d-|U|} C(|z|-|U|-1, d-|U|) v_U for |z| > d.
  SparseRow row(Point z) const {
    SparseRow out;
    const int w = weight(z);
    if (w <= d_) {
      if (col_of_[z] >= 0) out.emplace_back(static_cast<std::uint32_t>(col_of_[z]), 1);
      return out;
    }
    int bits[32];
    int count = 0;
    for (Point t = z; t; t &= t - 1) bits[count++] = std::countr_zero(t);
    const auto& c = small_binomials();
    auto emit = [&](Point u, int size) {
      const std::int32_t col = col_of_[u];
      if (col < 0) return;
      const std::int64_t mag = c[w - size - 1][d_ - size];
      out.emplace_back(static_cast<std::uint32_t>(col), (d_ - size) % 2 ? -mag : mag);
    };
    subsets_of_size_at_most(bits, count, d_, 0, 0, emit);
    return out;
  }

  /// Scatters lower-set values into a cube array and returns p at every point,
  /// working in the ring T (mod-p residues or exact integers).
  template <class T, class Add, class Sub>
  std::vector<T> cube_values(std::vector<T> a, Add add, Sub sub) const {
    for (int i = 0; i < n_; ++i) {
      const Point bit = Point{1} << i;
      for (Point x = 0; x < a.size(); ++x)
        if ((x & bit) && weight(x) <= d_) a[x] = sub(a[x], a[x ^ bit]);
    }
    for (Point x = 0; x < a.size(); ++x)
      if (weight(x) > d_) a[x] = T(0);
    for (int i = 0; i < n_; ++i) {
      const Point bit = Point{1} << i;
      for (Point x = 0; x < a.size(); ++x)
        if (x & bit) a[x] = add(a[x], a[x ^ bit]);
    }
    return a;
  }

  std::vector<std::uint32_t> values_mod(const std::vector<Integer>& w, std::uint32_t p) const {
    std::vector<std::uint32_t> a(std::size_t{1} << n_, 0);
    for (std::size_t c = 0; c < w.size(); ++c) a[points_[c]] = mod_reduce(w[c], p);
    return cube_values(
        std::move(a), [p](std::uint32_t x, std::uint32_t y) { return mod_add(x, y, p); },
        [p](std::uint32_t x, std::uint32_t y) { return mod_sub(x, y, p); });
  }

  /// Monomial coefficients (indexed by set) of the degree-d polynomial with the given
  /// lower-set values.
  std::vector<Integer> coefficients(const std::vector<Integer>& w) const {
    std::vector<Integer> a(std::size_t{1} << n_);
    for (std::size_t c = 0; c < w.size(); ++c) a[points_[c]] = w[c];
    for (int i = 0; i < n_; ++i) {
      const Point bit = Point{1} << i;
      for (Point x = 0; x < a.size(); ++x)
        if ((x & bit) && weight(x) <= d_) a[x] -= a[x ^ bit];
    }
    for (Point x = 0; x < a.size(); ++x)
      if (weight(x) > d_) a[x] = 0;
    return a;
  }

  std::vector<Integer> values_exact(const std::vector<Integer>& w) const {
    std::vector<Integer> a(std::size_t{1} << n_);
    for (std::size_t c = 0; c < w.size(); ++c) a[points_[c]] = w[c];
    return cube_values(
        std::move(a), [](const Integer& x, const Integer& y) { return Integer(x + y); },
        [](const Integer& x, const Integer& y) { return Integer(x - y); });
  }

 private:
  int n_, d_;
  std::vector<std::int32_t> col_of_;
  std::vector<Point> points_;
};

/// Outcome of the modular feasibility test at one degree.
struct ModState {
  ModKernel kernel;
  std::vector<Point> rows;  // independent rows, as points of f^{-1}(0)
  std::optional<Point> uncovered;
};

ModState modular_pass(const Layout& layout, const std::vector<Point>& zeros, const std::vector<Point>& ones,
                      std::uint32_t p) {
  ModState st{ModKernel(layout.cols(), p), {}, std::nullopt};
  for (Point z : zeros) {
    if (weight(z) <= layout.degree()) continue;
    if (st.kernel.add_row(layout.row(z))) st.rows.push_back(z);
    if (st.kernel.dim() == 0) break;
  }
  for (Point y : ones)
    if (st.kernel.annihilates(layout.row(y))) {
      st.uncovered = y;
      break;
    }
  return st;
}

/// Splits the columns into the kernel pivots G and the rest H, and builds E_R restricted to each.
struct Blocks {
  std::vector<std::uint32_t> g, h;
  IntMatrix eh, eg;  // rows of R restricted to H and G
};

Blocks split_rows(const Layout& layout, const ModState& st) {
  Blocks b;
  b.g = st.kernel.pivot_columns();
  std::vector<std::int32_t> pos(layout.cols(), -1);
  for (std::size_t j = 0; j < b.g.size(); ++j) pos[b.g[j]] = -2 - static_cast<std::int32_t>(j);
  for (std::uint32_t c = 0; c < layout.cols(); ++c)
    if (pos[c] == -1) {
      pos[c] = static_cast<std::int32_t>(b.h.size());
      b.h.push_back(c);
    }
  if (b.h.size() != st.rows.size()) throw Error(ErrorCode::Internal, "rank bookkeeping mismatch in ndeg");
  b.eh = IntMatrix(st.rows.size(), b.h.size());
  b.eg = IntMatrix(st.rows.size(), b.g.size());
  for (std::size_t i = 0; i < st.rows.size(); ++i)
    for (const auto& [c, a] : layout.row(st.rows[i])) {
      if (pos[c] >= 0) b.eh(i, pos[c]) = a;
      else b.eg(i, -2 - pos[c]) = a;
    }
  return b;
}

/// Exact proof that every polynomial of degree <= d vanishing on the rows of st also
/// vanishes at st.uncovered: a rational combination of those rows equals its row.
bool certify_blocked(const Layout& layout, const ModState& st) {
  const Point y = *st.uncovered;
  const Blocks b = split_rows(layout, st);
  const std::size_t r = b.h.size();
  std::vector<std::int64_t> target(layout.cols(), 0);
  for (const auto& [c, a] : layout.row(y)) target[c] = a;
  std::vector<Integer> lambda(r);
  Integer den = 1;
  if (r > 0) {
    IntMatrix at(r, r), rhs(r, 1);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) at(j, i) = b.eh(i, j);
      rhs(i, 0) = target[b.h[i]];
    }
    const auto sol = dixon_solve(at, rhs, st.kernel.prime());
    if (!sol) return false;
    lambda = sol->numerators[0];
    den = sol->denominators[0];
  }
  for (std::size_t j = 0; j < b.g.size(); ++j) {
    Integer acc = 0;
    for (std::size_t i = 0; i < r; ++i) acc += lambda[i] * b.eg(i, j);
    if (acc != den * target[b.g[j]]) return false;
  }
  return true;
}

struct Blocked {};
struct Inconclusive {};
using Attempt = std::variant<MultilinearPolynomial, Blocked, Inconclusive>;

/// Builds a certified degree-d witness from the exact kernel of the independent rows,
/// or proves that one of the ones is forced to zero.
Attempt build_witness(const Layout& layout, const ModState& st, const std::vector<Point>& zeros,
                      const std::vector<Point>& ones, std::uint32_t check_prime) {
  const Blocks b = split_rows(layout, st);
  const std::size_t r = b.h.size(), k = b.g.size();
  std::vector<std::vector<Integer>> kernel(k, std::vector<Integer>(layout.cols()));
  if (r == 0) {
    for (std::size_t j = 0; j < k; ++j) kernel[j][b.g[j]] = 1;
  } else {
    IntMatrix neg(r, k);
    for (std::size_t i = 0; i < neg.data.size(); ++i) neg.data[i] = -b.eg.data[i];
    const auto sol = dixon_solve(b.eh, neg, st.kernel.prime());
    if (!sol) return Inconclusive{};
    for (std::size_t j = 0; j < k; ++j) {
      kernel[j][b.g[j]] = sol->denominators[j];
      for (std::size_t i = 0; i < r; ++i) kernel[j][b.h[i]] = sol->numerators[j][i];
    }
  }

  // Greedy cover of the ones, scanning the kernel basis in order. A nonzero residue
  // proves a nonzero value; residues that vanish are rechecked exactly.
  std::vector<char> covered(ones.size(), 0);
  std::size_t left = ones.size();
  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < k && left > 0; ++j) {
    const auto vals = layout.values_mod(kernel[j], check_prime);
    bool useful = false;
    for (std::size_t t = 0; t < ones.size(); ++t)
      if (!covered[t] && vals[ones[t]] != 0) {
        covered[t] = 1;
        --left;
        useful = true;
      }
    if (useful) chosen.push_back(j);
  }
  if (left > 0) {
    for (std::size_t t = 0; t < ones.size(); ++t) {
      if (covered[t]) continue;
      const SparseRow row = layout.row(ones[t]);
      for (std::size_t j = 0; j < k && !covered[t]; ++j) {
        Integer acc = 0;
        for (const auto& [c, a] : row) acc += kernel[j][c] * a;
        if (acc != 0) {
          covered[t] = 1;
          if (std::find(chosen.begin(), chosen.end(), j) == chosen.end()) chosen.push_back(j);
        }
      }
      // Every polynomial vanishing on the independent rows vanishes here, so no
      // degree-d polynomial can separate this point from f^{-1}(0).
      if (!covered[t]) return Blocked{};
    }
  }

  std::vector<std::vector<Rational>> v;
  for (std::size_t j : chosen) {
    const auto vals = layout.values_exact(kernel[j]);
    std::vector<Rational> row(ones.size());
    for (std::size_t t = 0; t < ones.size(); ++t) row[t] = vals[ones[t]];
    v.push_back(std::move(row));
  }
  const std::vector<Rational> alpha = avoidance_combine(v);
  Integer lcm = 1;
  for (const auto& a : alpha) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.get_den_mpz_t());
  std::vector<Integer> w(layout.cols(), 0);
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const Integer scale = alpha[i].get_num() * (lcm / alpha[i].get_den());
    for (std::size_t c = 0; c < w.size(); ++c) w[c] += scale * kernel[chosen[i]][c];
  }
  Integer g = 0;
  for (const auto& x : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());

  const auto vals = layout.values_exact(w);
  for (Point z : zeros)
    if (vals[z] != 0) return Inconclusive{};
  for (Point y : ones)
    if (vals[y] == 0) return Inconclusive{};
  const auto coeffs = layout.coefficients(w);
  MultilinearPolynomial p(layout.num_vars(), Basis::ZeroOne);
  for (VarSet s : subsets_up_to(layout.num_vars(), layout.degree()))
    if (coeffs[s] != 0) p.add_term(s, Rational(coeffs[s]));
  return p;
}

constexpr int kPrimeAttempts = 8;

bool certify_below(const BooleanFunction& f, const std::vector<Point>& zeros, const std::vector<Point>& ones, int d) {
  const Layout layout(f, d);
  for (int a = 0; a < kPrimeAttempts; ++a) {
    const ModState st = modular_pass(layout, zeros, ones, word_primes()[a]);
    if (!st.uncovered) return false;
    if (certify_blocked(layout, st)) return true;
  }
  return false;
}

}  // namespace

std::vector<Rational> avoidance_combine(const std::vector<std::vector<Rational>>& v) {
  if (v.empty()) throw Error(ErrorCode::UncoveredColumn, "no rows to combine");
  const std::size_t cols = v[0].size();
  for (const auto& row : v)
    if (row.size() != cols) throw Error(ErrorCode::DimensionMismatch, "rows have different lengths");
  for (std::size_t y = 0; y < cols; ++y) {
    bool nonzero = false;
    for (const auto& row : v) nonzero = nonzero || row[y] != 0;
    if (!nonzero) throw Error(ErrorCode::UncoveredColumn, "column " + std::to_string(y) + " is zero in every row");
  }
  // With b_i the smallest nonzero |V_i| and B_i the largest, choosing
  // α_i b_i = 1 + Σ_{j<i} α_j B_j makes the last nonzero row of each column dominate.
  std::vector<Rational> alpha;
  Rational mass = 0;
  for (const auto& row : v) {
    Rational lo = 0, hi = 0;
    for (const auto& x : row) {
      const Rational m = abs(x);
      if (m == 0) continue;
      if (lo == 0 || m < lo) lo = m;
      if (m > hi) hi = m;
    }
    if (hi == 0) {
      alpha.emplace_back(1);
      continue;
    }
    Rational a = alpha.empty() ? Rational(1) : Rational((1 + mass) / lo);
    a.canonicalize();
    mass += a * hi;
    alpha.push_back(a);
  }
  for (std::size_t y = 0; y < cols; ++y) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += alpha[i] * v[i][y];
    if (s == 0) throw Error(ErrorCode::Internal, "combined vector vanishes on column " + std::to_string(y));
  }
  return alpha;
}

NdegResult ndeg(const BooleanFunction& f) {
  const int n = f.num_vars();
  const std::vector<Point> zeros = f.zeros(), ones = f.ones();
  if (ones.empty()) return {0, MultilinearPolynomial(n, Basis::ZeroOne)};
  if (zeros.empty()) return {0, MultilinearPolynomial::constant(n, Basis::ZeroOne, 1)};

  const auto& primes = word_primes();
  int d = 1;
  while (d < n && modular_pass(Layout(f, d), zeros, ones, primes[0]).uncovered) ++d;
  for (int guard = 0; guard < 4 * (n + 1); ++guard) {
    if (d > 1 && !certify_below(f, zeros, ones, d - 1)) {
      --d;
      continue;
    }
    const Layout layout(f, d);
    bool blocked = false;
    for (int a = 0; a < kPrimeAttempts && !blocked; ++a) {
      const ModState st = modular_pass(layout, zeros, ones, primes[a]);
      if (st.uncovered) {
        blocked = certify_blocked(layout, st);
        continue;
      }
      Attempt res = build_witness(layout, st, zeros, ones, primes[kPrimeAttempts + a]);
      if (auto* p = std::get_if<MultilinearPolynomial>(&res)) return {d, std::move(*p)};
      blocked = std::holds_alternative<Blocked>(res);
    }
    if (!blocked) break;
    ++d;
  }
  throw Error(ErrorCode::Internal, "ndeg search did not converge");
}

bool is_nondeterministic_rep(const BooleanFunction& f, const MultilinearPolynomial& p) {
  if (p.num_vars() != f.num_vars()) return false;
  const ScaledValues v = evaluate_all_scaled(basis_convert(p, Basis::ZeroOne));
  for (Point x = 0; x < f.num_points(); ++x)
    if (f.in_domain(x) && (v.values[x] != 0) != f.value(x)) return false;
  return true;
}

bool is_rational_rep(const BooleanFunction& f, const MultilinearPolynomial& p, const MultilinearPolynomial& q) {
  if (p.num_vars() != f.num_vars() || q.num_vars() != f.num_vars()) return false;
  const ScaledValues pv = evaluate_all_scaled(basis_convert(p, Basis::ZeroOne));
  const ScaledValues qv = evaluate_all_scaled(basis_convert(q, Basis::ZeroOne));
  for (Point x = 0; x < f.num_points(); ++x) {
    if (!f.in_domain(x)) continue;
    if (qv.values[x] == 0) return false;
    // p/q = f  <=>  p_s * q_scale = f * q_s * p_scale
    const Integer lhs = pv.values[x] * qv.scale;
    const Integer rhs = f.value(x) ? Integer(qv.values[x] * pv.scale) : Integer(0);
    if (lhs != rhs) return false;
  }
  return true;
}

RdegResult rdeg(const BooleanFunction& f) {
  NdegResult g1 = ndeg(f);
  NdegResult g2 = ndeg(negate_output(f));
  RdegResult out{std::max(g1.value, g2.value), g1.witness, g1.witness - g2.witness};
  if (!is_rational_rep(f, out.p, out.q)) throw Error(ErrorCode::Internal, "rational representation failed verification");
  return out;
}

}  // namespace bfc
