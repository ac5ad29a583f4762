#include <gtest/gtest.h>

#include <random>

#include "bfc/linalg/lp.hpp"
#include "bfc/linalg/matrix.hpp"
#include "bfc/linalg/modular.hpp"

namespace bfc {
namespace {

RationalMatrix ints(const std::vector<std::vector<long>>& rows) {
  std::vector<RationalVector> r;
  for (const auto& row : rows) {
    RationalVector v;
    for (long x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return RationalMatrix::from_rows(r);
}

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, int rank_hint, std::mt19937_64& rng) {
  // Product of random rows x cols factors keeps the rank below rank_hint.
  RationalMatrix left(rows, static_cast<std::size_t>(rank_hint)), right(static_cast<std::size_t>(rank_hint), cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (int k = 0; k < rank_hint; ++k) left(i, k) = static_cast<long>(rng() % 7) - 3;
  for (int k = 0; k < rank_hint; ++k)
    for (std::size_t j = 0; j < cols; ++j) right(k, j) = make_rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (int k = 0; k < rank_hint; ++k) m(i, j) += left(i, k) * right(k, j);
  return m;
}

TEST(RrefTest, Examples) {
  EXPECT_EQ(rref(ints({{1, 1}, {2, 2}})).rank, 1u);
  EXPECT_EQ(rref(RationalMatrix::identity(3)).rank, 3u);
  EXPECT_EQ(rref(RationalMatrix(2, 3)).rank, 0u);
  const auto r = rref(ints({{0, 2, 4}, {1, 1, 1}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.matrix, ints({{1, 0, -1}, {0, 1, 2}}));
}

TEST(RrefTest, IdempotentAndRankNullity) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const auto m = random_matrix(rows, cols, 1 + static_cast<int>(rng() % 4), rng);
    const auto r = rref(m);
    EXPECT_EQ(rref(r.matrix).matrix, r.matrix);
    const auto basis = nullspace_basis(m);
    EXPECT_EQ(r.rank + basis.size(), cols);
    for (const auto& v : basis)
      for (const auto& x : m * v) EXPECT_EQ(x, 0);
  }
}

TEST(NullspaceTest, Examples) {
  const auto b = nullspace_basis(ints({{1, 1}}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], (RationalVector{-1, 1}));
  EXPECT_TRUE(nullspace_basis(RationalMatrix::identity(3)).empty());
  const auto c = nullspace_basis(ints({{1, 1, 1}}));
  ASSERT_EQ(c.size(), 2u);
  for (const auto& v : c) EXPECT_EQ(v[0] + v[1] + v[2], 0);
}

LinearProgram one_var(std::initializer_list<std::pair<Relation, long>> cs) {
  LinearProgram lp(1);
  for (auto [rel, rhs] : cs) lp.add({1}, rel, rhs);
  return lp;
}

TEST(LpTest, Examples) {
  EXPECT_FALSE(lp_feasible(one_var({{Relation::GreaterEqual, 1}, {Relation::LessEqual, 0}})).feasible);
  const auto r = lp_feasible(one_var({{Relation::GreaterEqual, 1}, {Relation::LessEqual, 2}}));
  ASSERT_TRUE(r.feasible);
  EXPECT_GE(r.witness[0], 1);
  EXPECT_LE(r.witness[0], 2);
}

TEST(LpTest, ParityTwoHasNoAffineSignRepresentation) {
  // p = a + b*y1 + c*y2 and y1*y2*p(y) >= 1 on all four points of {-1,1}^2.
  LinearProgram lp(3);
  for (long y1 : {1, -1})
    for (long y2 : {1, -1}) {
      const long f = y1 * y2;
      lp.add({f, f * y1, f * y2}, Relation::GreaterEqual, 1);
    }
  EXPECT_FALSE(lp_feasible(lp).feasible);
}

TEST(LpTest, EqualitiesAndInconsistency) {
  LinearProgram lp(3);
  lp.add({1, 1, 0}, Relation::Equal, 2);
  lp.add({0, 1, 1}, Relation::Equal, 3);
  lp.add({1, 0, 0}, Relation::GreaterEqual, 5);
  const auto r = lp_feasible(lp);
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(lp.satisfied_by(r.witness));
  lp.add({1, 0, -1}, Relation::Equal, 0);  // x1 = x3 contradicts x1 - x3 = -1
  EXPECT_FALSE(lp_feasible(lp).feasible);
}

TEST(LpTest, OneVariableMatchesIntervalOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    LinearProgram lp(1);
    Rational lo = -1000, hi = 1000;
    bool eq = false;
    Rational eq_val;
    bool eq_conflict = false;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) {
      const long a = static_cast<long>(rng() % 7) - 3;
      const Rational b = make_rational(static_cast<long>(rng() % 21) - 10, 1 + rng() % 4);
      const auto rel = static_cast<Relation>(rng() % 3);
      lp.add({a}, rel, b);
      if (a == 0) {
        const bool ok = rel == Relation::Equal ? b == 0 : rel == Relation::GreaterEqual ? 0 >= b : 0 <= b;
        if (!ok) eq_conflict = true;
        continue;
      }
      const Rational v = b / a;
      if (rel == Relation::Equal) {
        if (eq && eq_val != v) eq_conflict = true;
        eq = true;
        eq_val = v;
      } else if ((rel == Relation::GreaterEqual) == (a > 0)) {
        lo = std::max(lo, v);
      } else {
        hi = std::min(hi, v);
      }
    }
    bool expected = !eq_conflict && lo <= hi;
    if (expected && eq) expected = lo <= eq_val && eq_val <= hi;
    lp.add({1}, Relation::GreaterEqual, -1000);
    lp.add({1}, Relation::LessEqual, 1000);
    EXPECT_EQ(lp_feasible(lp).feasible, expected) << "trial " << trial;
  }
}

TEST(LpTest, FeasibleByConstruction) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    RationalVector point;
    for (std::size_t i = 0; i < n; ++i) point.push_back(make_rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3));
    LinearProgram lp(n);
    for (int c = 0; c < 8; ++c) {
      RationalVector a;
      Rational v = 0;
      for (std::size_t i = 0; i < n; ++i) {
        a.emplace_back(static_cast<long>(rng() % 7) - 3);
        v += a.back() * point[i];
      }
      const auto rel = static_cast<Relation>(rng() % 3);
      const Rational slack = rel == Relation::Equal ? Rational(0) : make_rational(static_cast<long>(rng() % 3), 1);
      lp.add(a, rel, rel == Relation::LessEqual ? Rational(v + slack) : Rational(v - slack));
    }
    const auto r = lp_feasible(lp);
    ASSERT_TRUE(r.feasible);
    EXPECT_TRUE(lp.satisfied_by(r.witness));
  }
}

TEST(ModularTest, PrimesAreOddPrimesBelowBound) {
  const auto& ps = word_primes();
  ASSERT_GE(ps.size(), 100u);
  for (std::size_t i = 0; i < 20; ++i) {
    EXPECT_LT(ps[i], 1u << 28);
    for (std::uint32_t q = 2; q * q <= ps[i]; ++q) ASSERT_NE(ps[i] % q, 0u);
  }
  EXPECT_EQ(mod_mul(mod_inverse(12345, ps[0]), 12345, ps[0]), 1u);
}

TEST(ModularTest, RationalReconstruction) {
  const Integer m = Integer(1000003) * 1000033;
  const Rational target = make_rational(-37, 91);
  // u = -37 * 91^{-1} mod m
  Integer inv;
  mpz_invert(inv.get_mpz_t(), Integer(91).get_mpz_t(), m.get_mpz_t());
  Integer u = (Integer(-37) * inv) % m;
  if (u < 0) u += m;
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  const auto r = rational_reconstruct(u, m, bound);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, target);
}

TEST(ModularTest, KernelDimensionMatchesExactNullspace) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    RationalMatrix m(rows, cols);
    std::vector<SparseRow> sparse(rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        const long v = rng() % 3 == 0 ? static_cast<long>(rng() % 9) - 4 : 0;
        if (v) {
          m(i, j) = v;
          sparse[i].emplace_back(static_cast<std::uint32_t>(j), v);
        }
      }
    ModKernel k(cols, word_primes()[0]);
    std::size_t independent = 0;
    for (const auto& r : sparse) independent += k.add_row(r);
    EXPECT_EQ(k.dim(), nullspace_basis(m).size());
    EXPECT_EQ(independent, rref(m).rank);
    for (const auto& r : sparse) EXPECT_TRUE(k.annihilates(r));
    EXPECT_EQ(k.pivot_columns().size(), k.dim());
  }
}

TEST(ModularTest, DixonMatchesExactElimination) {
  std::mt19937_64 rng(7);
  int solved = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 12, k = 1 + rng() % 3;
    IntMatrix a(r, r), b(r, k);
    for (auto& v : a.data) v = static_cast<long>(rng() % 41) - 20;
    for (auto& v : b.data) v = static_cast<long>(rng() % 41) - 20;
    RationalMatrix aug(r, r + k);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) aug(i, j) = static_cast<long>(a(i, j));
      for (std::size_t j = 0; j < k; ++j) aug(i, r + j) = static_cast<long>(b(i, j));
    }
    const auto red = rref(aug);
    const auto sol = dixon_solve(a, b, word_primes()[trial % 5]);
    if (red.rank < r || red.pivots.back() >= r) {
      EXPECT_FALSE(sol.has_value());
      continue;
    }
    ASSERT_TRUE(sol.has_value());
    ++solved;
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < r; ++i)
        EXPECT_EQ(ratio(sol->numerators[j][i], sol->denominators[j]), red.matrix(i, r + j));
  }
  EXPECT_GT(solved, 30);
}

TEST(ModularTest, DixonLargeEntriesNeedManySteps) {
  // Hilbert-like integer matrix with a large determinant-to-entry ratio.
  const std::size_t r = 9;
  IntMatrix a(r, r), b(r, 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) a(i, j) = static_cast<std::int64_t>((i + 1) * (j + 1) * (i + j + 1) % 97) - 48;
    b(i, 0) = static_cast<std::int64_t>(i % 2 ? 1 : -1);
  }
  const auto sol = dixon_solve(a, b, word_primes()[1]);
  ASSERT_TRUE(sol.has_value());
  for (std::size_t i = 0; i < r; ++i) {
    Integer acc = 0;
    for (std::size_t c = 0; c < r; ++c) acc += sol->numerators[0][c] * static_cast<long>(a(i, c));
    EXPECT_EQ(acc, sol->denominators[0] * static_cast<long>(b(i, 0)));
  }
}

}  // namespace
}  // namespace bfc
