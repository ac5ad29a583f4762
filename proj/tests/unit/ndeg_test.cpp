#include <gtest/gtest.h>

#include <random>

#include "bfc/core/families.hpp"
#include "bfc/linalg/matrix.hpp"
#include "bfc/measures/ndeg.hpp"

namespace bfc {
namespace {

Rational monomial_value(VarSet s, Point x) { return (s & x) == s ? 1 : 0; }

/// Independent oracle: monomial-basis evaluation matrix on the zeros, exact
/// nullspace, then check whether every one-point is hit by some kernel vector.
int ndeg_oracle(const BooleanFunction& f) {
  const auto zeros = f.zeros(), ones = f.ones();
  if (ones.empty() || zeros.empty()) return 0;
  for (int d = 0; d <= f.num_vars(); ++d) {
    const auto monos = subsets_up_to(f.num_vars(), d);
    std::vector<RationalVector> rows;
    for (Point z : zeros) {
      RationalVector r;
      for (VarSet s : monos) r.push_back(monomial_value(s, z));
      rows.push_back(std::move(r));
    }
    const auto kernel = nullspace_basis(RationalMatrix::from_rows(rows));
    bool all = true;
    for (Point y : ones) {
      bool hit = false;
      for (const auto& k : kernel) {
        Rational v = 0;
        for (std::size_t j = 0; j < monos.size(); ++j) v += k[j] * monomial_value(monos[j], y);
        hit = hit || v != 0;
      }
      all = all && hit;
    }
    if (all) return d;
  }
  return -1;
}

BooleanFunction random_function(int n, std::mt19937_64& rng, bool partial) {
  return BooleanFunction::from_predicates(
      n, [&](Point x) { return !partial || x == 0 || rng() % 4 != 0; }, [&](Point) { return rng() % 2 == 0; });
}

TEST(NdegTest, Examples) {
  EXPECT_EQ(ndeg(or_fn(3)).value, 1);
  EXPECT_EQ(ndeg(negate_output(or_fn(3))).value, 3);
  EXPECT_EQ(ndeg(parity_fn(2)).value, 1);
  const auto eh = ndeg(exact_half_complement(4));
  EXPECT_EQ(eh.value, 1);
  EXPECT_EQ(ndeg(BooleanFunction::total(3, BitVector(8))).witness.is_zero(), true);
  EXPECT_EQ(ndeg(and_fn(3)).value, 3);
}

TEST(NdegTest, MatchesOracleOnRandomFunctions) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto f = random_function(n, rng, trial % 3 == 0);
    const auto r = ndeg(f);
    ASSERT_EQ(r.value, ndeg_oracle(f)) << trial;
    EXPECT_TRUE(is_nondeterministic_rep(f, r.witness));
    if (!r.witness.is_zero()) {
      EXPECT_EQ(r.witness.degree(), r.value);
    }
  }
}

TEST(NdegTest, RdegExamplesAndWitness) {
  EXPECT_EQ(rdeg(and_fn(4)).value, 4);
  EXPECT_EQ(rdeg(parity_fn(4)).value, 2);
  EXPECT_LE(rdeg(middle_third(6)).value, 3);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = random_function(1 + static_cast<int>(rng() % 5), rng, trial % 2 == 0);
    const auto r = rdeg(f);
    EXPECT_TRUE(is_rational_rep(f, r.p, r.q));
    EXPECT_EQ(std::max(r.p.degree(), r.q.degree()), r.value);
    EXPECT_EQ(r.value, rdeg(negate_output(f)).value);
  }
}

TEST(AvoidanceTest, Examples) {
  using V = std::vector<std::vector<Rational>>;
  EXPECT_EQ(avoidance_combine(V{{1, 5, -2}}), std::vector<Rational>{1});
  EXPECT_EQ(avoidance_combine(V{{1, 0}, {0, 1}}), (std::vector<Rational>{1, 2}));
  const auto a = avoidance_combine(V{{1, -1}, {1, 1}});
  EXPECT_NE(a[0] - a[1], 0);
  EXPECT_NE(a[0] + a[1], 0);
  EXPECT_THROW(avoidance_combine(V{{1, 0}, {2, 0}}), Error);
}

TEST(AvoidanceTest, RandomInstancesArePositiveAndNonvanishing) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 8;
    std::vector<std::vector<Rational>> v(rows, std::vector<Rational>(cols));
    for (auto& row : v)
      for (auto& x : row) x = rng() % 3 == 0 ? Rational(0) : make_rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4);
    for (std::size_t y = 0; y < cols; ++y) v[rng() % rows][y] = 1;
    const auto a = avoidance_combine(v);
    for (const auto& x : a) EXPECT_GT(x, 0);
    for (std::size_t y = 0; y < cols; ++y) {
      Rational s = 0;
      for (std::size_t i = 0; i < rows; ++i) s += a[i] * v[i][y];
      EXPECT_NE(s, 0);
    }
  }
}

}  // namespace
}  // namespace bfc
