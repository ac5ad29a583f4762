#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "bfc/core/families.hpp"
#include "bfc/linalg/lp.hpp"
#include "bfc/measures/combinatorial.hpp"
#include "bfc/measures/lp_degrees.hpp"
#include "bfc/measures/ndeg.hpp"
#include "bfc/measures/spectral.hpp"

namespace bfc {
namespace {

BooleanFunction random_total(int n, std::mt19937_64& rng) {
  return BooleanFunction::from_predicate(n, [&](Point) { return rng() % 2 == 0; });
}

int bs_oracle_at(const BooleanFunction& f, Point x, VarSet avail) {
  int best = 0;
  for (VarSet b = avail; b; b = (b - 1) & avail)
    if (f.value(x ^ b) != f.value(x)) best = std::max(best, 1 + bs_oracle_at(f, x, avail & ~b));
  return best;
}

int bs_oracle(const BooleanFunction& f) {
  int best = 0;
  for (Point x = 0; x < f.num_points(); ++x) best = std::max(best, bs_oracle_at(f, x, f.num_points() - 1));
  return best;
}

int cert_oracle(const BooleanFunction& f, bool b) {
  int worst = 0;
  for (Point x = 0; x < f.num_points(); ++x) {
    if (f.value(x) != b) continue;
    int best = f.num_vars();
    for (VarSet m = 0; m < f.num_points(); ++m) {
      bool ok = true;
      for (Point y = 0; y < f.num_points() && ok; ++y)
        if ((y & m) == (x & m)) ok = f.value(y) == b;
      if (ok) best = std::min(best, std::popcount(m));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

int dimension_oracle(const BooleanFunction& f, bool ones) {
  const int n = f.num_vars();
  int best = 0;
  for (VarSet fixed = 0; fixed < f.num_points(); ++fixed) {
    if (std::popcount(fixed) == n) continue;
    for (Point vals = fixed;; vals = (vals - 1) & fixed) {
      Restriction rho(n);
      for (int i = 0; i < n; ++i)
        if (fixed >> i & 1) rho.fix(i, vals >> i & 1);
      const auto g = restrict(f, rho);
      const std::size_t count = ones ? g.count_ones() : g.num_points() - g.count_ones();
      if (count == 1) best = std::max(best, n - std::popcount(fixed));
      if (vals == 0) break;
    }
  }
  return best;
}

double lambda_oracle(const BooleanFunction& f) {
  const Eigen::Index size = f.num_points();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(size, size);
  for (Point x = 0; x < f.num_points(); ++x)
    for (int i = 0; i < f.num_vars(); ++i) {
      const Point y = x ^ (Point{1} << i);
      if (f.value(x) != f.value(y)) a(x, y) = 1;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

/// Full LP over every monomial, no symmetry reduction.
int lp_degree_oracle(const BooleanFunction& f, const Rational* eps) {
  const int n = f.num_vars();
  for (int d = 0; d <= n; ++d) {
    const auto monos = subsets_up_to(n, d);
    LinearProgram lp(monos.size());
    for (Point x = 0; x < f.num_points(); ++x) {
      RationalVector row;
      for (VarSet s : monos) row.emplace_back(std::popcount(s & x) % 2 ? -1 : 1);
      const int t = f.sign(x);
      if (!eps) {
        lp.add(row, t > 0 ? Relation::GreaterEqual : Relation::LessEqual, t);
      } else if (!f.in_domain(x)) {
        lp.add(row, Relation::GreaterEqual, -1);
        lp.add(row, Relation::LessEqual, 1);
      } else {
        lp.add(row, Relation::GreaterEqual, t > 0 ? Rational(1 - *eps) : Rational(-1));
        lp.add(row, Relation::LessEqual, t > 0 ? Rational(1) : Rational(*eps - 1));
      }
    }
    if (lp_feasible(lp).feasible) return d;
  }
  return -1;
}

TEST(MeasuresTest, DegreeExamples) {
  EXPECT_EQ(deg(and_fn(4)), 4);
  EXPECT_EQ(deg(parity_fn(5)), 5);
  EXPECT_EQ(deg(dictator(3, 1)), 1);
  EXPECT_THROW(deg(majority_or_none(4)), Error);
}

TEST(MeasuresTest, SensitivityExamples) {
  EXPECT_EQ(sensitivity(parity_fn(4)), 4);
  EXPECT_EQ(sensitivity_at(or_fn(3), 0), 3);
  EXPECT_EQ(one_sided_sensitivity(or_fn(3), true), 1);
  EXPECT_THROW(sensitivity_at(majority_or_none(4), 0b0001), Error);
  // Neighbors outside D never count.
  EXPECT_EQ(sensitivity_at(majority_or_none(4), 0), 0);
}

TEST(MeasuresTest, BlockSensitivityAndCertificateExamples) {
  EXPECT_EQ(block_sensitivity(or_fn(4)), 4);
  EXPECT_EQ(block_sensitivity(parity_fn(3)), 3);
  EXPECT_EQ(block_sensitivity(and_of_ors(2, 2)), bs_oracle(and_of_ors(2, 2)));
  EXPECT_EQ(certificate_complexity(and_of_ors(3, 3)).value, 3);
  const auto c = certificate_complexity(and_fn(3));
  EXPECT_EQ(c.one, 3);
  EXPECT_EQ(c.zero, 1);
  EXPECT_EQ(certificate_complexity(parity_fn(3)).value, 3);
}

TEST(MeasuresTest, CombinatorialMeasuresMatchBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    const auto f = random_total(1 + static_cast<int>(rng() % 4), rng);
    const int s = sensitivity(f), bs = block_sensitivity(f);
    const auto c = certificate_complexity(f);
    EXPECT_EQ(bs, bs_oracle(f));
    EXPECT_EQ(c.zero, cert_oracle(f, false));
    EXPECT_EQ(c.one, cert_oracle(f, true));
    EXPECT_LE(s, bs);
    EXPECT_LE(bs, c.value);
    EXPECT_EQ(and_dimension(f), dimension_oracle(f, true));
    EXPECT_EQ(or_dimension(f), dimension_oracle(f, false));
  }
}

TEST(MeasuresTest, DimensionExamples) {
  EXPECT_EQ(and_dimension(and_fn(4)), 4);
  EXPECT_EQ(or_dimension(and_fn(4)), 1);
  EXPECT_EQ(and_dimension(threshold_fn(2, 5)), 2);
  EXPECT_EQ(or_dimension(threshold_fn(2, 5)), 4);
  EXPECT_EQ(and_dimension(parity_fn(3)), 1);
  EXPECT_EQ(or_dimension(parity_fn(3)), 1);
}

TEST(MeasuresTest, CapsAreEnforced) {
  EXPECT_THROW(and_dimension(parity_fn(13)), Error);
  EXPECT_THROW(certificate_complexity(majority_or_none(4)), Error);
}

TEST(SpectralTest, Examples) {
  for (int n = 1; n <= 10; ++n) {
    const auto p = spectral_sensitivity(parity_fn(n));
    EXPECT_NEAR(p.lambda, n, 1e-6);
    const auto a = spectral_sensitivity(and_fn(n));
    EXPECT_NEAR(a.lambda, std::sqrt(n), 1e-6);
    EXPECT_LE(a.lower, a.upper);
  }
  const auto eh = spectral_sensitivity(exact_half_complement(4));
  EXPECT_GE(eh.lambda, 2 - 1e-9);
  EXPECT_LE(eh.lambda, 4 + 1e-9);
  const auto c = spectral_sensitivity(BooleanFunction::total(3, BitVector(8)));
  EXPECT_EQ(c.lambda, 0);
}

TEST(SpectralTest, MatchesDenseEigensolver) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_total(1 + static_cast<int>(rng() % 7), rng);
    const auto r = spectral_sensitivity(f);
    const double ref = lambda_oracle(f);
    EXPECT_NEAR(r.lambda, ref, 1e-6);
    EXPECT_LE(r.lower.get_d(), ref + 1e-12);
    EXPECT_GE(r.upper.get_d(), ref - 1e-12);
    EXPECT_LE(Rational(r.upper - r.lower).get_d(), 1e-9);
  }
}

TEST(SpectralTest, MultiplicativeUnderComposition) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_total(1 + static_cast<int>(rng() % 3), rng);
    const auto g = random_total(1 + static_cast<int>(rng() % 3), rng);
    const std::vector<BooleanFunction> copies(f.num_vars(), g);
    const auto h = compose_disjoint(f, copies);
    EXPECT_NEAR(spectral_sensitivity(h).lambda, spectral_sensitivity(f).lambda * spectral_sensitivity(g).lambda, 1e-5);
  }
}

TEST(LpDegreeTest, Examples) {
  EXPECT_EQ(sign_degree(BooleanFunction::total(2, BitVector(4))).value, 0);
  EXPECT_EQ(sign_degree(threshold_fn(2, 3)).value, 1);
  EXPECT_EQ(sign_degree(parity_fn(3)).value, 3);
  EXPECT_EQ(approx_degree(and_fn(3), 0).value, 3);
  EXPECT_THROW(approx_degree(and_fn(2), make_rational(1, 2)), Error);
}

TEST(LpDegreeTest, SymmetryReducedMatchesFullLp) {
  std::mt19937_64 rng(13);
  const Rational third = make_rational(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto f = trial % 2 ? random_total(n, rng) : threshold_fn(1 + static_cast<int>(rng() % n), n);
    EXPECT_EQ(sign_degree(f).value, lp_degree_oracle(f, nullptr));
    EXPECT_EQ(approx_degree(f, third).value, lp_degree_oracle(f, &third));
    EXPECT_EQ(approx_degree(f, 0).value, deg(f));
  }
  const auto partial = majority_or_none(4);
  EXPECT_EQ(approx_degree(partial, third).value, lp_degree_oracle(partial, &third));
}

TEST(LpDegreeTest, SignDegreeAtMostTwiceRdeg) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_total(1 + static_cast<int>(rng() % 4), rng);
    EXPECT_LE(sign_degree(f).value, 2 * rdeg(f).value);
  }
}

}  // namespace
}  // namespace bfc
