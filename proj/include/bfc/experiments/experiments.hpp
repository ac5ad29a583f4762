#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "bfc/core/boolean_function.hpp"
#include "bfc/rational.hpp"
#include "bfc/verdict.hpp"

namespace bfc {

inline constexpr int kCensusCap = 10;

/// Number of dichotomies of N points in general position realizable by a
/// homogeneous hyperplane in d dimensions: 2 Σ_{i<d} C(N-1, i). Requires 0 <= d <= N.
Integer cover_count(int N, int d);

/// Smallest integer >= n/2 - sqrt(1.104 n), the census threshold.
int census_threshold(int n);

/// Truth table of sample `index`: word j of the table is a splitmix64 hash of
/// (seed, index, j), so samples do not depend on evaluation order.
BooleanFunction census_sample(int n, std::uint64_t seed, std::uint64_t index);

struct CensusResult {
  int n = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  int threshold = 0;
  std::vector<int> values;             // rdeg per sample, by index
  std::map<int, std::size_t> histogram;
  std::map<int, Rational> fraction_at_least;  // for every t in 0..n

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

/// Exact rdeg of `count` samples; runs in parallel, results are schedule independent.
CensusResult census(int n, std::size_t count, std::uint64_t seed, unsigned threads = 0);

/// Low and high slices outweighed by the lower third: for 3 | n,
/// Σ_{i<n/3 or i>2n/3} C(n,i) < Σ_{i<=n/3} C(n,i).
Verdict binomial_fact(int n);

/// For nonnegative x, y of equal length n and 1 <= k <= n: (sum of the k largest x)
/// times (sum of the n-k+1 largest y) >= Σ x_i y_i.
Verdict sequence_inequality(const std::vector<Rational>& x, const std::vector<Rational>& y, int k);

/// binomial_fact for every 3 | n <= limit, then one aggregated verdict for the
/// sequence inequality over `triples` random exact instances.
std::vector<Verdict> fact_checks(int limit, std::size_t triples = 1000, std::uint64_t seed = 1);

}  // namespace bfc
