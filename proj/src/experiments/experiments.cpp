#include "bfc/experiments/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "bfc/measures/ndeg.hpp"
#include "bfc/measures/report.hpp"

namespace bfc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string rational_text(const Rational& r) { return r.get_str(); }

}  // namespace

Integer cover_count(int N, int d) {
  if (N < 0 || d < 0 || d > N) throw Error(ErrorCode::BadParams, "cover_count needs 0 <= d <= N");
  Integer sum = 0;
  for (int i = 0; i < d; ++i) sum += binomial(static_cast<unsigned long>(N - 1), static_cast<unsigned long>(i));
  return 2 * sum;
}

int census_threshold(int n) {
  return std::max(0, static_cast<int>(std::ceil(n / 2.0 - std::sqrt(1.104 * n))));
}

BooleanFunction census_sample(int n, std::uint64_t seed, std::uint64_t index) {
  check_arity(n);
  const std::uint64_t key = splitmix64(splitmix64(seed) ^ index);
  BitVector values(std::size_t{1} << n);
  std::uint64_t word = 0;
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (x % 64 == 0) word = splitmix64(key + x / 64);
    if ((word >> (x % 64)) & 1) values.set(x);
  }
  return BooleanFunction::total(n, std::move(values));
}

CensusResult census(int n, std::size_t count, std::uint64_t seed, unsigned threads) {
  if (n < 1 || n > kCensusCap) throw Error(ErrorCode::CapExceeded, "census supports 1 <= n <= " + std::to_string(kCensusCap));
  if (count == 0) throw Error(ErrorCode::BadParams, "census needs at least one sample");
  check_arity(n);
  CensusResult r;
  r.n = n;
  r.count = count;
  r.seed = seed;
  r.threshold = census_threshold(n);
  r.values.assign(count, 0);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        r.values[i] = rdeg(census_sample(n, seed, i)).value;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<std::size_t>(threads, count); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (int v : r.values) ++r.histogram[v];
  for (int t = 0; t <= n; ++t) {
    const auto hits = std::count_if(r.values.begin(), r.values.end(), [t](int v) { return v >= t; });
    r.fraction_at_least[t] = ratio(Integer(static_cast<unsigned long>(hits)), Integer(static_cast<unsigned long>(count)));
  }
  return r;
}

nlohmann::json CensusResult::to_json() const {
  nlohmann::json hist = nlohmann::json::object(), frac = nlohmann::json::object();
  for (const auto& [v, c] : histogram) hist[std::to_string(v)] = c;
  for (const auto& [t, f] : fraction_at_least) frac[std::to_string(t)] = rational_json(f);
  // Upper bound on the fraction of all n-variable functions with rdeg below the
  // threshold, from counting sign patterns of pairs of degree-(t-1) polynomials.
  double bound = 0;
  if (threshold > 0) {
    Integer cols = 0;
    for (int i = 0; i < threshold; ++i) cols += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i));
    const int points = 1 << n;
    const Integer c = cover_count(points, static_cast<int>(std::min<long>(cols.get_si(), points)));
    Integer all;
    mpz_ui_pow_ui(all.get_mpz_t(), 2, static_cast<unsigned long>(points));
    bound = std::min(1.0, ratio(c * c, all).get_d());
  }
  return {{"n", n},
          {"count", count},
          {"seed", seed},
          {"generator", "splitmix64(seed, index, word)"},
          {"threshold", threshold},
          {"histogram", hist},
          {"fraction_at_least", frac},
          {"counting_bound_below_threshold", bound}};
}

std::string CensusResult::to_csv() const {
  std::ostringstream out;
  out << "index,rdeg\n";
  for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << values[i] << '\n';
  return out.str();
}

Verdict binomial_fact(int n) {
  if (n <= 0 || n % 3 != 0) throw Error(ErrorCode::BadParams, "n must be a positive multiple of 3");
  Integer outer = 0, lower = 0;
  for (int i = 0; i <= n; ++i) {
    const Integer c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i));
    if (i < n / 3 || i > 2 * n / 3) outer += c;
    if (i <= n / 3) lower += c;
  }
  return {"fact:3.7", "n=" + std::to_string(n), outer < lower, outer.get_str(), lower.get_str(), {}};
}

Verdict sequence_inequality(const std::vector<Rational>& x, const std::vector<Rational>& y, int k) {
  const int n = static_cast<int>(x.size());
  if (y.size() != x.size() || k < 1 || k > n) throw Error(ErrorCode::BadParams, "need |x| = |y| and 1 <= k <= n");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || y[i] < 0) throw Error(ErrorCode::BadParams, "sequences must be nonnegative");
  std::vector<Rational> xs = x, ys = y;
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());
  Rational top_x = 0, top_y = 0, dot = 0;
  for (int i = 0; i < k; ++i) top_x += xs[i];
  for (int i = 0; i < n - k + 1; ++i) top_y += ys[i];
  for (int i = 0; i < n; ++i) dot += x[i] * y[i];
  const Rational lhs = top_x * top_y;
  return {"fact:B.2", "n=" + std::to_string(n) + ",k=" + std::to_string(k), lhs >= dot, rational_text(lhs),
          rational_text(dot), {}};
}

std::vector<Verdict> fact_checks(int limit, std::size_t triples, std::uint64_t seed) {
  if (limit < 0 || limit > 200) throw Error(ErrorCode::BadParams, "limit must lie in [0, 200]");
  std::vector<Verdict> out;
  for (int n = 3; n <= limit; n += 3) out.push_back(binomial_fact(n));
  std::mt19937_64 rng(seed);
  Verdict agg{"fact:B.2", std::to_string(triples) + " random exact triples, seed " + std::to_string(seed), true, "", "", {}};
  std::size_t failures = 0;
  for (std::size_t t = 0; t < triples; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Rational> x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = make_rational(static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 7));
      y[i] = make_rational(static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 7));
    }
    const Verdict v = sequence_inequality(x, y, 1 + static_cast<int>(rng() % n));
    if (!v.holds) {
      ++failures;
      if (agg.holds) agg.witnesses.push_back(v.to_json());
      agg.holds = false;
    }
  }
  agg.lhs = std::to_string(failures) + " violations";
  agg.rhs = "0 violations";
  out.push_back(agg);
  return out;
}

}  // namespace bfc
