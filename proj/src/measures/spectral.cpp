#include "bfc/measures/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace bfc {

namespace {

struct Graph {
  std::vector<std::uint32_t> dirs;  // sensitive directions per point
  std::vector<std::uint32_t> comp;
  std::uint32_t num_comps = 0;
};

Graph sensitivity_graph(const BooleanFunction& f) {
  const int n = f.num_vars();
  Graph g;
  g.dirs.assign(f.num_points(), 0);
  for (Point x = 0; x < f.num_points(); ++x)
    for (int i = 0; i < n; ++i)
      if (f.value(x) != f.value(x ^ (Point{1} << i))) g.dirs[x] |= std::uint32_t{1} << i;
  const std::uint32_t none = ~std::uint32_t{0};
  g.comp.assign(f.num_points(), none);
  std::vector<Point> stack;
  for (Point s = 0; s < f.num_points(); ++s) {
    if (g.comp[s] != none) continue;
    g.comp[s] = g.num_comps;
    stack.push_back(s);
    while (!stack.empty()) {
      const Point x = stack.back();
      stack.pop_back();
      for (std::uint32_t t = g.dirs[x]; t; t &= t - 1) {
        const Point y = x ^ (Point{1} << std::countr_zero(t));
        if (g.comp[y] == none) {
          g.comp[y] = g.num_comps;
          stack.push_back(y);
        }
      }
    }
    ++g.num_comps;
  }
  return g;
}

template <class T>
T neighbor_sum(const Graph& g, const std::vector<T>& v, Point x) {
  T s = 0;
  for (std::uint32_t t = g.dirs[x]; t; t &= t - 1) s += v[x ^ (Point{1} << std::countr_zero(t))];
  return s;
}

struct Bounds {
  double lower = 0, upper = 0;
};

Bounds float_bounds(const Graph& g, const std::vector<double>& v, const std::vector<double>& av) {
  std::vector<double> num(g.num_comps, 0), den(g.num_comps, 0), upper(g.num_comps, 0);
  for (Point x = 0; x < v.size(); ++x) {
    const std::uint32_t c = g.comp[x];
    num[c] += v[x] * av[x];
    den[c] += v[x] * v[x];
    upper[c] = std::max(upper[c], av[x] / v[x]);
  }
  Bounds b;
  for (std::uint32_t c = 0; c < g.num_comps; ++c) {
    b.lower = std::max(b.lower, num[c] / den[c]);
    b.upper = std::max(b.upper, upper[c]);
  }
  return b;
}

/// Exact bounds from an integer rounding u of the iterate. Entries are below 2^48, so
/// all sums fit in 128 bits for n <= 18.
void certify(const Graph& g, const std::vector<double>& v, SpectralResult& out) {
  std::vector<std::int64_t> u(v.size());
  for (std::size_t x = 0; x < v.size(); ++x) u[x] = std::max<std::int64_t>(1, std::llround(std::ldexp(v[x], 48)));
  std::vector<__int128> num(g.num_comps, 0), den(g.num_comps, 0);
  std::vector<std::pair<__int128, __int128>> best(g.num_comps, {0, 1});
  for (Point x = 0; x < v.size(); ++x) {
    const std::uint32_t c = g.comp[x];
    const __int128 s = neighbor_sum<std::int64_t>(g, u, x);
    num[c] += s * u[x];
    den[c] += static_cast<__int128>(u[x]) * u[x];
    if (s * best[c].second > best[c].first * u[x]) best[c] = {s, u[x]};
  }
  out.lower = 0;
  out.upper = 0;
  for (std::uint32_t c = 0; c < g.num_comps; ++c) {
    const Rational lo = ratio(from_int128(num[c]), from_int128(den[c]));
    const Rational hi = ratio(from_int128(best[c].first), from_int128(best[c].second));
    if (lo > out.lower) out.lower = lo;
    if (hi > out.upper) out.upper = hi;
  }
}

}  // namespace

SpectralResult spectral_sensitivity(const BooleanFunction& f, double tol) {
  if (!f.is_total()) throw Error(ErrorCode::PartialNotSupported, "spectral sensitivity requires a total function");
  if (f.num_vars() > kSpectralCap)
    throw Error(ErrorCode::CapExceeded, "spectral sensitivity supports at most " + std::to_string(kSpectralCap) + " variables");
  if (!(tol > 0)) throw Error(ErrorCode::BadParams, "tolerance must be positive");
  SpectralResult out;
  const Graph g = sensitivity_graph(f);
  if (std::all_of(g.dirs.begin(), g.dirs.end(), [](std::uint32_t d) { return d == 0; })) return out;

  // Power iteration with A + I keeps every entry positive, so each component's
  // iterate tends to its Perron vector. Normalizing per component keeps small
  // components from underflowing.
  std::vector<double> v(f.num_points(), 1.0), av(f.num_points());
  std::vector<double> scale(g.num_comps);
  for (std::size_t it = 1; it <= kSpectralIterations; ++it) {
    out.iterations = it;
    for (Point x = 0; x < v.size(); ++x) av[x] = neighbor_sum(g, v, x);
    const Bounds b = float_bounds(g, v, av);
    if (b.upper - b.lower <= tol / 2) break;
    std::fill(scale.begin(), scale.end(), 0.0);
    for (Point x = 0; x < v.size(); ++x) {
      v[x] += av[x];
      scale[g.comp[x]] = std::max(scale[g.comp[x]], v[x]);
    }
    for (Point x = 0; x < v.size(); ++x) v[x] /= scale[g.comp[x]];
  }
  certify(g, v, out);
  out.lambda = (out.lower.get_d() + out.upper.get_d()) / 2;
  return out;
}

}  // namespace bfc
