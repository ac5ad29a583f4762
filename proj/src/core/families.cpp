#include "bfc/core/families.hpp"

#include <algorithm>
#include <cctype>

namespace bfc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

template <class Pred>
BooleanFunction by_weight(int n, Pred pred) {
  return BooleanFunction::from_predicate(n, [&](Point x) { return pred(weight(x)); });
}

}  // namespace

BooleanFunction parity_fn(int n) {
  return by_weight(n, [](int w) { return w % 2 == 1; });
}

BooleanFunction and_fn(int n) {
  return by_weight(n, [n](int w) { return w == n; });
}

BooleanFunction or_fn(int n) {
  return by_weight(n, [](int w) { return w > 0; });
}

BooleanFunction dictator(int n, int var) {
  require(var >= 0 && var < n, "dictator variable out of range");
  return BooleanFunction::from_predicate(n, [var](Point x) { return (x >> var) & 1u; });
}

BooleanFunction threshold_fn(int k, int n) {
  require(k >= 1 && k <= n, "thr requires 1 <= k <= n");
  return by_weight(n, [k](int w) { return w >= k; });
}

BooleanFunction exact_half(int n) {
  require(n >= 2 && n % 2 == 0, "eh requires even n");
  return by_weight(n, [n](int w) { return 2 * w == n; });
}

BooleanFunction exact_half_complement(int n) {
  require(n >= 2 && n % 2 == 0, "ehbar requires even n");
  return by_weight(n, [n](int w) { return 2 * w != n; });
}

BooleanFunction middle_third(int n) {
  require(n >= 3 && n % 3 == 0, "mt requires n divisible by 3");
  return by_weight(n, [n](int w) { return 3 * w >= n && 3 * w <= 2 * n; });
}

BooleanFunction majority_or_none(int n) {
  require(n >= 2, "majn requires n >= 2");
  const int half = (n + 1) / 2;
  check_arity(n);
  return BooleanFunction::from_predicates(
      n, [half](Point x) { return x == 0 || weight(x) >= half; }, [](Point x) { return x != 0; });
}

BooleanFunction balanced_halves(int n) {
  require(n >= 2 && (n - 2) % 4 == 0, "bi requires n = 4m+2");
  const int m = (n - 2) / 4;
  const int left = 2 * m + 1;
  const Point left_mask = (Point{1} << left) - 1;
  auto halves = [=](Point x) { return std::pair{weight(x & left_mask), weight(x >> left)}; };
  return BooleanFunction::from_predicates(
      n,
      [=](Point x) {
        const auto [l, r] = halves(x);
        return (l == m && r == m) || (l == m && r == m + 1) || (l == m + 1 && r == m);
      },
      [=](Point x) {
        const auto [l, r] = halves(x);
        return l != r;
      });
}

BooleanFunction and_of_ors(int a, int b) {
  require(a >= 1 && b >= 1, "andor requires positive fan-ins");
  if (a * b > variable_cap()) throw Error(ErrorCode::CapExceeded, "andor has a*b variables");
  const Point block = (Point{1} << b) - 1;
  return BooleanFunction::from_predicate(a * b, [=](Point x) {
    for (int i = 0; i < a; ++i)
      if (((x >> (i * b)) & block) == 0) return false;
    return true;
  });
}

BooleanFunction family(const std::string& name, std::span<const int> params) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
  auto arity = [&](std::size_t k) {
    require(params.size() == k, key + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (key == "thr") {
    arity(2);
    return threshold_fn(params[0], params[1]);
  }
  if (key == "andor") {
    arity(2);
    return and_of_ors(params[0], params[1]);
  }
  arity(1);
  const int n = params[0];
  if (key == "parity") return parity_fn(n);
  if (key == "and") return and_fn(n);
  if (key == "or") return or_fn(n);
  if (key == "eh") return exact_half(n);
  if (key == "ehbar") return exact_half_complement(n);
  if (key == "mt") return middle_third(n);
  if (key == "majn") return majority_or_none(n);
  if (key == "bi") return balanced_halves(n);
  throw Error(ErrorCode::BadParams, "unknown family '" + name + "'");
}

}  // namespace bfc
