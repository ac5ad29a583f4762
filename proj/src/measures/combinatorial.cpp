#include "bfc/measures/combinatorial.hpp"

#include <algorithm>
#include <string>

#include "bfc/poly/polynomial.hpp"

namespace bfc {

namespace {

void require_total(const BooleanFunction& f, const char* what) {
  if (!f.is_total()) throw Error(ErrorCode::PartialNotSupported, std::string(what) + " requires a total function");
}

void require_cap(const BooleanFunction& f, int cap, const char* what) {
  if (f.num_vars() > cap)
    throw Error(ErrorCode::CapExceeded, std::string(what) + " supports at most " + std::to_string(cap) + " variables");
}

std::vector<std::uint32_t> powers_of_three(int n) {
  std::vector<std::uint32_t> p(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) p[i] = 3 * p[i - 1];
  return p;
}

std::uint32_t ternary_index(Point x, const std::vector<std::uint32_t>& pow3) {
  std::uint32_t c = 0;
  for (Point t = x; t; t &= t - 1) c += pow3[std::countr_zero(t)];
  return c;
}

/// Subcubes in base 3 (digit 0/1 fixed, 2 free). For each one, the number of 1-points
/// and its number of free variables.
struct Subcubes {
  std::vector<std::uint32_t> pow3;
  std::vector<std::uint32_t> ones;
  std::vector<std::uint8_t> free;
};

Subcubes subcubes(const BooleanFunction& f) {
  const int n = f.num_vars();
  Subcubes s{powers_of_three(n), {}, {}};
  const std::uint32_t total = s.pow3[n];
  s.ones.assign(total, 0);
  s.free.assign(total, 0);
  for (std::uint32_t c = 0; c < total; ++c) {
    std::uint32_t rest = c;
    int low_free = -1;
    Point x = 0;
    for (int i = 0; i < n; ++i, rest /= 3) {
      const std::uint32_t digit = rest % 3;
      if (digit == 2) {
        if (low_free < 0) low_free = i;
        ++s.free[c];
      } else if (digit == 1) {
        x |= Point{1} << i;
      }
    }
    if (low_free < 0) {
      s.ones[c] = f.value(x) ? 1 : 0;
    } else {
      const std::uint32_t base = c - 2 * s.pow3[low_free];
      s.ones[c] = s.ones[base] + s.ones[base + s.pow3[low_free]];
    }
  }
  return s;
}

class Packing {
 public:
  explicit Packing(std::vector<VarSet> blocks) : blocks_(std::move(blocks)) {}

  int solve(VarSet universe) {
    best_ = 0;
    search(universe, 0);
    return best_;
  }

 private:
  void search(VarSet avail, int count) {
    best_ = std::max(best_, count);
    if (avail == 0 || count + std::popcount(avail) <= best_) return;
    const VarSet low = avail & (~avail + 1);
    for (VarSet b : blocks_)
      if ((b & low) && (b & ~avail) == 0) search(avail & ~b, count + 1);
    search(avail & ~low, count);
  }

  std::vector<VarSet> blocks_;
  int best_ = 0;
};

}  // namespace

int deg(const BooleanFunction& f) {
  require_total(f, "degree");
  return interpolate(f, Basis::ZeroOne).degree();
}

int sensitivity_at(const BooleanFunction& f, Point x) {
  if (x >= f.num_points() || !f.in_domain(x))
    throw Error(ErrorCode::PointOutsideDomain, "point " + std::to_string(x) + " is not in the domain");
  int s = 0;
  for (int i = 0; i < f.num_vars(); ++i) {
    const Point y = x ^ (Point{1} << i);
    if (f.in_domain(y) && f.value(y) != f.value(x)) ++s;
  }
  return s;
}

int one_sided_sensitivity(const BooleanFunction& f, bool b) {
  int best = 0;
  for (Point x = 0; x < f.num_points(); ++x)
    if (f.in_domain(x) && f.value(x) == b) best = std::max(best, sensitivity_at(f, x));
  return best;
}

int sensitivity(const BooleanFunction& f) {
  return std::max(one_sided_sensitivity(f, false), one_sided_sensitivity(f, true));
}

int block_sensitivity_at(const BooleanFunction& f, Point x) {
  require_total(f, "block sensitivity");
  require_cap(f, kSearchCap, "block sensitivity");
  const std::size_t size = f.num_points();
  // minimal[B]: B is sensitive and no proper subset is; below[B]: some nonempty
  // subset of B (possibly B itself) is sensitive.
  std::vector<char> below(size, 0);
  std::vector<VarSet> minimal;
  for (VarSet b = 1; b < size; ++b) {
    bool sub = false;
    for (VarSet t = b; t && !sub; t &= t - 1) sub = below[b & ~(t & (~t + 1))];
    const bool sensitive = f.value(x ^ b) != f.value(x);
    if (sensitive && !sub) minimal.push_back(b);
    below[b] = sub || sensitive;
  }
  return Packing(std::move(minimal)).solve(static_cast<VarSet>(size - 1));
}

int block_sensitivity(const BooleanFunction& f) {
  require_total(f, "block sensitivity");
  require_cap(f, kSearchCap, "block sensitivity");
  int best = 0;
  for (Point x = 0; x < f.num_points() && best < f.num_vars(); ++x) best = std::max(best, block_sensitivity_at(f, x));
  return best;
}

CertificateComplexity certificate_complexity(const BooleanFunction& f) {
  require_total(f, "certificate complexity");
  require_cap(f, kSearchCap, "certificate complexity");
  const int n = f.num_vars();
  const Subcubes s = subcubes(f);
  const std::uint32_t total = s.pow3[n];
  // best[c]: fewest fixed variables over monochromatic subcubes containing c.
  std::vector<std::uint8_t> best(total);
  for (std::uint32_t c = total; c-- > 0;) {
    const std::uint32_t size = std::uint32_t{1} << s.free[c];
    const bool mono = s.ones[c] == 0 || s.ones[c] == size;
    std::uint8_t v = mono ? static_cast<std::uint8_t>(n - s.free[c]) : static_cast<std::uint8_t>(n + 1);
    std::uint32_t rest = c;
    for (int i = 0; i < n; ++i, rest /= 3) {
      const std::uint32_t digit = rest % 3;
      if (digit != 2) v = std::min(v, best[c + (2 - digit) * s.pow3[i]]);
    }
    best[c] = v;
  }
  CertificateComplexity out;
  for (Point x = 0; x < f.num_points(); ++x) {
    const int v = best[ternary_index(x, s.pow3)];
    int& slot = f.value(x) ? out.one : out.zero;
    slot = std::max(slot, v);
  }
  out.value = std::max(out.zero, out.one);
  return out;
}

namespace {

int single_point_dimension(const BooleanFunction& f, bool ones, const char* what) {
  require_total(f, what);
  require_cap(f, kDimensionCap, what);
  const Subcubes s = subcubes(f);
  int best = 0;
  for (std::uint32_t c = 0; c < s.ones.size(); ++c) {
    const std::uint32_t count = ones ? s.ones[c] : (std::uint32_t{1} << s.free[c]) - s.ones[c];
    if (count == 1) best = std::max<int>(best, s.free[c]);
  }
  return best;
}

}  // namespace

int and_dimension(const BooleanFunction& f) { return single_point_dimension(f, true, "AND-dimension"); }
int or_dimension(const BooleanFunction& f) { return single_point_dimension(f, false, "OR-dimension"); }

}  // namespace bfc
