#include "bfc/core/boolean_function.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace bfc {

int variable_cap() {
  if (const char* env = std::getenv("BFC_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<int>(std::clamp<long>(v, 1, kMaxVars));
  }
  return kMaxVars;
}

void check_arity(int n) {
  if (n < 1 || n > variable_cap())
    throw Error(ErrorCode::CapExceeded,
                "variable count " + std::to_string(n) + " outside [1, " + std::to_string(variable_cap()) + "]");
}

BooleanFunction BooleanFunction::make(int n, BitVector domain, BitVector values) {
  check_arity(n);
  const std::size_t size = std::size_t{1} << n;
  if (domain.size() != size || values.size() != size)
    throw Error(ErrorCode::DimensionMismatch, "truth tables must have 2^n = " + std::to_string(size) + " bits");
  if (domain.none()) throw Error(ErrorCode::EmptyDomain, "domain is empty");
  values &= domain;
  BooleanFunction f;
  f.n_ = n;
  f.total_ = domain.all();
  f.domain_ = std::move(domain);
  f.values_ = std::move(values);
  return f;
}

BooleanFunction BooleanFunction::total(int n, BitVector values) {
  check_arity(n);
  return make(n, BitVector(std::size_t{1} << n, true), std::move(values));
}

bool BooleanFunction::is_constant() const noexcept {
  const std::size_t ones = count_ones();
  return ones == 0 || ones == domain_size();
}

std::vector<Point> BooleanFunction::zeros() const {
  std::vector<Point> out;
  for (Point x = 0; x < num_points(); ++x)
    if (in_domain(x) && !value(x)) out.push_back(x);
  return out;
}

std::vector<Point> BooleanFunction::ones() const {
  std::vector<Point> out;
  for (Point x = 0; x < num_points(); ++x)
    if (value(x)) out.push_back(x);
  return out;
}

int Restriction::size() const noexcept {
  return static_cast<int>(std::count_if(slots_.begin(), slots_.end(), [](Slot s) { return s != Slot::Free; }));
}

std::vector<int> Restriction::free_vars() const {
  std::vector<int> out;
  for (int i = 0; i < num_vars(); ++i)
    if (slots_[static_cast<std::size_t>(i)] == Slot::Free) out.push_back(i);
  return out;
}

VarSet Restriction::fixed_mask() const noexcept {
  VarSet m = 0;
  for (int i = 0; i < num_vars(); ++i)
    if (slots_[static_cast<std::size_t>(i)] != Slot::Free) m |= VarSet{1} << i;
  return m;
}

Point Restriction::fixed_values() const noexcept {
  Point m = 0;
  for (int i = 0; i < num_vars(); ++i)
    if (slots_[static_cast<std::size_t>(i)] == Slot::One) m |= Point{1} << i;
  return m;
}

BooleanFunction negate_output(const BooleanFunction& f) {
  BitVector values = ~f.values();
  return BooleanFunction::make(f.num_vars(), f.domain(), std::move(values));
}

BooleanFunction negate_inputs(const BooleanFunction& f, VarSet vars) {
  const int n = f.num_vars();
  if (n < 32 && (vars >> n) != 0) throw Error(ErrorCode::BadParams, "negated variable set is not a subset of [n]");
  BitVector domain(f.num_points()), values(f.num_points());
  for (Point x = 0; x < f.num_points(); ++x) {
    const Point y = x ^ vars;
    if (f.in_domain(y)) domain.set(x);
    if (f.value(y)) values.set(x);
  }
  return BooleanFunction::make(n, std::move(domain), std::move(values));
}

namespace {

/// Places the low bits of `y` at the positions listed in `positions`.
Point scatter(Point y, const std::vector<int>& positions) {
  Point x = 0;
  for (std::size_t j = 0; j < positions.size(); ++j)
    if ((y >> j) & 1u) x |= Point{1} << positions[j];
  return x;
}

}  // namespace

BooleanFunction restrict(const BooleanFunction& f, const Restriction& rho) {
  if (rho.num_vars() != f.num_vars()) throw Error(ErrorCode::DimensionMismatch, "restriction arity differs from f");
  const std::vector<int> free = rho.free_vars();
  if (free.empty()) throw Error(ErrorCode::BadParams, "restriction must leave at least one variable free");
  const int m = static_cast<int>(free.size());
  const Point base = rho.fixed_values();
  BitVector domain(std::size_t{1} << m), values(std::size_t{1} << m);
  for (Point y = 0; y < (Point{1} << m); ++y) {
    const Point x = base | scatter(y, free);
    if (f.in_domain(x)) domain.set(y);
    if (f.value(x)) values.set(y);
  }
  if (domain.none()) throw Error(ErrorCode::EmptyDomain, "no domain point is consistent with the restriction");
  return BooleanFunction::make(m, std::move(domain), std::move(values));
}

BooleanFunction compose_disjoint(const BooleanFunction& outer, std::span<const BooleanFunction> inner) {
  if (static_cast<int>(inner.size()) != outer.num_vars())
    throw Error(ErrorCode::DimensionMismatch, "need one inner function per outer variable");
  if (!outer.is_total()) throw Error(ErrorCode::PartialNotSupported, "composition requires total functions");
  int total_vars = 0;
  std::vector<int> offset;
  for (const auto& g : inner) {
    if (!g.is_total()) throw Error(ErrorCode::PartialNotSupported, "composition requires total functions");
    offset.push_back(total_vars);
    total_vars += g.num_vars();
  }
  if (total_vars > variable_cap())
    throw Error(ErrorCode::CapExceeded, "composition has " + std::to_string(total_vars) + " variables");
  return BooleanFunction::from_predicate(total_vars, [&](Point x) {
    Point y = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      const Point block = (x >> offset[i]) & ((Point{1} << inner[i].num_vars()) - 1);
      if (inner[i].value(block)) y |= Point{1} << i;
    }
    return outer.value(y);
  });
}

namespace {

template <class Combine>
BooleanFunction binary_compose(const BooleanFunction& f, const BooleanFunction& g, Combine combine) {
  if (!f.is_total() || !g.is_total())
    throw Error(ErrorCode::PartialNotSupported, "AND/OR composition requires total functions");
  const int m = f.num_vars();
  const int total_vars = m + g.num_vars();
  if (total_vars > variable_cap())
    throw Error(ErrorCode::CapExceeded, "composition has " + std::to_string(total_vars) + " variables");
  const Point low = (Point{1} << m) - 1;
  return BooleanFunction::from_predicate(total_vars,
                                         [&](Point x) { return combine(f.value(x & low), g.value(x >> m)); });
}

}  // namespace

BooleanFunction and_compose(const BooleanFunction& f, const BooleanFunction& g) {
  return binary_compose(f, g, [](bool a, bool b) { return a && b; });
}

BooleanFunction or_compose(const BooleanFunction& f, const BooleanFunction& g) {
  return binary_compose(f, g, [](bool a, bool b) { return a || b; });
}

namespace {

struct SliceCounts {
  std::vector<std::size_t> size, in_domain, ones;
};

SliceCounts count_slices(const BooleanFunction& f) {
  const int n = f.num_vars();
  SliceCounts c{std::vector<std::size_t>(n + 1), std::vector<std::size_t>(n + 1), std::vector<std::size_t>(n + 1)};
  for (Point x = 0; x < f.num_points(); ++x) {
    const int w = weight(x);
    ++c.size[w];
    if (f.in_domain(x)) ++c.in_domain[w];
    if (f.value(x)) ++c.ones[w];
  }
  return c;
}

}  // namespace

SliceProfile slice_profile(const BooleanFunction& f) {
  const SliceCounts c = count_slices(f);
  SliceProfile out;
  for (int k = 0; k <= f.num_vars(); ++k) {
    if (c.in_domain[k] != c.size[k]) continue;
    if (c.ones[k] == 0) out.zero_slices.push_back(k);
    if (c.ones[k] == c.size[k]) out.one_slices.push_back(k);
  }
  return out;
}

bool is_symmetric(const BooleanFunction& f) {
  const SliceCounts c = count_slices(f);
  for (int k = 0; k <= f.num_vars(); ++k) {
    if (c.in_domain[k] != 0 && c.in_domain[k] != c.size[k]) return false;
    if (c.ones[k] != 0 && c.ones[k] != c.in_domain[k]) return false;
  }
  return true;
}

bool is_monotone(const BooleanFunction& f) {
  if (!f.is_total()) throw Error(ErrorCode::PartialNotSupported, "monotonicity is defined for total functions only");
  for (int i = 0; i < f.num_vars(); ++i) {
    const Point bit = Point{1} << i;
    for (Point x = 0; x < f.num_points(); ++x)
      if (!(x & bit) && f.value(x) && !f.value(x | bit)) return false;
  }
  return true;
}

std::optional<std::vector<Orientation>> unate_orientation(const BooleanFunction& f) {
  if (!f.is_total()) throw Error(ErrorCode::PartialNotSupported, "unateness is defined for total functions only");
  std::vector<Orientation> out;
  for (int i = 0; i < f.num_vars(); ++i) {
    const Point bit = Point{1} << i;
    bool up = false, down = false;
    for (Point x = 0; x < f.num_points(); ++x) {
      if (x & bit) continue;
      const bool a = f.value(x), b = f.value(x | bit);
      up |= !a && b;
      down |= a && !b;
    }
    if (up && down) return std::nullopt;
    out.push_back(up ? Orientation::Positive : down ? Orientation::Negative : Orientation::Irrelevant);
  }
  return out;
}

VarSet relevant_vars(const BooleanFunction& f) {
  VarSet out = 0;
  for (int i = 0; i < f.num_vars(); ++i) {
    const Point bit = Point{1} << i;
    for (Point x = 0; x < f.num_points(); ++x) {
      if ((x & bit) || !f.in_domain(x) || !f.in_domain(x | bit)) continue;
      if (f.value(x) != f.value(x | bit)) {
        out |= bit;
        break;
      }
    }
  }
  return out;
}

std::vector<VarSet> symmetry_blocks(const BooleanFunction& f) {
  const int n = f.num_vars();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (find(i) == find(j)) continue;
      const Point bi = Point{1} << i, bj = Point{1} << j;
      bool invariant = true;
      for (Point x = 0; x < f.num_points() && invariant; ++x) {
        if (((x & bi) != 0) == ((x & bj) != 0)) continue;
        const Point y = x ^ bi ^ bj;
        invariant = f.in_domain(x) == f.in_domain(y) && f.value(x) == f.value(y);
      }
      if (invariant) parent[find(j)] = find(i);
    }
  }
  std::vector<VarSet> blocks;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(blocks.size());
      blocks.push_back(0);
    }
    blocks[slot[r]] |= VarSet{1} << i;
  }
  return blocks;
}

}  // namespace bfc
