#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bfc/core/bit_vector.hpp"
#include "bfc/error.hpp"

namespace bfc {

/// Index of a hypercube point: variable i (0-based) is bit i, so variable 1 in
/// one-based numbering is the least significant bit.
using Point = std::uint32_t;

/// Set of variables as a bit mask over 0-based variable indices.
using VarSet = std::uint32_t;

inline constexpr int kMaxVars = 20;

/// Effective variable cap: kMaxVars, lowered by the BFC_MAX_N environment variable.
int variable_cap();

/// Throws CapExceeded when n is outside [1, variable_cap()].
void check_arity(int n);

inline int weight(Point x) noexcept { return std::popcount(x); }

/// A total or partial Boolean function on {0,1}^n stored as two truth tables.
/// Value bits outside the domain are always zero.
class BooleanFunction {
 public:
  BooleanFunction() = default;

  /// Canonicalizes `values` against `domain`. Throws CapExceeded, EmptyDomain or
  /// DimensionMismatch.
  static BooleanFunction make(int n, BitVector domain, BitVector values);
  static BooleanFunction total(int n, BitVector values);

  template <class Pred>
  static BooleanFunction from_predicate(int n, Pred&& value) {
    check_arity(n);
    BitVector values(std::size_t{1} << n);
    for (Point x = 0; x < (Point{1} << n); ++x)
      if (value(x)) values.set(x);
    return total(n, std::move(values));
  }

  template <class DomainPred, class ValuePred>
  static BooleanFunction from_predicates(int n, DomainPred&& in_domain, ValuePred&& value) {
    check_arity(n);
    BitVector domain(std::size_t{1} << n), values(std::size_t{1} << n);
    for (Point x = 0; x < (Point{1} << n); ++x) {
      if (!in_domain(x)) continue;
      domain.set(x);
      if (value(x)) values.set(x);
    }
    return make(n, std::move(domain), std::move(values));
  }

  int num_vars() const noexcept { return n_; }
  Point num_points() const noexcept { return Point{1} << n_; }

  bool in_domain(Point x) const noexcept { return domain_.test(x); }
  bool value(Point x) const noexcept { return values_.test(x); }
  /// Value as ±1 with bit b mapped to (-1)^b.
  int sign(Point x) const noexcept { return value(x) ? -1 : 1; }

  bool is_total() const noexcept { return total_; }
  std::size_t domain_size() const noexcept { return domain_.count(); }
  std::size_t count_ones() const noexcept { return values_.count(); }
  /// True when f takes a single value on its domain.
  bool is_constant() const noexcept;

  const BitVector& domain() const noexcept { return domain_; }
  const BitVector& values() const noexcept { return values_; }

  std::vector<Point> zeros() const;
  std::vector<Point> ones() const;

  bool operator==(const BooleanFunction& o) const noexcept {
    return n_ == o.n_ && domain_ == o.domain_ && values_ == o.values_;
  }

 private:
  int n_ = 0;
  bool total_ = false;
  BitVector domain_;
  BitVector values_;
};

/// Per-variable assignment: 0, 1, or free.
class Restriction {
 public:
  enum class Slot : std::uint8_t { Zero, One, Free };

  explicit Restriction(int n) : slots_(static_cast<std::size_t>(n), Slot::Free) {}
  explicit Restriction(std::vector<Slot> slots) : slots_(std::move(slots)) {}

  int num_vars() const noexcept { return static_cast<int>(slots_.size()); }
  Slot operator[](int i) const { return slots_[static_cast<std::size_t>(i)]; }
  Restriction& fix(int var, bool value) {
    slots_.at(static_cast<std::size_t>(var)) = value ? Slot::One : Slot::Zero;
    return *this;
  }
  Restriction& release(int var) {
    slots_.at(static_cast<std::size_t>(var)) = Slot::Free;
    return *this;
  }

  /// Number of fixed variables.
  int size() const noexcept;
  std::vector<int> free_vars() const;
  VarSet fixed_mask() const noexcept;
  /// Values of the fixed variables as a point mask.
  Point fixed_values() const noexcept;

 private:
  std::vector<Slot> slots_;
};

// Structural operations. Variables of compositions are laid out block by block,
// first argument in the low bits.

BooleanFunction negate_output(const BooleanFunction& f);
BooleanFunction negate_inputs(const BooleanFunction& f, VarSet vars);
BooleanFunction restrict(const BooleanFunction& f, const Restriction& rho);
BooleanFunction compose_disjoint(const BooleanFunction& outer, std::span<const BooleanFunction> inner);
BooleanFunction and_compose(const BooleanFunction& f, const BooleanFunction& g);
BooleanFunction or_compose(const BooleanFunction& f, const BooleanFunction& g);

struct SliceProfile {
  std::vector<int> zero_slices;  // weights whose whole slice lies in D with value 0
  std::vector<int> one_slices;
};
SliceProfile slice_profile(const BooleanFunction& f);

bool is_symmetric(const BooleanFunction& f);
bool is_monotone(const BooleanFunction& f);

enum class Orientation : std::uint8_t { Positive, Negative, Irrelevant };
/// Per-variable direction when f is unate, std::nullopt otherwise.
std::optional<std::vector<Orientation>> unate_orientation(const BooleanFunction& f);
inline bool is_unate(const BooleanFunction& f) { return unate_orientation(f).has_value(); }

/// Variables on which f (total or partial) actually depends.
VarSet relevant_vars(const BooleanFunction& f);

/// Partition of the variables into maximal blocks inside which every permutation
/// preserves both domain and values. Blocks are listed by smallest member.
std::vector<VarSet> symmetry_blocks(const BooleanFunction& f);

}  // namespace bfc
