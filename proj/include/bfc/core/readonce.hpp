#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bfc/core/boolean_function.hpp"

namespace bfc {

/// Formula tree over NOT, threshold, symmetric, AND, OR and XOR gates in which
/// every variable labels exactly one leaf.
class ReadOnceFormula {
 public:
  enum class Kind : std::uint8_t { Leaf, Not, Thr, Sym, And, Or, Parity };

  static ReadOnceFormula leaf(int var);
  static ReadOnceFormula negation(ReadOnceFormula child);
  static ReadOnceFormula threshold(int k, std::vector<ReadOnceFormula> children);
  /// spectrum[w] is the gate output when w children are 1; size fan-in + 1.
  static ReadOnceFormula symmetric(std::vector<bool> spectrum, std::vector<ReadOnceFormula> children);
  static ReadOnceFormula conjunction(std::vector<ReadOnceFormula> children);
  static ReadOnceFormula disjunction(std::vector<ReadOnceFormula> children);
  static ReadOnceFormula exclusive_or(std::vector<ReadOnceFormula> children);

  Kind kind() const noexcept { return kind_; }
  int var() const noexcept { return var_; }
  int k() const noexcept { return k_; }
  const std::vector<bool>& spectrum() const noexcept { return spectrum_; }
  const std::vector<ReadOnceFormula>& children() const noexcept { return children_; }

  bool eval(Point x) const;

 private:
  Kind kind_ = Kind::Leaf;
  int var_ = 0;
  int k_ = 0;
  std::vector<bool> spectrum_;
  std::vector<ReadOnceFormula> children_;
};

struct ReadOnceStats {
  int depth = 0;          // leaves have depth 0, every gate (NOT included) adds one
  int max_branching = 0;  // largest gate fan-in
  int num_vars = 0;       // number of leaves
};

/// Throws NotReadOnce on a repeated variable, BadParams on malformed gates.
void validate(const ReadOnceFormula& phi);
ReadOnceStats readonce_stats(const ReadOnceFormula& phi);
/// Truth table on max(var)+1 variables.
BooleanFunction readonce_to_function(const ReadOnceFormula& phi);

/// Text form, e.g. `and(x1,or(x2,not(x3)))`, `thr2(x1,x2,x3)`, `sym[0110](x1,x2,x3)`,
/// `xor(x1,x2)`. Variables are 1-based; sym spectra list weight 0 first.
ReadOnceFormula parse_formula(const std::string& text);
std::string to_string(const ReadOnceFormula& phi);

/// Random read-once formula on exactly m variables built from non-constant
/// monotone threshold gates of fan-in >= 2 and optional NOT gates.
ReadOnceFormula random_threshold_formula(int m, std::mt19937_64& rng);
/// Random read-once formula on exactly m variables built from non-constant
/// symmetric gates of fan-in >= 2.
ReadOnceFormula random_symmetric_formula(int m, std::mt19937_64& rng);

}  // namespace bfc
