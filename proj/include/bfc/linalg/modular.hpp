#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bfc/rational.hpp"

namespace bfc {

/// Primes below 2^28, largest first. Products of two residues fit in 56 bits, so up
/// to 255 of them can be summed in a uint64 before reducing.
const std::vector<std::uint32_t>& word_primes();

inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
inline std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }
inline std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t mod_reduce(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);
std::uint32_t mod_reduce(const Integer& v, std::uint32_t p);

/// Sparse integer row: (column, coefficient) pairs with distinct columns.
using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// Kernel of a growing set of rows over GF(p), kept as an explicit basis.
class ModKernel {
 public:
  ModKernel(std::size_t cols, std::uint32_t p);

  std::uint32_t prime() const noexcept { return p_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<std::vector<std::uint32_t>>& basis() const noexcept { return basis_; }

  /// Adds a row; returns true when it was independent of the previous rows.
  bool add_row(const SparseRow& row);
  /// True when every kernel vector is orthogonal to the row.
  bool annihilates(const SparseRow& row) const;

  /// Columns where the reduced echelon form of the kernel basis has its pivots.
  /// Kernel vectors are determined by their entries on these columns.
  std::vector<std::uint32_t> pivot_columns() const;

 private:
  void dots(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& row, std::vector<std::uint32_t>& out) const;

  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::vector<std::uint32_t>> basis_;
};

/// Dense row-major integer matrix with small entries.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::int64_t> data;
  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Exact solution of A X = B for square nonsingular A: column j of X equals
/// numerators[j] / denominators[j], with positive denominators.
struct ExactSolution {
  std::vector<std::vector<Integer>> numerators;  // per column, length = A.rows
  std::vector<Integer> denominators;
};

/// p-adic lifting with rational reconstruction; the result is verified exactly
/// against A X = B. Returns nullopt when A is singular modulo p.
std::optional<ExactSolution> dixon_solve(const IntMatrix& a, const IntMatrix& b, std::uint32_t p);

/// a/b with |a|, b <= bound and a ≡ u b (mod m), if one exists.
std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m, const Integer& bound);

}  // namespace bfc
