#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "bfc/core/boolean_function.hpp"
#include "bfc/rational.hpp"

namespace bfc {

/// ZeroOne: variables range over {0,1}. PlusMinus: over {-1,1}, with bit b read as (-1)^b.
enum class Basis { ZeroOne, PlusMinus };

const char* to_string(Basis b);

/// Subset order used everywhere a canonical order is needed: by size, then
/// lexicographically (the set holding the smallest element of the symmetric
/// difference comes first).
struct SubsetOrder {
  bool operator()(VarSet a, VarSet b) const noexcept {
    const int wa = std::popcount(a), wb = std::popcount(b);
    if (wa != wb) return wa < wb;
    const VarSet diff = a ^ b;
    return diff != 0 && (a & diff & (~diff + 1)) != 0;
  }
};

/// All subsets of [n] with at most d elements, in SubsetOrder.
std::vector<VarSet> subsets_up_to(int n, int d);

class MultilinearPolynomial {
 public:
  using Terms = std::map<VarSet, Rational, SubsetOrder>;

  explicit MultilinearPolynomial(int n = 0, Basis basis = Basis::ZeroOne) : n_(n), basis_(basis) {}

  static MultilinearPolynomial constant(int n, Basis basis, const Rational& c);
  static MultilinearPolynomial variable(int n, Basis basis, int var);
  static MultilinearPolynomial monomial(int n, Basis basis, VarSet vars, const Rational& c = 1);

  int num_vars() const noexcept { return n_; }
  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }

  Rational coefficient(VarSet s) const;
  /// Adds c to the coefficient of s, erasing it if the result is zero.
  void add_term(VarSet s, const Rational& c);

  /// Largest monomial size; 0 for the zero polynomial (check is_zero()).
  int degree() const noexcept;
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Value at the cube point with index x (bit i gives variable i).
  Rational eval(Point x) const;
  /// Value at an arbitrary real point; throws DimensionMismatch on length mismatch.
  Rational eval(std::span<const Rational> x) const;

  MultilinearPolynomial& operator+=(const MultilinearPolynomial& o);
  MultilinearPolynomial& operator-=(const MultilinearPolynomial& o);
  MultilinearPolynomial& operator*=(const Rational& c);
  friend MultilinearPolynomial operator+(MultilinearPolynomial a, const MultilinearPolynomial& b) { return a += b; }
  friend MultilinearPolynomial operator-(MultilinearPolynomial a, const MultilinearPolynomial& b) { return a -= b; }
  friend MultilinearPolynomial operator*(MultilinearPolynomial a, const Rational& c) { return a *= c; }
  /// Product reduced with x_i^2 = x_i (ZeroOne) or y_i^2 = 1 (PlusMinus).
  friend MultilinearPolynomial operator*(const MultilinearPolynomial& a, const MultilinearPolynomial& b);

  bool operator==(const MultilinearPolynomial& o) const {
    return n_ == o.n_ && basis_ == o.basis_ && terms_ == o.terms_;
  }

 private:
  void check_compatible(const MultilinearPolynomial& o) const;

  int n_;
  Basis basis_;
  Terms terms_;
};

/// Values at all 2^n cube points, indexed by point.
std::vector<Rational> evaluate_all(const MultilinearPolynomial& p);

/// Unique multilinear interpolant of a table indexed by point.
MultilinearPolynomial interpolate(int n, std::span<const Rational> table, Basis basis);
/// ZeroOne: interpolates the 0/1 values. PlusMinus: interpolates the ±1 view (bit b ↦ (-1)^b).
/// Throws PartialNotSupported for partial f.
MultilinearPolynomial interpolate(const BooleanFunction& f, Basis basis);

/// 2^-n Σ_x f(x) χ_S(x) with f in its ±1 view.
Rational fourier_coefficient(const BooleanFunction& f, VarSet s);

MultilinearPolynomial basis_convert(const MultilinearPolynomial& p, Basis target);

class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coeffs);

  /// Coefficients by increasing power; empty for the zero polynomial.
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational eval(const Rational& t) const;

  /// Interpolates through (k, values[k]) for k = 0..values.size()-1.
  static UnivariatePolynomial through_integers(std::span<const Rational> values);

 private:
  std::vector<Rational> coeffs_;
};

struct Symmetrization {
  std::vector<Rational> slice_averages;  // index k = 0..n
  UnivariatePolynomial poly;
};

/// Values at all cube points scaled to integers: values[x] = scale * p(x).
struct ScaledValues {
  std::vector<Integer> values;
  Integer scale;
};
ScaledValues evaluate_all_scaled(const MultilinearPolynomial& p);

/// Averages p over each Hamming slice and interpolates the result.
Symmetrization symmetrize(const MultilinearPolynomial& p);

nlohmann::json to_json(const MultilinearPolynomial& p);
MultilinearPolynomial polynomial_from_json(const nlohmann::json& j);
/// Human-readable form, e.g. "x1*x2 - 1/2*x3 + 1" (1-based variables).
std::string to_string(const MultilinearPolynomial& p);

}  // namespace bfc
