#include "bfc/poly/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace bfc {

const char* to_string(Basis b) { return b == Basis::ZeroOne ? "01" : "pm"; }

std::vector<VarSet> subsets_up_to(int n, int d) {
  std::vector<VarSet> out;
  d = std::min(d, n);
  for (int size = 0; size <= d; ++size) {
    // Lexicographic order on sorted element lists: enumerate combinations recursively.
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      VarSet s = 0;
      for (int i : idx) s |= VarSet{1} << i;
      out.push_back(s);
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

MultilinearPolynomial MultilinearPolynomial::constant(int n, Basis basis, const Rational& c) {
  return monomial(n, basis, 0, c);
}

MultilinearPolynomial MultilinearPolynomial::variable(int n, Basis basis, int var) {
  if (var < 0 || var >= n) throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
  return monomial(n, basis, VarSet{1} << var, 1);
}

MultilinearPolynomial MultilinearPolynomial::monomial(int n, Basis basis, VarSet vars, const Rational& c) {
  MultilinearPolynomial p(n, basis);
  p.add_term(vars, c);
  return p;
}

Rational MultilinearPolynomial::coefficient(VarSet s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultilinearPolynomial::add_term(VarSet s, const Rational& c) {
  if (n_ < 32 && (s >> n_) != 0) throw Error(ErrorCode::DimensionMismatch, "monomial uses a variable beyond n");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultilinearPolynomial::degree() const noexcept {
  // The map is ordered by size first, so the last key has the largest size.
  return terms_.empty() ? 0 : std::popcount(terms_.rbegin()->first);
}

Rational MultilinearPolynomial::eval(Point x) const {
  Rational sum = 0;
  for (const auto& [s, c] : terms_) {
    if (basis_ == Basis::ZeroOne) {
      if ((s & ~x) == 0) sum += c;
    } else if (std::popcount(s & x) % 2 == 0) {
      sum += c;
    } else {
      sum -= c;
    }
  }
  return sum;
}

Rational MultilinearPolynomial::eval(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != n_) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from n");
  Rational sum = 0;
  for (const auto& [s, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < n_ && term != 0; ++i)
      if ((s >> i) & 1u) term *= x[static_cast<std::size_t>(i)];
    sum += term;
  }
  return sum;
}

void MultilinearPolynomial::check_compatible(const MultilinearPolynomial& o) const {
  if (n_ != o.n_ || basis_ != o.basis_)
    throw Error(ErrorCode::DimensionMismatch, "polynomials differ in variable count or basis");
}

MultilinearPolynomial& MultilinearPolynomial::operator+=(const MultilinearPolynomial& o) {
  check_compatible(o);
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

MultilinearPolynomial& MultilinearPolynomial::operator-=(const MultilinearPolynomial& o) {
  check_compatible(o);
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

MultilinearPolynomial& MultilinearPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

MultilinearPolynomial operator*(const MultilinearPolynomial& a, const MultilinearPolynomial& b) {
  a.check_compatible(b);
  MultilinearPolynomial out(a.n_, a.basis_);
  for (const auto& [s, c] : a.terms_)
    for (const auto& [t, d] : b.terms_) out.add_term(a.basis_ == Basis::ZeroOne ? (s | t) : (s ^ t), c * d);
  return out;
}

namespace {

void zeta_subsets(std::vector<Rational>& a, int n) {
  for (int i = 0; i < n; ++i)
    for (std::size_t x = 0; x < a.size(); ++x)
      if ((x >> i) & 1u) a[x] += a[x ^ (std::size_t{1} << i)];
}

void mobius_subsets(std::vector<Rational>& a, int n) {
  for (int i = 0; i < n; ++i)
    for (std::size_t x = 0; x < a.size(); ++x)
      if ((x >> i) & 1u) a[x] -= a[x ^ (std::size_t{1} << i)];
}

void hadamard(std::vector<Rational>& a, int n) {
  Rational t;
  for (int i = 0; i < n; ++i)
    for (std::size_t x = 0; x < a.size(); ++x)
      if (!((x >> i) & 1u)) {
        const std::size_t y = x | (std::size_t{1} << i);
        t = a[y];
        a[y] = a[x] - t;
        a[x] += t;
      }
}

MultilinearPolynomial from_dense(int n, Basis basis, const std::vector<Rational>& coeffs) {
  MultilinearPolynomial p(n, basis);
  for (std::size_t s = 0; s < coeffs.size(); ++s)
    if (coeffs[s] != 0) p.add_term(static_cast<VarSet>(s), coeffs[s]);
  return p;
}

}  // namespace

std::vector<Rational> evaluate_all(const MultilinearPolynomial& p) {
  const int n = p.num_vars();
  std::vector<Rational> a(std::size_t{1} << n);
  for (const auto& [s, c] : p.terms()) a[s] = c;
  if (p.basis() == Basis::ZeroOne) {
    zeta_subsets(a, n);
  } else {
    hadamard(a, n);
  }
  return a;
}

MultilinearPolynomial interpolate(int n, std::span<const Rational> table, Basis basis) {
  if (table.size() != (std::size_t{1} << n)) throw Error(ErrorCode::DimensionMismatch, "table must have 2^n entries");
  std::vector<Rational> a(table.begin(), table.end());
  if (basis == Basis::ZeroOne) {
    mobius_subsets(a, n);
  } else {
    hadamard(a, n);
    const Rational scale = ratio(1, Integer(1) << n);
    for (auto& v : a) v *= scale;
  }
  return from_dense(n, basis, a);
}

MultilinearPolynomial interpolate(const BooleanFunction& f, Basis basis) {
  if (!f.is_total()) throw Error(ErrorCode::PartialNotSupported, "interpolation needs a total function");
  const int n = f.num_vars();
  // Integer transforms: coefficients are bounded by 2^n in magnitude.
  std::vector<long long> a(f.num_points());
  for (Point x = 0; x < f.num_points(); ++x)
    a[x] = basis == Basis::ZeroOne ? (f.value(x) ? 1 : 0) : f.sign(x);
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (basis == Basis::ZeroOne) {
        if (x & bit) a[x] -= a[x ^ bit];
      } else if (!(x & bit)) {
        const long long u = a[x], v = a[x | bit];
        a[x] = u + v;
        a[x | bit] = u - v;
      }
    }
  }
  MultilinearPolynomial p(n, basis);
  const Integer scale = basis == Basis::ZeroOne ? Integer(1) : Integer(Integer(1) << n);
  for (std::size_t s = 0; s < a.size(); ++s)
    if (a[s] != 0) p.add_term(static_cast<VarSet>(s), ratio(Integer(static_cast<long>(a[s])), scale));
  return p;
}

Rational fourier_coefficient(const BooleanFunction& f, VarSet s) {
  if (!f.is_total()) throw Error(ErrorCode::PartialNotSupported, "Fourier coefficients need a total function");
  if (f.num_vars() < 32 && (s >> f.num_vars()) != 0) throw Error(ErrorCode::DimensionMismatch, "S is not a subset of [n]");
  long sum = 0;
  for (Point x = 0; x < f.num_points(); ++x) sum += std::popcount(s & x) % 2 == 0 ? f.sign(x) : -f.sign(x);
  return ratio(sum, Integer(1) << f.num_vars());
}

MultilinearPolynomial basis_convert(const MultilinearPolynomial& p, Basis target) {
  if (p.basis() == target) return p;
  const int n = p.num_vars();
  double sparse_cost = 0;
  for (const auto& [s, c] : p.terms()) sparse_cost += static_cast<double>(std::size_t{1} << std::popcount(s));
  if (sparse_cost > static_cast<double>(n + 1) * static_cast<double>(std::size_t{1} << n)) {
    // Same function on the cube: read values through the bit map and re-interpolate.
    const std::vector<Rational> values = evaluate_all(p);
    return interpolate(n, values, target);
  }
  MultilinearPolynomial out(n, target);
  // ZeroOne -> PlusMinus: x_i = (1 - y_i)/2.  PlusMinus -> ZeroOne: y_i = 1 - 2 x_i.
  const Rational factor = target == Basis::PlusMinus ? Rational(-1) : Rational(-2);
  for (const auto& [s, c] : p.terms()) {
    const Rational lead = target == Basis::PlusMinus ? Rational(c / Rational(Integer(1) << std::popcount(s))) : c;
    for (VarSet t = s;; t = (t - 1) & s) {
      Rational coeff = lead;
      for (int k = std::popcount(t); k > 0; --k) coeff *= factor;
      out.add_term(t, coeff);
      if (t == 0) break;
    }
  }
  return out;
}

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UnivariatePolynomial::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::through_integers(std::span<const Rational> values) {
  // Newton form with nodes 0, 1, ..., m; then expand to the monomial basis.
  const std::size_t m = values.size();
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
  std::vector<Rational> coeffs;
  // Horner: P = dd0 + (t-0)(dd1 + (t-1)(dd2 + ...)).
  for (std::size_t i = m; i-- > 0;) {
    // coeffs <- coeffs * (t - i) + dd[i]
    std::vector<Rational> next(coeffs.size() + 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * static_cast<long>(i);
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  return UnivariatePolynomial(std::move(coeffs));
}

Symmetrization symmetrize(const MultilinearPolynomial& p_in) {
  const MultilinearPolynomial p = basis_convert(p_in, Basis::ZeroOne);
  const int n = p.num_vars();
  // Collect coefficient mass by monomial size: E_{|x|=k}[x^S] = C(n-|S|, k-|S|) / C(n, k).
  std::vector<Rational> mass(static_cast<std::size_t>(n + 1));
  for (const auto& [s, c] : p.terms()) mass[std::popcount(s)] += c;
  Symmetrization out;
  for (int k = 0; k <= n; ++k) {
    Rational avg = 0;
    for (int j = 0; j <= k; ++j)
      if (mass[j] != 0) avg += mass[j] * ratio(binomial(n - j, k - j), binomial(n, k));
    out.slice_averages.push_back(avg);
  }
  out.poly = UnivariatePolynomial::through_integers(out.slice_averages);
  return out;
}

nlohmann::json to_json(const MultilinearPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [s, c] : p.terms()) {
    nlohmann::json vars = nlohmann::json::array();
    for (int i = 0; i < p.num_vars(); ++i)
      if ((s >> i) & 1u) vars.push_back(i + 1);
    terms.push_back({{"vars", vars}, {"num", numerator_string(c)}, {"den", denominator_string(c)}});
  }
  return {{"n", p.num_vars()}, {"basis", to_string(p.basis())}, {"terms", terms}};
}

MultilinearPolynomial polynomial_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 0 || n > kMaxVars) throw Error(ErrorCode::CapExceeded, "polynomial variable count out of range");
    const std::string basis = j.at("basis").get<std::string>();
    if (basis != "01" && basis != "pm") throw Error(ErrorCode::ParseError, "basis must be \"01\" or \"pm\"");
    MultilinearPolynomial p(n, basis == "01" ? Basis::ZeroOne : Basis::PlusMinus);
    for (const auto& t : j.at("terms")) {
      VarSet s = 0;
      for (int v : t.at("vars").get<std::vector<int>>()) {
        if (v < 1 || v > n) throw Error(ErrorCode::ParseError, "term variable out of range");
        if ((s >> (v - 1)) & 1u) throw Error(ErrorCode::ParseError, "repeated variable in term");
        s |= VarSet{1} << (v - 1);
      }
      const std::string den = t.contains("den") ? t.at("den").get<std::string>() : "1";
      Rational c;
      try {
        c = parse_rational(t.at("num").get<std::string>(), den);
      } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::ParseError, "coefficient is not a decimal integer");
      }
      p.add_term(s, c);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("polynomial JSON: ") + e.what());
  }
}

std::string to_string(const MultilinearPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [s, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string vars;
    for (int i = 0; i < p.num_vars(); ++i)
      if ((s >> i) & 1u) vars += (vars.empty() ? "x" : "*x") + std::to_string(i + 1);
    if (vars.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << vars;
    } else {
      out << mag.get_str() << "*" << vars;
    }
  }
  return out.str();
}

ScaledValues evaluate_all_scaled(const MultilinearPolynomial& p) {
  const int n = p.num_vars();
  ScaledValues out{std::vector<Integer>(std::size_t{1} << n), Integer(1)};
  for (const auto& [s, c] : p.terms()) mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [s, c] : p.terms()) out.values[s] = c.get_num() * (out.scale / c.get_den());
  auto& a = out.values;
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (p.basis() == Basis::ZeroOne) {
        if (x & bit) a[x] += a[x ^ bit];
      } else if (!(x & bit)) {
        a[x] += a[x | bit];
        a[x | bit] = a[x] - a[x | bit] - a[x | bit];
      }
    }
  }
  return out;
}

}  // namespace bfc
