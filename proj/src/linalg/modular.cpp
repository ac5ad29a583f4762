#include "bfc/linalg/modular.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "bfc/error.hpp"

namespace bfc {

const std::vector<std::uint32_t>& word_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> small;
    for (std::uint32_t i = 2; i < (1u << 14) + 2; ++i) {
      bool prime = true;
      for (std::uint32_t q : small) {
        if (q * q > i) break;
        if (i % q == 0) {
          prime = false;
          break;
        }
      }
      if (prime) small.push_back(i);
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = (1u << 28) - 1; out.size() < 512; c -= 2) {
      bool prime = true;
      for (std::uint32_t q : small) {
        if (q * q > c) break;
        if (c % q == 0) {
          prime = false;
          break;
        }
      }
      if (prime) out.push_back(c);
    }
    return out;
  }();
  return primes;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (r != 1) throw Error(ErrorCode::Internal, "residue is not invertible");
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

std::uint32_t mod_reduce(const Integer& v, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
}

ModKernel::ModKernel(std::size_t cols, std::uint32_t p) : cols_(cols), p_(p), basis_(cols) {
  for (std::size_t j = 0; j < cols; ++j) {
    basis_[j].assign(cols, 0);
    basis_[j][j] = 1;
  }
}

void ModKernel::dots(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& row,
                     std::vector<std::uint32_t>& out) const {
  out.resize(basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    const std::uint32_t* v = basis_[j].data();
    std::uint64_t acc = 0;
    std::size_t pending = 0;
    for (const auto& [c, a] : row) {
      acc += static_cast<std::uint64_t>(a) * v[c];
      if (++pending == 255) {
        acc %= p_;
        pending = 0;
      }
    }
    out[j] = static_cast<std::uint32_t>(acc % p_);
  }
}

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> reduce_row(const SparseRow& row, std::uint32_t p) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(row.size());
  for (const auto& [c, a] : row) {
    const std::uint32_t r = mod_reduce(a, p);
    if (r) out.emplace_back(c, r);
  }
  return out;
}

}  // namespace

bool ModKernel::add_row(const SparseRow& row) {
  const auto reduced = reduce_row(row, p_);
  std::vector<std::uint32_t> s;
  dots(reduced, s);
  std::size_t j0 = s.size();
  for (std::size_t j = 0; j < s.size(); ++j)
    if (s[j]) {
      j0 = j;
      break;
    }
  if (j0 == s.size()) return false;
  const std::uint32_t inv = mod_inverse(s[j0], p_);
  const std::vector<std::uint32_t>& pivot = basis_[j0];
  std::vector<std::uint32_t> support;
  for (std::uint32_t c = 0; c < cols_; ++c)
    if (pivot[c]) support.push_back(c);
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (j == j0 || s[j] == 0) continue;
    const std::uint32_t neg = p_ - mod_mul(s[j], inv, p_);
    std::uint32_t* v = basis_[j].data();
    for (std::uint32_t c : support)
      v[c] = static_cast<std::uint32_t>((v[c] + static_cast<std::uint64_t>(neg) * pivot[c]) % p_);
  }
  basis_[j0].swap(basis_.back());
  basis_.pop_back();
  return true;
}

bool ModKernel::annihilates(const SparseRow& row) const {
  const auto reduced = reduce_row(row, p_);
  std::vector<std::uint32_t> s;
  dots(reduced, s);
  for (std::uint32_t v : s)
    if (v) return false;
  return true;
}

std::vector<std::uint32_t> ModKernel::pivot_columns() const {
  std::vector<std::vector<std::uint32_t>> m = basis_;
  std::vector<std::uint32_t> pivots;
  std::size_t row = 0;
  for (std::uint32_t col = 0; col < cols_ && row < m.size(); ++col) {
    std::size_t r = row;
    while (r < m.size() && m[r][col] == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[row]);
    const std::uint32_t inv = mod_inverse(m[row][col], p_);
    for (std::uint32_t c = col; c < cols_; ++c) m[row][c] = mod_mul(m[row][c], inv, p_);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const std::uint32_t f = p_ - m[i][col];
      for (std::uint32_t c = col; c < cols_; ++c)
        if (m[row][c]) m[i][c] = static_cast<std::uint32_t>((m[i][c] + static_cast<std::uint64_t>(f) * m[row][c]) % p_);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m, const Integer& bound) {
  Integer r0 = m, r1 = u % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return ratio(r1, t1);
}

namespace {

/// Inverse of A modulo p by Gauss-Jordan elimination, or nullopt if singular.
std::optional<std::vector<std::uint32_t>> inverse_mod(const IntMatrix& a, std::uint32_t p) {
  const std::size_t r = a.rows;
  const std::size_t w = 2 * r;
  std::vector<std::uint32_t> m(r * w, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i * w + j] = mod_reduce(a(i, j), p);
    m[i * w + r + i] = 1;
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    while (piv < r && m[piv * w + col] == 0) ++piv;
    if (piv == r) return std::nullopt;
    if (piv != col)
      for (std::size_t c = 0; c < w; ++c) std::swap(m[piv * w + c], m[col * w + c]);
    std::uint32_t* prow = &m[col * w];
    const std::uint32_t inv = mod_inverse(prow[col], p);
    for (std::size_t c = 0; c < w; ++c)
      if (prow[c]) prow[c] = mod_mul(prow[c], inv, p);
    std::vector<std::size_t> support;
    for (std::size_t c = col; c < w; ++c)
      if (prow[c]) support.push_back(c);
    for (std::size_t i = 0; i < r; ++i) {
      std::uint32_t* row = &m[i * w];
      if (i == col || row[col] == 0) continue;
      const std::uint64_t f = p - row[col];
      for (std::size_t c : support) row[c] = static_cast<std::uint32_t>((row[c] + f * prow[c]) % p);
    }
  }
  std::vector<std::uint32_t> out(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out[i * r + j] = m[i * w + r + j];
  return out;
}

/// Natural log of a Hadamard-type bound on the numerators and denominator of A^{-1} B.
double log_solution_bound(const IntMatrix& a, const IntMatrix& b) {
  double total = 0;
  for (std::size_t i = 0; i < a.rows; ++i) {
    double norm2 = 0, bmax = 0;
    for (std::size_t j = 0; j < a.cols; ++j) norm2 += static_cast<double>(a(i, j)) * static_cast<double>(a(i, j));
    for (std::size_t j = 0; j < b.cols; ++j) bmax = std::max(bmax, std::fabs(static_cast<double>(b(i, j))));
    total += 0.5 * std::log(std::max(1.0, norm2 + bmax * bmax));
  }
  return total;
}

bool verify_solution(const IntMatrix& a, const IntMatrix& b, const ExactSolution& s) {
  Integer acc, rhs;
  for (std::size_t j = 0; j < b.cols; ++j)
    for (std::size_t i = 0; i < a.rows; ++i) {
      acc = 0;
      for (std::size_t c = 0; c < a.cols; ++c) {
        const std::int64_t v = a(i, c);
        if (v) acc += s.numerators[j][c] * static_cast<long>(v);
      }
      rhs = s.denominators[j] * static_cast<long>(b(i, j));
      if (acc != rhs) return false;
    }
  return true;
}

/// Reconstructs every column of X from its residues modulo m.
std::optional<ExactSolution> reconstruct(const std::vector<Integer>& x, std::size_t r, std::size_t k, const Integer& m) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  const Integer half = m / 2;
  ExactSolution out;
  Integer v;
  for (std::size_t j = 0; j < k; ++j) {
    Integer den = 1;
    std::vector<Integer> num(r);
    for (std::size_t i = 0; i < r; ++i) {
      v = x[i * k + j] * den % m;
      if (v > half) v -= m;
      if (abs(v) <= bound) {
        num[i] = v;
        continue;
      }
      const auto q = rational_reconstruct(v, m, bound);
      if (!q) return std::nullopt;
      const Integer extra = q->get_den();
      den *= extra;
      if (den > bound) return std::nullopt;
      for (std::size_t t = 0; t < i; ++t) num[t] *= extra;
      num[i] = q->get_num();
    }
    out.numerators.push_back(std::move(num));
    out.denominators.push_back(std::move(den));
  }
  return out;
}

}  // namespace

std::optional<ExactSolution> dixon_solve(const IntMatrix& a, const IntMatrix& b, std::uint32_t p) {
  if (a.rows != a.cols || b.rows != a.rows) throw Error(ErrorCode::DimensionMismatch, "dixon_solve needs square A and matching B");
  const std::size_t r = a.rows, k = b.cols;
  if (r == 0) {
    ExactSolution empty;
    empty.numerators.assign(k, {});
    empty.denominators.assign(k, Integer(1));
    return empty;
  }
  const auto inv = inverse_mod(a, p);
  if (!inv) return std::nullopt;

  const double log_h = log_solution_bound(a, b);
  const std::size_t max_steps = static_cast<std::size_t>((2 * log_h + std::log(2.0)) / std::log(static_cast<double>(p))) + 2;

  std::vector<std::int64_t> residual = b.data;  // r x k
  std::vector<std::uint32_t> step(r * k);
  std::vector<Integer> x(r * k);
  Integer modulus = 1;
  std::size_t next_check = 1;
  for (std::size_t it = 1;; ++it) {
    // step = A^{-1} residual (mod p)
    std::vector<std::uint32_t> res_mod(r * k);
    for (std::size_t i = 0; i < r * k; ++i) res_mod[i] = mod_reduce(residual[i], p);
    for (std::size_t i = 0; i < r; ++i) {
      const std::uint32_t* irow = &(*inv)[i * r];
      for (std::size_t j = 0; j < k; ++j) {
        std::uint64_t acc = 0;
        std::size_t pending = 0;
        for (std::size_t c = 0; c < r; ++c) {
          acc += static_cast<std::uint64_t>(irow[c]) * res_mod[c * k + j];
          if (++pending == 255) {
            acc %= p;
            pending = 0;
          }
        }
        step[i * k + j] = static_cast<std::uint32_t>(acc % p);
      }
    }
    // residual = (residual - A step) / p, exact.
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        __int128 acc = residual[i * k + j];
        for (std::size_t c = 0; c < r; ++c) {
          const std::int64_t av = a(i, c);
          if (av) acc -= static_cast<__int128>(av) * step[c * k + j];
        }
        if (acc % p != 0) throw Error(ErrorCode::Internal, "p-adic lifting lost exactness");
        residual[i * k + j] = static_cast<std::int64_t>(acc / p);
      }
    for (std::size_t i = 0; i < r * k; ++i)
      if (step[i]) mpz_addmul_ui(x[i].get_mpz_t(), modulus.get_mpz_t(), step[i]);
    modulus *= p;

    if (it == next_check || it >= max_steps) {
      next_check *= 2;
      if (auto sol = reconstruct(x, r, k, modulus); sol && verify_solution(a, b, *sol)) return sol;
      if (it >= max_steps) throw Error(ErrorCode::Internal, "rational reconstruction failed within the Hadamard bound");
    }
  }
}

}  // namespace bfc
