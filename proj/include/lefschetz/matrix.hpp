#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace lefschetz {

/// Dense exact integer matrix, row major.
using MatZ = std::vector<std::vector<BigInt>>;

/// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt det_bareiss(MatZ m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det_bareiss: not square");
  int sign = 1;
  BigInt prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  BigInt d = m[n - 1][n - 1];
  return sign < 0 ? BigInt(-d) : d;
}

namespace detail {

inline void divide_row_content(std::vector<BigInt>& row) {
  BigInt g = 0;
  for (const auto& v : row) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& v : row) v /= g;
}

}  // namespace detail

/// Exact rank over Q via integer elimination with per-row content reduction.
inline int rank_exact(MatZ m) {
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    // Smallest nonzero pivot keeps the growth down.
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      if (piv == rows || boost::multiprecision::abs(m[i][col]) <
                             boost::multiprecision::abs(m[piv][col]))
        piv = i;
    }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      BigInt g = boost::multiprecision::gcd(m[r][col], m[i][col]);
      BigInt a = m[i][col] / g;
      BigInt b = m[r][col] / g;
      for (size_t j = col; j < cols; ++j) m[i][j] = b * m[i][j] - a * m[r][j];
      detail::divide_row_content(m[i]);
    }
    ++r;
  }
  return static_cast<int>(r);
}

/// Rank over the prime field F_p. Always a lower bound for the rank over Q.
inline int rank_mod_p(const MatZ& m, std::uint64_t p = 2147483647ull) {
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      BigInt v = m[i][j] % BigInt(p);
      if (v < 0) v += p;
      a[i][j] = v.convert_to<std::uint64_t>();
    }
  auto inv_mod = [p](std::uint64_t x) {
    // p is prime; Fermat.
    std::uint64_t r = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % p);
      b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % p);
      e >>= 1;
    }
    return r;
  };
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (a[i][col] != 0) { piv = i; break; }
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    std::uint64_t inv = inv_mod(a[r][col]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      std::uint64_t f =
          static_cast<std::uint64_t>((static_cast<unsigned __int128>(a[i][col]) * inv) % p);
      for (size_t j = col; j < cols; ++j) {
        unsigned __int128 sub = static_cast<unsigned __int128>(f) * a[r][j] % p;
        a[i][j] = (a[i][j] + p - static_cast<std::uint64_t>(sub)) % p;
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

/// Exact rank, fast path: a full-rank witness mod p certifies maximal rank
/// (rank mod p never exceeds the rational rank); anything less is confirmed
/// by exact elimination.
inline int rank_hybrid(const MatZ& m) {
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  const int full = static_cast<int>(std::min(rows, cols));
  if (full == 0) return 0;
  int rp = rank_mod_p(m);
  if (rp == full) return full;
  return rank_exact(m);
}

/// Basis of the rational kernel of m (as a map on column vectors), each
/// basis vector scaled to coprime integers.
inline std::vector<std::vector<BigInt>> kernel_integer_basis(const MatZ& m) {
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::vector<BigRat>> a(rows, std::vector<BigRat>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) a[i][j] = BigRat(m[i][j]);
  // Reduced row echelon form.
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (a[i][col] != 0) { piv = i; break; }
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    BigRat d = a[r][col];
    for (size_t j = col; j < cols; ++j) a[r][j] /= d;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col] == 0) continue;
      BigRat f = a[i][col];
      for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<BigInt>> basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<BigRat> v(cols, BigRat(0));
    v[free_col] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free_col];
    BigInt lcm = 1;
    for (const auto& x : v)
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
    std::vector<BigInt> w(cols);
    for (size_t j = 0; j < cols; ++j)
      w[j] = boost::multiprecision::numerator(v[j]) *
             (lcm / boost::multiprecision::denominator(v[j]));
    detail::divide_row_content(w);
    basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace lefschetz
