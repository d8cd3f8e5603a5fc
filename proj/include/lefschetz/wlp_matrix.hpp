#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "colon.hpp"
#include "matrix.hpp"
#include "parallel.hpp"
#include "unipoly.hpp"

namespace lefschetz {

/// Almost complete intersection (x^(t+a1), y^(t+a2), z^(t+a3), x^a1 y^a2 z^a3)
/// with a1 <= a2, a1 + a2 + a3 divisible by 3 and a3 <= 2(a1 + a2). The
/// derived quantity a = (2(a1 + a2) - a3) / 3 controls the mixed column
/// block; a == 0 means the multiplication map is maximal-rank for free.
struct AciCase {
  int a1, a2, a3;
  long t;

  AciCase(int a1_, int a2_, int a3_, long t_) : a1(a1_), a2(a2_), a3(a3_), t(t_) {
    if (a1 > a2) std::swap(a1, a2);
  }

  int s() const { return a1 + a2 + a3; }
  int a() const { return (2 * (a1 + a2) - a3) / 3; }

  void validate() const {
    if (a1 < 1 || a2 < 1 || a3 < 1) throw std::invalid_argument("AciCase: exponents must be positive");
    if (a3 < a2) throw std::invalid_argument("AciCase: need a1 <= a2 <= a3");
    if (s() % 3 != 0) throw std::invalid_argument("AciCase: a1 + a2 + a3 must be divisible by 3");
    if (a3 > 2 * (a1 + a2)) throw std::invalid_argument("AciCase: a3 > 2(a1 + a2)");
    if (t < s() / 3) throw std::invalid_argument("AciCase: t below s/3");
  }
};

/// Square matrix of size a1 + a2 whose determinant decides maximal rank of
/// multiplication by x + y + z in the critical degree. Rows are indexed by
/// the degree t + a - 1 monomials in x, y outside (x^a1 y^a2); columns come
/// in three blocks read off from the syzygies of the colon ideal
/// (x^(t+a1), y^(t+a2)) : (x+y)^a3 and from x^(a-1-j) y^j (x+y)^t.
struct WlpMatrix {
  MatZ mat;
  int width_h1, width_h2, width_c;
  std::vector<std::pair<int, int>> row_monomials;  // (x-exp, y-exp)
};

inline WlpMatrix build_wlp_matrix(const AciCase& c) {
  c.validate();
  const int a = c.a();
  if (a < 1) throw std::invalid_argument("build_wlp_matrix: a3 == 2(a1+a2) needs no matrix");
  const long t = c.t;
  const long d2 = t + c.a2;
  const int k = c.a2 - c.a1;
  const int m = c.a3 - k;

  BivarPoly f1, f2;
  if (m % 2 != 0) {
    f1 = gen_F1(static_cast<int>(d2), m, k);
    f2 = gen_F2(static_cast<int>(d2), m, k);
  } else {
    f1 = gen_G1(static_cast<int>(d2), m, k);
    f2 = gen_G2(static_cast<int>(d2), m, k);
  }
  const long row_deg = t + a - 1;
  const long deg_h1 = row_deg - f1.degree();
  const long deg_h2 = row_deg - f2.degree();
  const int w1 = static_cast<int>(deg_h1 + 1);
  const int w2 = static_cast<int>(deg_h2 + 1);
  const int wc = a;
  const int n = c.a1 + c.a2;
  if (w1 + w2 + wc != n) throw std::logic_error("build_wlp_matrix: block widths do not tile the matrix");

  std::vector<std::pair<int, int>> rows;
  rows.reserve(n);
  for (int j = 0; j < c.a2; ++j) rows.emplace_back(static_cast<int>(row_deg - j), j);
  for (int i = c.a1 - 1; i >= 0; --i) rows.emplace_back(i, static_cast<int>(row_deg - i));

  MatZ mat(n, std::vector<BigInt>(n));
  auto fill_block = [&](const BivarPoly& f, long deg_h, int col0, int width) {
    for (int j = 0; j < width; ++j) {
      BivarPoly col = BivarPoly::monomial(static_cast<int>(deg_h) - j, j) * f;
      for (int r = 0; r < n; ++r)
        mat[r][col0 + j] = col.coeff(rows[r].first, rows[r].second);
    }
  };
  fill_block(f1, deg_h1, 0, w1);
  fill_block(f2, deg_h2, w1, w2);
  BivarPoly xyt = expand_binomial_power(static_cast<int>(t));
  for (int j = 0; j < wc; ++j) {
    BivarPoly col = BivarPoly::monomial(a - 1 - j, j) * xyt;
    for (int r = 0; r < n; ++r)
      mat[r][w1 + w2 + j] = col.coeff(rows[r].first, rows[r].second);
  }
  return {std::move(mat), w1, w2, wc, std::move(rows)};
}

inline BigInt det_exact(const AciCase& c) { return det_bareiss(build_wlp_matrix(c).mat); }

/// Maximal-rank decision via the determinant: rank is maximal iff the
/// determinant is nonzero, except that a == 0 is maximal unconditionally.
inline bool wlp_by_determinant(const AciCase& c) {
  c.validate();
  if (c.a() == 0) return true;
  return det_exact(c) != 0;
}

struct DetPolyResult {
  UniPoly poly;   // determinant as a function of t, fixed parity slice
  int parity;     // 0 even t, 1 odd t
  long t_min;     // least admissible t of that parity (s/3 or s/3 + 1)
};

/// Determinant of the decision matrix as a polynomial in t along one parity
/// class, by exact interpolation at B + 1 consecutive admissible values
/// where B = (a1+a2) * (ceil((a2-a1+a3)/2) + max(a1,a2) + 1) bounds the
/// degree. Three extra held-out samples must match or this throws.
inline DetPolyResult determinant_polynomial(int a1, int a2, int a3, int parity,
                                            unsigned jobs = 0) {
  if (a1 > a2) std::swap(a1, a2);
  AciCase probe(a1, a2, a3, (a1 + a2 + a3) / 3 + 2);
  probe.validate();
  if (probe.a() < 1) throw std::invalid_argument("determinant_polynomial: a3 == 2(a1+a2) is identically maximal");
  if (parity != 0 && parity != 1) throw std::invalid_argument("determinant_polynomial: parity must be 0 or 1");
  const long bound = static_cast<long>(a1 + a2) * ((a2 - a1 + a3 + 1) / 2 + std::max(a1, a2) + 1);
  long t0 = (a1 + a2 + a3) / 3;
  if ((t0 % 2) != parity) ++t0;
  const size_t n_fit = static_cast<size_t>(bound) + 1;
  const size_t n_total = n_fit + 3;
  std::vector<BigRat> dets(n_total);
  parallel_for(n_total, jobs, [&](size_t i) {
    AciCase c(a1, a2, a3, t0 + 2 * static_cast<long>(i));
    dets[i] = BigRat(det_bareiss(build_wlp_matrix(c).mat));
  });
  std::vector<std::pair<BigInt, BigRat>> pts;
  pts.reserve(n_fit);
  for (size_t i = 0; i < n_fit; ++i) pts.emplace_back(BigInt(t0 + 2 * static_cast<long>(i)), dets[i]);
  UniPoly p = unipoly_interpolate(pts);
  for (size_t i = n_fit; i < n_total; ++i) {
    BigInt t = t0 + 2 * static_cast<long>(i);
    if (p.eval(t) != dets[i])
      throw std::runtime_error("determinant_polynomial: held-out sample mismatch");
  }
  return {std::move(p), parity, t0};
}

}  // namespace lefschetz
