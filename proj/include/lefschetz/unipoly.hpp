#pragma once

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace lefschetz {

/// Univariate polynomial in t with exact rational coefficients, ascending
/// powers, trailing zeros trimmed.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(BigRat v) { return UniPoly({std::move(v)}); }

  const std::vector<BigRat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  BigRat eval(const BigInt& t) const {
    BigRat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
  }

  bool integer_coefficients() const {
    for (const auto& c : c_)
      if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigRat> c_;
};

/// Exact Lagrange interpolation (via Newton's divided differences) through
/// the given points. Abscissae must be pairwise distinct.
inline UniPoly unipoly_interpolate(const std::vector<std::pair<BigInt, BigRat>>& points) {
  const size_t n = points.size();
  if (n == 0) throw std::invalid_argument("unipoly_interpolate: no points");
  {
    std::set<BigInt> xs;
    for (const auto& [x, y] : points) xs.insert(x);
    if (xs.size() != n) throw std::invalid_argument("unipoly_interpolate: repeated abscissa");
  }
  // Divided differences.
  std::vector<BigRat> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (size_t lvl = 1; lvl < n; ++lvl)
    for (size_t i = n - 1; i >= lvl; --i)
      dd[i] = (dd[i] - dd[i - 1]) / BigRat(points[i].first - points[i - lvl].first);
  // Expand Newton form to monomial basis.
  std::vector<BigRat> coef(n, BigRat(0));
  std::vector<BigRat> basis(n, BigRat(0));  // running product prod (t - x_j)
  basis[0] = 1;
  size_t basis_len = 1;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < basis_len; ++j) coef[j] += dd[i] * basis[j];
    if (i + 1 < n) {
      // basis *= (t - x_i)
      for (size_t j = basis_len; j-- > 0;) {
        basis[j + 1] += basis[j];
        basis[j] *= -BigRat(points[i].first);
      }
      ++basis_len;
    }
  }
  return UniPoly(std::move(coef));
}

/// All integers t in [lo, hi] matching `parity` (0 = even, 1 = odd) with
/// p(t) == 0, by exact evaluation.
inline std::vector<long> integer_root_scan(const UniPoly& p, long lo, long hi, int parity) {
  if (lo > hi) throw std::invalid_argument("integer_root_scan: lo > hi");
  std::vector<long> roots;
  for (long t = lo; t <= hi; ++t) {
    if (((t % 2) + 2) % 2 != parity) continue;
    if (p.eval(BigInt(t)) == 0) roots.push_back(t);
  }
  return roots;
}

inline std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = p.degree(); e >= 0; --e) {
    const BigRat& c = p.coeffs()[e];
    if (c == 0) continue;
    BigRat a = c < 0 ? BigRat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) os << a.str();
    if (a != 1 && e > 0) os << "*";
    if (e > 0) {
      os << "t";
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace lefschetz
