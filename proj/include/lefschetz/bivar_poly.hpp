#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "arith.hpp"

namespace lefschetz {

/// Bivariate polynomial in x, y over the integers. Sparse map keyed by
/// (x-exponent, y-exponent); zero coefficients are never stored. The zero
/// polynomial has empty support and degree() == -1.
class BivarPoly {
public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, BigInt>;

  BivarPoly() = default;

  static BivarPoly monomial(int i, int j, BigInt c = BigInt(1)) {
    BivarPoly p;
    p.add_term(i, j, c);
    return p;
  }

  void add_term(int i, int j, const BigInt& c) {
    if (c == 0) return;
    if (i < 0 || j < 0) throw std::invalid_argument("BivarPoly: negative exponent");
    auto [it, inserted] = terms_.try_emplace(Key{i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
  }

  bool homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.first + terms_.begin()->first.second;
    for (const auto& [k, c] : terms_)
      if (k.first + k.second != d) return false;
    return true;
  }

  BigInt coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  BivarPoly& operator+=(const BivarPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  BivarPoly& operator-=(const BivarPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }

  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }

  friend BivarPoly operator*(const BigInt& s, const BivarPoly& p) {
    BivarPoly r;
    if (s == 0) return r;
    for (const auto& [k, c] : p.terms_) r.terms_.emplace(k, s * c);
    return r;
  }

  BivarPoly operator-() const { return BigInt(-1) * *this; }

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const BivarPoly& a, const BivarPoly& b) {
    return !(a == b);
  }

  /// True if every monomial is divisible by x^i0 y^j0.
  bool divisible_by_monomial(int i0, int j0) const {
    for (const auto& [k, c] : terms_)
      if (k.first < i0 || k.second < j0) return false;
    return true;
  }

private:
  Terms terms_;
};

/// (x+y)^a expanded.
inline BivarPoly expand_binomial_power(int a) {
  if (a < 0) throw std::invalid_argument("expand_binomial_power: a < 0");
  BivarPoly p;
  for (int i = 0; i <= a; ++i) p.add_term(a - i, i, binom(a, i));
  return p;
}

/// Exact n-th partial derivative with respect to x.
inline BivarPoly nth_x_derivative(const BivarPoly& p, int n) {
  if (n < 0) throw std::invalid_argument("nth_x_derivative: n < 0");
  BivarPoly r;
  for (const auto& [k, c] : p.terms()) {
    if (k.first < n) continue;
    BigInt f = c;
    for (int j = 0; j < n; ++j) f *= (k.first - j);
    r.add_term(k.first - n, k.second, f);
  }
  return r;
}

inline std::string to_string(const BivarPoly& p) {
  if (p.is_zero()) return "0";
  // Highest x-power first.
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_var = k.first > 0 || k.second > 0;
    if (a != 1 || !has_var) os << a.str();
    if (a != 1 && has_var) os << "*";
    if (k.first > 0) {
      os << "x";
      if (k.first > 1) os << "^" << k.first;
    }
    if (k.second > 0) {
      if (k.first > 0) os << "*";
      os << "y";
      if (k.second > 1) os << "^" << k.second;
    }
  }
  return os.str();
}

}  // namespace lefschetz
