#pragma once

#include <stdexcept>
#include <string>

#include "bivar_poly.hpp"

namespace lefschetz {

/// Parameters of the colon ideal (x^d1, y^d2) : (x+y)^a with d1 <= d2.
struct ColonParams {
  int d1;
  int d2;
  int a;
  int k() const { return d2 - d1; }

  void validate() const {
    if (d1 < 2) throw std::invalid_argument("ColonParams: d1 < 2");
    if (d1 > d2) throw std::invalid_argument("ColonParams: d1 > d2 (sort first)");
    if (a < 1) throw std::invalid_argument("ColonParams: a < 1");
  }
};

enum class ColonRegime { CaseSmallA, CaseOddAminusK, CaseEvenAminusK, UnitIdeal };

inline std::string to_string(ColonRegime r) {
  switch (r) {
    case ColonRegime::CaseSmallA: return "small-a";
    case ColonRegime::CaseOddAminusK: return "odd-a-minus-k";
    case ColonRegime::CaseEvenAminusK: return "even-a-minus-k";
    case ColonRegime::UnitIdeal: return "unit-ideal";
  }
  return "?";
}

/// The two generators, ordered with deg(q1) <= deg(q2); on a degree tie the
/// generator not divisible by y comes first. For UnitIdeal q1 = 1, q2 = 0.
struct ColonGens {
  BivarPoly q1;
  BivarPoly q2;
  ColonRegime regime;
};

namespace detail {

// Negative x-exponent terms are dropped: their binomial factor vanishes
// under the extended convention except for the stray y-power term that the
// a == 1 instance of the F2 family produces, which does not belong to the
// generator either.
inline void add_guarded(BivarPoly& p, int xe, int ye, BigInt c) {
  if (xe < 0) return;
  p.add_term(xe, ye, c);
}

}  // namespace detail

/// F_{1,d,a,n}, a odd. Homogeneous of degree d - (a+1)/2 - n (or zero).
inline BivarPoly gen_F1(int d, int a, int n) {
  if (d < 2 || n < 0 || a < 1 || a % 2 == 0)
    throw std::invalid_argument("gen_F1: need d >= 2, n >= 0, odd a >= 1");
  const int b = (a - 1) / 2;
  BivarPoly p;
  for (int i = 0; i <= d - b - 1; ++i) {
    BigInt c = binom(d - 1 - i, b + n) * binom(b + i, b);
    if (i & 1) c = -c;
    detail::add_guarded(p, d - b - 1 - n - i, i, c);
  }
  return p;
}

/// F_{2,d,a,n}, a odd. Homogeneous of degree d - (a-1)/2 - n (or zero).
inline BivarPoly gen_F2(int d, int a, int n) {
  if (d < 2 || n < 0 || a < 1 || a % 2 == 0)
    throw std::invalid_argument("gen_F2: need d >= 2, n >= 0, odd a >= 1");
  BivarPoly p;
  for (int i = 0; i <= d - (a + 3) / 2; ++i) {
    BigInt c = binom(d - 3 - i, (a - 3) / 2 + n) * binom((a + 1) / 2 + i, (a + 1) / 2);
    if (i & 1) c = -c;
    detail::add_guarded(p, d - (a + 3) / 2 - n - i, i + 2, c);
  }
  return p;
}

/// G_{1,d,a,n}, a even. Homogeneous of degree d - a/2 - n (or zero).
inline BivarPoly gen_G1(int d, int a, int n) {
  if (d < 2 || n < 0 || a < 2 || a % 2 != 0)
    throw std::invalid_argument("gen_G1: need d >= 2, n >= 0, even a >= 2");
  BivarPoly p;
  for (int i = 0; i <= d - (a + 2) / 2; ++i) {
    BigInt c = binom(d - 2 - i, (a - 2) / 2 + n) * binom(a / 2 + i, a / 2);
    if (i & 1) c = -c;
    detail::add_guarded(p, d - (a + 2) / 2 - n - i, i + 1, c);
  }
  return p;
}

/// G_{2,d,a,n}, a even. Homogeneous of degree d - a/2 - n (or zero).
inline BivarPoly gen_G2(int d, int a, int n) {
  if (d < 2 || n < 0 || a < 2 || a % 2 != 0)
    throw std::invalid_argument("gen_G2: need d >= 2, n >= 0, even a >= 2");
  BivarPoly p;
  for (int i = 0; i <= d - a / 2; ++i) {
    BigInt c = binom(d - 1 - i, (a - 2) / 2 + n) * binom((a - 2) / 2 + i, (a - 2) / 2) * (i - 1);
    if (i & 1) c = -c;
    detail::add_guarded(p, d - a / 2 - n - i, i, c);
  }
  return p;
}

/// H_{d1,a,k} = y^(k-a+1) * sum_i (-1)^i binom(d1+a-2-i, a-1) x^(d1-1-i) y^i,
/// the degree d2-a generator when 1 <= a <= k.
inline BivarPoly gen_H(int d1, int a, int k) {
  if (a < 1 || a > k) throw std::invalid_argument("gen_H: need 1 <= a <= k");
  if (d1 < 2) throw std::invalid_argument("gen_H: d1 < 2");
  BivarPoly p;
  for (int i = 0; i <= d1 - 1; ++i) {
    BigInt c = binom(d1 + a - 2 - i, a - 1);
    if (i & 1) c = -c;
    p.add_term(d1 - 1 - i, k - a + 1 + i, c);
  }
  return p;
}

/// Generators of (x^d1, y^d2) : (x+y)^a per the case dispatch: the pair
/// (x^d1, H) for a <= k, the F pair for a-k odd, the G pair for a-k even,
/// and the unit ideal once a >= d1+d2-1.
inline ColonGens colon_generators(const ColonParams& params) {
  params.validate();
  const int d1 = params.d1, d2 = params.d2, a = params.a, k = params.k();
  if (a >= d1 + d2 - 1)
    return {BivarPoly::monomial(0, 0), BivarPoly(), ColonRegime::UnitIdeal};
  if (a <= k)
    return {BivarPoly::monomial(d1, 0), gen_H(d1, a, k), ColonRegime::CaseSmallA};
  const int m = a - k;
  if (m % 2 != 0) {
    // deg F1 <= deg F2.
    return {gen_F1(d2, m, k), gen_F2(d2, m, k), ColonRegime::CaseOddAminusK};
  }
  // Equal degrees; G2 is the one not divisible by y.
  return {gen_G2(d2, m, k), gen_G1(d2, m, k), ColonRegime::CaseEvenAminusK};
}

}  // namespace lefschetz
