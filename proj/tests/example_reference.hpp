#pragma once

// Reference data for the exponent triple (3, 7, 14): an independently transcribed 10 x 10
// decision matrix (three column blocks) and the known odd-t determinant
// factorization, up to one global scalar. Shared by the unit and acceptance
// suites.

#include "lefschetz/arith.hpp"
#include "lefschetz/matrix.hpp"

namespace lefschetz_testing {

inline lefschetz::MatZ reference_matrix_3_7_14(long t) {
  using lefschetz::BigInt;
  using lefschetz::MatZ;
  auto sgn = [](long e) { return e % 2 == 0 ? BigInt(1) : BigInt(-1); };
  auto B = [](long n, long k) { return lefschetz::binom(n, k); };
  MatZ a1{
      {0, 0, 0, 0},
      {B(t + 5, 8), 0, 0, 0},
      {-B(t + 4, 8) * B(6, 5), B(t + 5, 8), 0, 0},
      {B(t + 3, 8) * B(7, 5), -B(t + 4, 8) * B(6, 5), B(t + 5, 8), 0},
      {-B(t + 2, 8) * B(8, 5), B(t + 3, 8) * B(7, 5), -B(t + 4, 8) * B(6, 5), B(t + 5, 8)},
      {B(t + 1, 8) * B(9, 5), -B(t + 2, 8) * B(8, 5), B(t + 3, 8) * B(7, 5), -B(t + 4, 8) * B(6, 5)},
      {-B(t, 8) * B(10, 5), B(t + 1, 8) * B(9, 5), -B(t + 2, 8) * B(8, 5), B(t + 3, 8) * B(7, 5)},
      {0, sgn(t - 3) * B(t + 2, 5), sgn(t - 4) * B(9, 8) * B(t + 1, 5), sgn(t - 5) * B(10, 8) * B(t, 5)},
      {0, 0, sgn(t - 3) * B(t + 2, 5), sgn(t - 4) * B(9, 8) * B(t + 1, 5)},
      {0, 0, 0, sgn(t - 3) * B(t + 2, 5)}};
  MatZ a2{
      {-B(t + 6, 8), 0, 0, 0},
      {0, -B(t + 6, 8), 0, 0},
      {B(t + 4, 8) * B(6, 4), 0, -B(t + 6, 8), 0},
      {-2 * B(t + 3, 8) * B(7, 4), B(t + 4, 8) * B(6, 4), 0, -B(t + 6, 8)},
      {3 * B(t + 2, 8) * B(8, 4), -2 * B(t + 3, 8) * B(7, 4), B(t + 4, 8) * B(6, 4), 0},
      {-4 * B(t + 1, 8) * B(9, 4), 3 * B(t + 2, 8) * B(8, 4), -2 * B(t + 3, 8) * B(7, 4),
       B(t + 4, 8) * B(6, 4)},
      {5 * B(t, 8) * B(10, 4), -4 * B(t + 1, 8) * B(9, 4), 3 * B(t + 2, 8) * B(8, 4),
       -2 * B(t + 3, 8) * B(7, 4)},
      {0, sgn(t - 2) * (t - 3) * B(t + 2, 4), sgn(t - 3) * (t - 4) * B(9, 8) * B(t + 1, 4),
       sgn(t - 4) * (t - 5) * B(10, 8) * B(t, 4)},
      {0, 0, sgn(t - 2) * (t - 3) * B(t + 2, 4), sgn(t - 3) * (t - 4) * B(9, 8) * B(t + 1, 4)},
      {0, 0, 0, sgn(t - 2) * (t - 3) * B(t + 2, 4)}};
  MatZ a3{{1, 0},
          {B(t, 1), 1},
          {B(t, 2), B(t, 1)},
          {B(t, 3), B(t, 2)},
          {B(t, 4), B(t, 3)},
          {B(t, 5), B(t, 4)},
          {B(t, 6), B(t, 5)},
          {B(t, t - 1), B(t, t - 2)},
          {1, B(t, t - 1)},
          {0, 1}};
  MatZ m(10);
  for (int r = 0; r < 10; ++r) {
    m[r] = a1[r];
    m[r].insert(m[r].end(), a2[r].begin(), a2[r].end());
    m[r].insert(m[r].end(), a3[r].begin(), a3[r].end());
  }
  return m;
}

inline lefschetz::BigInt reference_det_factored_3_7_14(long t) {
  using lefschetz::BigInt;
  auto pw = [](BigInt b, int e) {
    BigInt r = 1;
    while (e--) r *= b;
    return r;
  };
  return pw(t, 8) * (t - 9) * (t - 7) * pw(t - 5, 3) * pw(t - 4, 2) * pw(t - 3, 5) * pw(t - 2, 4) *
         pw(t - 1, 10) * pw(t + 1, 7) * pw(t + 2, 4) * pw(t + 3, 2) * (t + 4) * pw(t + 8, 2) *
         (t + 9) * pw(t + 10, 4) * pw(t + 11, 3) * pw(t + 12, 2) * pw(t + 14, 2) *
         (7 * BigInt(t) * t * t + 115 * BigInt(t) * t + 504 * t + 36);
}

}  // namespace lefschetz_testing
