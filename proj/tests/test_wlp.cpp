#include "catch_amalgamated.hpp"

#include "lefschetz/graded_oracle.hpp"
#include "lefschetz/wlp_matrix.hpp"

#include "example_reference.hpp"

using namespace lefschetz;
using lefschetz_testing::reference_det_factored_3_7_14;
using lefschetz_testing::reference_matrix_3_7_14;

TEST_CASE("decision matrix reproduces the transcribed reference matrix entrywise") {
  for (long t : {9L, 11L}) {
    WlpMatrix w = build_wlp_matrix(AciCase(3, 7, 14, t));
    REQUIRE(w.width_h1 == 4);
    REQUIRE(w.width_h2 == 4);
    REQUIRE(w.width_c == 2);
    MatZ expect = reference_matrix_3_7_14(t);
    for (int r = 0; r < 10; ++r)
      for (int c = 0; c < 10; ++c) {
        CAPTURE(t, r, c);
        REQUIRE(w.mat[r][c] == expect[r][c]);
      }
  }
}

TEST_CASE("example determinant vanishes exactly at the known failure") {
  REQUIRE(det_exact(AciCase(3, 7, 14, 9)) == 0);
  REQUIRE(det_exact(AciCase(3, 7, 14, 11)) != 0);
  // matches the reference factorization up to one global scalar
  BigInt d11 = det_exact(AciCase(3, 7, 14, 11));
  BigInt d13 = det_exact(AciCase(3, 7, 14, 13));
  BigInt p11 = reference_det_factored_3_7_14(11);
  BigInt p13 = reference_det_factored_3_7_14(13);
  REQUIRE(d11 * p13 == d13 * p11);
}

TEST_CASE("interpolated determinant polynomial finds exactly the known root") {
  DetPolyResult res = determinant_polynomial(3, 7, 14, 1);
  REQUIRE(res.t_min == 9);
  REQUIRE(integer_root_scan(res.poly, 8, 99, 1) == std::vector<long>{9});
  // evaluations reproduce direct determinants
  for (long t : {9L, 11L, 21L}) REQUIRE(res.poly.eval(BigInt(t)) == BigRat(det_exact(AciCase(3, 7, 14, t))));
}

TEST_CASE("determinant and direct rank methods agree on a small grid") {
  for (int a1 = 1; a1 <= 4; ++a1)
    for (int a2 = a1; a2 <= 6; ++a2)
      for (int a3 = a2; a3 <= 2 * (a1 + a2) && a1 + a2 + a3 <= 12; ++a3) {
        if ((a1 + a2 + a3) % 3 != 0) continue;
        int s = a1 + a2 + a3;
        for (long t = s / 3; t <= s / 3 + 2; ++t) {
          AciCase c(a1, a2, a3, t);
          MonomialIdeal3 ideal{static_cast<int>(t) + a1, static_cast<int>(t) + a2,
                               static_cast<int>(t) + a3, true, a1, a2, a3};
          CAPTURE(a1, a2, a3, t);
          REQUIRE(wlp_by_determinant(c) == wlp_direct(ideal).holds);
        }
      }
}

TEST_CASE("borderline column width zero always has maximal rank") {
  // a3 == 2(a1+a2) forces the decision without a matrix
  AciCase c(1, 2, 6, 4);
  REQUIRE(c.a() == 0);
  REQUIRE(wlp_by_determinant(c));
  MonomialIdeal3 ideal{5, 6, 10, true, 1, 2, 6};
  REQUIRE(wlp_direct(ideal).holds);
  REQUIRE_THROWS_AS(build_wlp_matrix(c), std::invalid_argument);
}

TEST_CASE("case validation") {
  REQUIRE_THROWS_AS(AciCase(1, 1, 2, 1).validate(), std::invalid_argument);   // sum not divisible by 3
  REQUIRE_THROWS_AS(AciCase(2, 2, 2, 1).validate(), std::invalid_argument);   // t below s/3
  REQUIRE_THROWS_AS(AciCase(1, 1, 7, 3).validate(), std::invalid_argument);   // a3 too large
  REQUIRE_THROWS_AS(AciCase(3, 2, 1, 5).validate(), std::invalid_argument);   // a3 below a2 after sorting
  REQUIRE_NOTHROW(AciCase(7, 3, 14, 9).validate());                           // sorts a1 <= a2
  REQUIRE_THROWS_AS(determinant_polynomial(1, 2, 6, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(determinant_polynomial(3, 7, 14, 2), std::invalid_argument);
}
