#include "catch_amalgamated.hpp"

#include "lefschetz/colon.hpp"
#include "lefschetz/graded_oracle.hpp"

using namespace lefschetz;

namespace {

BivarPoly xy_linear(BigInt cx, BigInt cy) {
  BivarPoly p;
  p.add_term(1, 0, cx);
  p.add_term(0, 1, cy);
  return p;
}

const BivarPoly X_PLUS_Y = xy_linear(1, 1);

}  // namespace

TEST_CASE("known colon generator values") {
  auto g = colon_generators({2, 2, 1});
  REQUIRE(g.regime == ColonRegime::CaseOddAminusK);
  REQUIRE(g.q1 == xy_linear(1, -1));
  REQUIRE(g.q2 == BivarPoly::monomial(0, 2));

  g = colon_generators({2, 4, 1});
  REQUIRE(g.regime == ColonRegime::CaseSmallA);
  REQUIRE(g.q1 == BivarPoly::monomial(2, 0));
  BivarPoly h = BivarPoly::monomial(1, 2) - BivarPoly::monomial(0, 3);
  REQUIRE(g.q2 == h);

  g = colon_generators({3, 4, 2});
  REQUIRE(g.regime == ColonRegime::CaseOddAminusK);
  BivarPoly f1;
  f1.add_term(2, 0, 3);
  f1.add_term(1, 1, -2);
  f1.add_term(0, 2, 1);
  REQUIRE(g.q1 == f1);
  REQUIRE(g.q2 == BivarPoly::monomial(1, 2) - BigInt(2) * BivarPoly::monomial(0, 3));

  g = colon_generators({3, 3, 5});
  REQUIRE(g.regime == ColonRegime::UnitIdeal);
  REQUIRE(g.q1 == BivarPoly::monomial(0, 0));
  REQUIRE(g.q2.is_zero());
}

TEST_CASE("regime dispatch and parameter validation") {
  REQUIRE(colon_generators({4, 7, 3}).regime == ColonRegime::CaseSmallA);
  REQUIRE(colon_generators({4, 7, 4}).regime == ColonRegime::CaseOddAminusK);
  REQUIRE(colon_generators({4, 7, 5}).regime == ColonRegime::CaseEvenAminusK);
  REQUIRE(colon_generators({4, 7, 10}).regime == ColonRegime::UnitIdeal);
  REQUIRE_THROWS_AS(colon_generators({1, 3, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(colon_generators({4, 3, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(colon_generators({3, 4, 0}), std::invalid_argument);
}

TEST_CASE("generator ordering: q1 never divisible by y on a degree tie") {
  for (int d1 = 2; d1 <= 8; ++d1)
    for (int d2 = d1; d2 <= 8; ++d2)
      for (int a = 1; a < d1 + d2 - 1; ++a) {
        auto g = colon_generators({d1, d2, a});
        REQUIRE(g.q1.degree() <= g.q2.degree());
        if (g.q1.degree() == g.q2.degree()) {
          REQUIRE_FALSE(g.q1.divisible_by_monomial(0, 1));
          REQUIRE(g.q2.divisible_by_monomial(0, 1));
        }
      }
}

TEST_CASE("degree law across the full grid") {
  for (int d1 = 2; d1 <= 12; ++d1)
    for (int d2 = d1; d2 <= 12; ++d2)
      for (int a = 1; a <= d1 + d2; ++a) {
        auto g = colon_generators({d1, d2, a});
        CAPTURE(d1, d2, a);
        if (a >= d1 + d2 - 1) {
          REQUIRE(g.q1.degree() == 0);
          REQUIRE(g.q2.is_zero());
        } else if (a <= d2 - d1) {
          REQUIRE(g.q1.degree() == d1);
          REQUIRE(g.q2.degree() == d2 - a);
        } else if ((d1 + d2 - a) % 2 != 0) {
          REQUIRE(g.q1.degree() == (d1 + d2 - a - 1) / 2);
          REQUIRE(g.q2.degree() == (d1 + d2 - a + 1) / 2);
        } else {
          REQUIRE(g.q1.degree() == (d1 + d2 - a) / 2);
          REQUIRE(g.q2.degree() == (d1 + d2 - a) / 2);
        }
        REQUIRE(g.q1.homogeneous());
        REQUIRE(g.q2.homogeneous());
      }
}

TEST_CASE("generators multiplied by (x+y)^a land in the base ideal") {
  for (int d1 = 2; d1 <= 10; ++d1)
    for (int d2 = d1; d2 <= 10; ++d2)
      for (int a = 1; a <= d1 + d2; ++a) {
        auto g = colon_generators({d1, d2, a});
        BivarPoly mult = expand_binomial_power(a);
        CAPTURE(d1, d2, a);
        if (a < d1 + d2 - 1) {
          REQUIRE(ideal_membership2(g.q1 * mult, d1, d2));
          REQUIRE(ideal_membership2(g.q2 * mult, d1, d2));
        } else {
          // unit ideal: (x+y)^a itself already reduces into (x^d1, y^d2)
          REQUIRE(ideal_membership2(mult, d1, d2));
        }
      }
}

TEST_CASE("multiplication identities tying consecutive generator families") {
  for (int d = 2; d <= 10; ++d) {
    for (int a = 1; a <= 2 * d - 3; a += 2) {
      // odd a; b = (a-1)/2
      const BigInt b((a - 1) / 2);
      BivarPoly f1 = gen_F1(d, a, 0), f2 = gen_F2(d, a, 0);
      CAPTURE(d, a);
      REQUIRE(BigInt(d - 1) * (X_PLUS_Y * gen_G1(d, a + 1, 0)) ==
              (d - b - 1) * (BivarPoly::monomial(0, 1) * f1) + (d + b) * f2);
      REQUIRE(BigInt(1 - d) * (X_PLUS_Y * gen_G2(d, a + 1, 0)) ==
              xy_linear(d - 1, (d - 1) + (b + 1) * (d - b - 1)) * f1 +
                  (b + 1) * (d + b) * f2);
    }
    for (int a = 2; a <= 2 * d - 4; a += 2) {
      // even a
      const BigInt b1(a / 2), b2((a - 2) / 2);
      BivarPoly g1 = gen_G1(d, a, 0), g2 = gen_G2(d, a, 0);
      CAPTURE(d, a);
      REQUIRE(b1 * (X_PLUS_Y * gen_F1(d, a + 1, 0)) ==
              b1 * (b1 + 2 - d) * g1 + (b1 - d) * g2);
      REQUIRE(BigInt(-1) * (b2 + 2) * (X_PLUS_Y * gen_F2(d, a + 1, 0)) ==
              xy_linear(d - 1, (b2 + 2) * (d - b2 - 2)) * g1 +
                  (d - b2 - 1) * (BivarPoly::monomial(0, 1) * g2));
    }
  }
}

TEST_CASE("stepping identity for the small-a generator") {
  for (int d1 = 2; d1 <= 8; ++d1)
    for (int k = 2; k <= 8; ++k) {
      int d2 = d1 + k;
      for (int a = 1; a < k; ++a) {
        BivarPoly diff = X_PLUS_Y * gen_H(d1, a + 1, k) - gen_H(d1, a, k);
        CAPTURE(d1, k, a);
        REQUIRE(diff.divisible_by_monomial(d1, 0));
      }
      // base case closes onto the pure powers
      BivarPoly base = X_PLUS_Y * gen_H(d1, 1, k);
      BivarPoly expect = BivarPoly::monomial(d1, d2 - d1);
      expect.add_term(0, d2, (d1 % 2 == 0) ? BigInt(-1) : BigInt(1));
      REQUIRE(base == expect);
    }
}

TEST_CASE("alternative expansion of the small-a generator agrees modulo x^d1") {
  for (int d1 = 2; d1 <= 7; ++d1)
    for (int k = 1; k <= 7; ++k) {
      int d2 = d1 + k;
      for (int a = 1; a <= k; ++a) {
        BivarPoly alt;
        for (int j = 0; j <= d2 - a; ++j) {
          BigInt c = binom(d2 - j - 1, a - 1);
          if (j % 2) c = -c;
          alt.add_term(d2 - a - j, j, c);
        }
        // the two expansions agree up to the parity sign of k - a
        BigInt sign = ((k - a) % 2 != 0) ? BigInt(1) : BigInt(-1);
        BivarPoly diff = alt - sign * gen_H(d1, a, k);
        CAPTURE(d1, k, a);
        REQUIRE(diff.divisible_by_monomial(d1, 0));
      }
    }
}

TEST_CASE("x-derivatives shift the inner index up to a scalar") {
  for (int d = 3; d <= 9; ++d)
    for (int n = 1; n <= 3; ++n) {
      for (int a = 1; a <= 2 * d - 5; a += 2) {
        CAPTURE(d, a, n);
        BigInt s1 = 1, s2 = 1;
        for (int j = 1; j <= n; ++j) {
          s1 *= (a - 1) / 2 + j;
          s2 *= (a - 3) / 2 + j;
        }
        REQUIRE(nth_x_derivative(gen_F1(d, a, 0), n) == s1 * gen_F1(d, a, n));
        REQUIRE(nth_x_derivative(gen_F2(d, a, 0), n) == s2 * gen_F2(d, a, n));
      }
      for (int a = 2; a <= 2 * d - 4; a += 2) {
        CAPTURE(d, a, n);
        BigInt s = 1;
        for (int j = 1; j <= n; ++j) s *= (a - 2) / 2 + j;
        REQUIRE(nth_x_derivative(gen_G1(d, a, 0), n) == s * gen_G1(d, a, n));
        REQUIRE(nth_x_derivative(gen_G2(d, a, 0), n) == s * gen_G2(d, a, n));
      }
    }
}
