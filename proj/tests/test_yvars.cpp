#include "tpdilog/involutions.hpp"
#include "tpdilog/yvars.hpp"

#include <gtest/gtest.h>

using namespace tpdilog;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

bool is_lower(YFamily f) { return !uses_upper_minors(f); }

}  // namespace

TEST(YFamilyNames, RoundTrip) {
  for (YFamily f : kAllFamilies) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_EQ(family_name(YFamily::upper_tilde), "Y_upper_tilde");
  EXPECT_THROW(parse_family("Y_sideways"), std::invalid_argument);
}

TEST(YValue, ThreeByThreeLower) {
  Coords x(3, q(1));
  x(1, 2) = q(3, 2);
  x(1, 3) = q(5, 7);
  x(2, 3) = q(2);
  EXPECT_EQ(y_value(jacobi_to_matrix(x), YFamily::lower, Triple{1, 2, 3}), q(3, 4));
}

TEST(YValue, RejectsBadTriple) {
  const RMatrix m = m_x(4, q(1));
  EXPECT_THROW(y_value(m, YFamily::lower, Triple{1, 2, 5}), std::invalid_argument);
}

TEST(YValue, PositiveOnTotallyPositiveMatrices) {
  Rng rng(51);
  for (int n = 3; n <= 7; ++n) {
    const RMatrix m = jacobi_to_matrix(random_coords(n, 9, rng));
    for (YFamily f : kAllFamilies) {
      const auto ys = y_values(m, f);
      ASSERT_EQ(ys.size(), triples(n).size());
      for (std::size_t k = 0; k < ys.size(); ++k) {
        EXPECT_GT(ys[k], 0);
        EXPECT_EQ(ys[k], y_value(m, f, triples(n)[k]));
      }
    }
  }
}

TEST(MX, ValuesDoNotDependOnX) {
  for (int n = 3; n <= 7; ++n)
    for (const Rational& x : {q(1, 3), q(1), q(7)}) {
      const RMatrix m = m_x(n, x);
      for (YFamily f : kAllFamilies)
        for (const Triple& t : triples(n)) {
          const Rational expected = is_lower(f) ? Rational(q(t.c - t.b) / (t.b - t.a)) : Rational(q(t.b - t.a) / (t.c - t.b));
          EXPECT_EQ(y_value(m, f, t), expected) << family_name(f) << t.to_string();
        }
    }
}

TEST(MX, BinomialEntries) {
  RMatrix expected(4, 4);
  expected << q(1), q(3), q(3), q(1), q(0), q(1), q(2), q(1), q(0), q(0), q(1), q(1), q(0), q(0), q(0), q(1);
  EXPECT_EQ(m_x(4, q(1)), expected);
  RMatrix two(3, 3);
  two << q(1), q(4), q(4), q(0), q(1), q(2), q(0), q(0), q(1);
  EXPECT_EQ(m_x(3, q(2)), two);
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(m_x(n, q(5, 3)), jacobi_to_matrix(Coords(n, q(5, 3))));
}

TEST(MX, InvolutionsInvertTheParameter) {
  for (int n = 2; n <= 7; ++n) {
    const Rational x = q(5, 3);
    const GaussTriple g = decompose_gauss(m_x(n, x));
    EXPECT_EQ(g.m_prime, m_x(n, 1 / x));
    EXPECT_EQ(g.m_dprime, m_x(n, 1 / x));
  }
}

TEST(MX, RejectsBadArguments) {
  EXPECT_THROW(m_x(3, q(0)), std::invalid_argument);
  EXPECT_THROW(m_x(3, q(-2)), std::invalid_argument);
  EXPECT_THROW(m_x(1, q(1)), std::invalid_argument);
}

TEST(MX, ScaledFlagMinorFactorials) {
  for (int n = 2; n <= 8; ++n)
    for (const Rational& x : {q(1, 3), q(7)}) {
      const RMatrix m = m_x(n, x);
      for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
          for (int c = b + 1; c <= n + 1; ++c) {
            const IndexSet set = IndexSet::interval(a, b) | IndexSet::interval(c, n);
            Rational power(1);
            for (int k = 0; k < (c - b - 1) * (b + 1 - a); ++k) power *= x;
            Rational expected(1);
            for (int i = a; i <= b; ++i) expected *= factorial(n - i);
            for (int j = a + c - b - 1; j <= c - 1; ++j) expected /= factorial(n - j);
            expected *= toeplitz_det(c - b - 1, b - a);
            EXPECT_EQ(flag_minor_right(m, set) / power, expected) << n << " " << set.to_string();
          }
    }
}

TEST(Relations, HoldOnRandomMatrices) {
  Rng rng(52);
  for (int n = 3; n <= 7; ++n)
    for (int trial = 0; trial < 3; ++trial)
      EXPECT_TRUE(y_relations_check(jacobi_to_matrix(random_coords(n, 9, rng)))) << n;
}

TEST(Relations, LowerEqualsShiftedUpperTilde) {
  Rng rng(53);
  for (int n = 3; n <= 8; ++n) {
    const RMatrix m = jacobi_to_matrix(random_coords(n, 9, rng));
    for (const Triple& t : triples(n)) {
      const Rational y = y_value(m, YFamily::lower, t);
      EXPECT_EQ(y, y_value(m, YFamily::upper_tilde, Triple{t.a, t.a + t.c - t.b, t.c}));
      const auto iv = IndexSet::interval;
      const auto mn = [&](int r0, int r1, int c0, int c1) { return minor(m, iv(r0, r1), iv(c0, c1)); };
      const int d = t.c - t.b;
      const Rational general = mn(t.a, t.b - 1, t.a + d + 1, t.c) * mn(t.a + 1, t.b, t.a + d, t.c - 1) /
                               (mn(t.a, t.b, t.a + d, t.c) * mn(t.a + 1, t.b - 1, t.a + d + 1, t.c - 1));
      EXPECT_EQ(y, general) << t.to_string();
    }
  }
}

TEST(Relations, TildeFamiliesInvertUnderInvolutionsBothWays) {
  Rng rng(54);
  for (int n = 3; n <= 7; ++n) {
    const RMatrix m = jacobi_to_matrix(random_coords(n, 9, rng));
    const GaussTriple g = decompose_gauss(m);
    for (const Triple& t : triples(n)) {
      const Triple r = t.reversed(n);
      EXPECT_EQ(y_value(g.m_prime, YFamily::lower_tilde, t) * y_value(m, YFamily::lower, r), 1);
      EXPECT_EQ(y_value(m, YFamily::lower_tilde, t) * y_value(g.m_prime, YFamily::lower, r), 1);
      EXPECT_EQ(y_value(g.m_dprime, YFamily::upper_tilde, t) * y_value(m, YFamily::upper, r), 1);
      EXPECT_EQ(y_value(m, YFamily::upper_tilde, t) * y_value(g.m_dprime, YFamily::upper, r), 1);
    }
  }
}

TEST(Toeplitz, SmallValues) {
  EXPECT_EQ(toeplitz_det(1, 1), q(1, 2));
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(toeplitz_det(k, 0), 1 / factorial(k));
  EXPECT_EQ(toeplitz_det(0, 3), q(1));
}

TEST(Toeplitz, DeterminantMatchesClosedForm) {
  for (int k = 0; k <= 6; ++k)
    for (int m = 0; m <= 6; ++m) EXPECT_EQ(determinant(toeplitz_matrix(k, m)), toeplitz_det(k, m)) << k << "," << m;
}

TEST(Toeplitz, Recurrence) {
  for (int k = 1; k <= 8; ++k)
    for (int m = 2; m <= 8; ++m) {
      const Rational f1 = toeplitz_det(k, m - 1);
      EXPECT_EQ(toeplitz_det(k, m),
                (f1 * f1 - toeplitz_det(k + 1, m - 1) * toeplitz_det(k - 1, m - 1)) / toeplitz_det(k, m - 2));
    }
}
