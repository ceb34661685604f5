#include "gbprime/spoly.hpp"

#include <gtest/gtest.h>

#include "gbprime/parser.hpp"
#include "testutil.hpp"

using namespace gbprime;
using testutil::Rng;

namespace {

constexpr MonomialOrder kPrime{OrderKind::PrimeEncoded};

VarContext ctx3(3);

Polynomial P(const std::string& text) {
  return parse_polynomial(text, ctx3);
}

}  // namespace

TEST(SPolynomial, CancelsLeadingTermsExample) {
  // lcm of the leading monomials is x1^2*x2^2.
  EXPECT_EQ(s_polynomial(P("x2^2 - x2"), P("x1^2 - x1"), kPrime),
            P("x1*x2^2 - x1^2*x2"));
}

TEST(SPolynomial, SelfPairIsZero) {
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    Polynomial f = rng.nonzero_polynomial(ctx3, 5, 3, true);
    EXPECT_TRUE(s_polynomial(f, f, kPrime).is_zero());
  }
}

TEST(SPolynomial, RationalCoefficientsFromLeadingCoefficient) {
  EXPECT_EQ(s_polynomial(P("2*x0*x2 + 4*x1*x2 - 6"), P("x2^2 - x2"), kPrime),
            P("1/2*x0*x2^2 + x1*x2 - 3/2*x2"));
}

TEST(SPolynomial, ZeroInputRejected) {
  EXPECT_THROW(s_polynomial(Polynomial(), P("x0"), kPrime),
               ZeroPolynomialError);
  EXPECT_THROW(s_polynomial(P("x0"), Polynomial(), kPrime),
               ZeroPolynomialError);
}

TEST(SPolynomial, LcmMonomialNeverSurvives) {
  Rng rng(77);
  int checked = 0;
  while (checked < 500) {
    Polynomial f = rng.nonzero_polynomial(ctx3, 5, 3, true);
    Polynomial g = rng.nonzero_polynomial(ctx3, 5, 3, true);
    Monomial l = monomial_lcm(leading_monomial(f, kPrime),
                              leading_monomial(g, kPrime));
    Polynomial s = s_polynomial(f, g, kPrime);
    for (const Term& t : s.terms()) EXPECT_NE(t.mono, l);
    // The S-polynomial drops strictly below the lcm in the order.
    if (!s.is_zero()) {
      EXPECT_TRUE(compare(leading_monomial(s, kPrime), l, kPrime) < 0);
    }
    ++checked;
  }
}

TEST(SPolynomial, AntiSymmetric) {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = rng.nonzero_polynomial(ctx3, 5, 3, true);
    Polynomial g = rng.nonzero_polynomial(ctx3, 5, 3, true);
    EXPECT_EQ(s_polynomial(f, g, kPrime),
              negate(s_polynomial(g, f, kPrime)));
  }
}

TEST(AllSPolynomials, PairEnumeration) {
  Polynomial f = P("x0^2 - x0");
  Polynomial g = P("x1^2 - x1");
  Polynomial h = P("x2^2 - x2");
  EXPECT_TRUE(all_s_polynomials({}, kPrime).empty());
  EXPECT_TRUE(all_s_polynomials({f}, kPrime).empty());

  auto two = all_s_polynomials({f, g}, kPrime);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0], s_polynomial(f, g, kPrime));

  Polynomial f1 = P("2*x0*x2 + 4*x1*x2 - 6");
  auto six = all_s_polynomials({f1, h, g, f}, kPrime);
  ASSERT_EQ(six.size(), 6u);  // C(4, 2) in (i, j) nested-loop order
  EXPECT_EQ(six[0], s_polynomial(f1, h, kPrime));
  EXPECT_EQ(six[1], s_polynomial(f1, g, kPrime));
  EXPECT_EQ(six[2], s_polynomial(f1, f, kPrime));
  EXPECT_EQ(six[3], s_polynomial(h, g, kPrime));
  EXPECT_EQ(six[4], s_polynomial(h, f, kPrime));
  EXPECT_EQ(six[5], s_polynomial(g, f, kPrime));
}

TEST(ReducePolynomial, DividesOutMonomialContent) {
  // gcd of the term monomials via encodings: gcd(12, 6) = 6, i.e. x0*x1.
  EXPECT_EQ(gcd(Integer(12), Integer(6)), 6);
  EXPECT_EQ(reduce_polynomial(P("x0^2*x1 + x0*x1"), ReductionMode::Paper),
            P("x0 + 1"));
  // Coefficients ride along untouched.
  EXPECT_EQ(reduce_polynomial(P("4*x1*x2^2 - 6*x1^2*x2"), ReductionMode::Paper),
            P("4*x2 - 6*x1"));
}

TEST(ReducePolynomial, SingleTermCollapsesToOne) {
  EXPECT_EQ(reduce_polynomial(P("x0^2*x1"), ReductionMode::Paper), P("1"));
  EXPECT_EQ(reduce_polynomial(P("2*x0"), ReductionMode::Paper), P("1"));
  EXPECT_EQ(reduce_polynomial(P("-x0^2"), ReductionMode::Paper), P("1"));
  EXPECT_EQ(reduce_polynomial(P("x0*x1"), ReductionMode::Paper), P("1"));
}

TEST(ReducePolynomial, BarePowersSurvive) {
  // A lone x_i^k with coefficient 1 is returned unchanged.
  EXPECT_EQ(reduce_polynomial(P("x2^3"), ReductionMode::Paper), P("x2^3"));
  EXPECT_EQ(reduce_polynomial(P("x0"), ReductionMode::Paper), P("x0"));
}

TEST(ReducePolynomial, ConstantTermBlocksReduction) {
  Polynomial f = P("x0 + 2*x1 - 3");
  EXPECT_EQ(reduce_polynomial(f, ReductionMode::Paper), f);
  Polynomial c = P("7");
  EXPECT_EQ(reduce_polynomial(c, ReductionMode::Paper), c);
  EXPECT_EQ(reduce_polynomial(Polynomial(), ReductionMode::Paper),
            Polynomial());
}

TEST(ReducePolynomial, TrivialContentLeavesInputAlone) {
  Polynomial f = P("x0^2*x1 + x2");
  EXPECT_EQ(reduce_polynomial(f, ReductionMode::Paper), f);
}

TEST(ReducePolynomial, PaperModeIsIdempotent) {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    Polynomial f = rng.polynomial(ctx3, 5, 3, true);
    Polynomial once = reduce_polynomial(f, ReductionMode::Paper);
    EXPECT_EQ(reduce_polynomial(once, ReductionMode::Paper), once);
  }
}

TEST(ReducePolynomial, OffModeIsIdentity) {
  Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    Polynomial f = rng.polynomial(ctx3, 5, 3, true);
    EXPECT_EQ(reduce_polynomial(f, ReductionMode::Off), f);
  }
}
