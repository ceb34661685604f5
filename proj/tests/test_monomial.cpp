#include "gbprime/monomial.hpp"

#include <gtest/gtest.h>

#include "testutil.hpp"

using namespace gbprime;
using testutil::all_monomials;

TEST(VarContext, GeneratesLeadingPrimes) {
  VarContext ctx(10);
  std::vector<long> expected{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  ASSERT_EQ(ctx.num_vars(), 10u);
  for (std::size_t i = 0; i < expected.size(); ++i)
    EXPECT_EQ(ctx.prime(i), expected[i]);
}

TEST(VarContext, PrimesAreStrictlyIncreasingAndPrime) {
  VarContext ctx(25);
  for (std::size_t i = 0; i < ctx.num_vars(); ++i) {
    EXPECT_NE(mpz_probab_prime_p(ctx.prime(i).get_mpz_t(), 30), 0);
    if (i > 0) {
      EXPECT_LT(ctx.prime(i - 1), ctx.prime(i));
    }
  }
}

TEST(VarContext, RejectsZeroVariables) {
  EXPECT_THROW(VarContext(0), std::invalid_argument);
}

TEST(Encode, Examples) {
  VarContext ctx(3);
  EXPECT_EQ(encode(Monomial({2, 1, 0}, ctx), ctx), 12);  // x0^2*x1
  EXPECT_EQ(encode(Monomial::one(3), ctx), 1);
  EXPECT_EQ(encode(Monomial({0, 1, 1}, ctx), ctx), 15);  // x1*x2
}

TEST(Encode, ArityMismatchRejected) {
  VarContext ctx(3);
  EXPECT_THROW(Monomial({1, 0}, ctx), ArityMismatchError);
  VarContext ctx2(2);
  Monomial m({1, 0}, ctx2);
  EXPECT_THROW(encode(m, ctx), ArityMismatchError);
}

TEST(Decode, Examples) {
  VarContext ctx(3);
  EXPECT_EQ(decode(Integer(12), ctx), Monomial({2, 1, 0}, ctx));
  EXPECT_EQ(decode(Integer(1), ctx), Monomial::one(3));
  EXPECT_THROW(decode(Integer(7), ctx), ForeignPrimeFactorError);
  EXPECT_THROW(decode(Integer(10 * 7), ctx), ForeignPrimeFactorError);
  EXPECT_THROW(decode(Integer(0), ctx), std::invalid_argument);
}

TEST(Divides, Examples) {
  VarContext ctx(3);
  EXPECT_TRUE(divides(Monomial({1, 1, 0}, ctx), Monomial({2, 1, 0}, ctx)));
  EXPECT_FALSE(divides(Monomial({0, 0, 1}, ctx), Monomial({1, 1, 0}, ctx)));
  EXPECT_TRUE(divides(Monomial::one(3), Monomial({2, 1, 3}, ctx)));
}

TEST(MonomialLcm, Examples) {
  VarContext ctx(3);
  EXPECT_EQ(monomial_lcm(Monomial({1, 0, 1}, ctx), Monomial({0, 1, 1}, ctx)),
            Monomial({1, 1, 1}, ctx));
  EXPECT_EQ(monomial_lcm(Monomial({2, 1, 0}, ctx), Monomial({0, 2, 0}, ctx)),
            Monomial({2, 2, 0}, ctx));
  Monomial m({1, 2, 3}, ctx);
  EXPECT_EQ(monomial_lcm(m, m), m);
}

TEST(MonomialGcd, Examples) {
  VarContext ctx(3);
  EXPECT_EQ(monomial_gcd(Monomial({2, 1, 0}, ctx), Monomial({1, 2, 0}, ctx)),
            Monomial({1, 1, 0}, ctx));
  EXPECT_EQ(monomial_gcd(Monomial({1, 0, 0}, ctx), Monomial({0, 1, 0}, ctx)),
            Monomial::one(3));
  EXPECT_EQ(monomial_gcd(Monomial({1, 2, 0}, ctx), Monomial::one(3)),
            Monomial::one(3));
}

TEST(MonomialQuotient, ExactAndRejected) {
  VarContext ctx(3);
  EXPECT_EQ(monomial_quotient(Monomial({2, 1, 1}, ctx), Monomial({1, 0, 1}, ctx)),
            Monomial({1, 1, 0}, ctx));
  EXPECT_THROW(monomial_quotient(Monomial({0, 1, 0}, ctx),
                                 Monomial({1, 0, 0}, ctx)),
               NotDivisibleError);
}

// Exhaustive checks over every pair of monomials with exponents <= 3 in up
// to 4 variables: the encoding is a multiplicative bijection and carries
// divisibility, lcm and gcd over to plain integer arithmetic.
TEST(EncodingCorrespondence, ExhaustiveSmallRange) {
  for (std::size_t n = 1; n <= 4; ++n) {
    VarContext ctx(n);
    auto monos = all_monomials(ctx, 3);
    for (const Monomial& a : monos) {
      EXPECT_EQ(decode(encode(a, ctx), ctx), a);
      EXPECT_EQ(a.encoding(), encode(a, ctx));
      for (const Monomial& b : monos) {
        Monomial product = a * b;
        EXPECT_EQ(product.encoding(), a.encoding() * b.encoding());
        EXPECT_EQ(encode(product, ctx), encode(a, ctx) * encode(b, ctx));
        EXPECT_EQ(divides(a, b), encoded_divides(a, b));
        EXPECT_EQ(monomial_lcm(a, b), encoded_monomial_lcm(a, b, ctx));
        EXPECT_EQ(monomial_gcd(a, b), encoded_monomial_gcd(a, b, ctx));
        if (divides(b, a)) {
          EXPECT_EQ(monomial_quotient(a, b).encoding(),
                    a.encoding() / b.encoding());
        }
      }
    }
  }
}

TEST(Encoding, LargeExponentsNeedBignums) {
  VarContext ctx(10);
  std::vector<unsigned> exps(10, 0);
  exps[9] = 20;  // 29^20 overflows any machine word
  Monomial m(exps, ctx);
  Integer expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 29, 20);
  EXPECT_EQ(m.encoding(), expected);
  EXPECT_EQ(decode(expected, ctx), m);
}
