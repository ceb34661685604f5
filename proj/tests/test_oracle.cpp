#include "gbprime/oracle.hpp"

#include <gtest/gtest.h>

#include "gbprime/buchberger.hpp"
#include "gbprime/parser.hpp"
#include "testutil.hpp"

using namespace gbprime;
using testutil::Rng;
using testutil::with_field_equations;

namespace {

VarContext ctx3(3);

Polynomial P(const std::string& text) {
  return parse_polynomial(text, ctx3);
}

std::vector<Rational> to_point(const BooleanPoint& bits) {
  std::vector<Rational> point;
  for (int b : bits) point.emplace_back(b);
  return point;
}

}  // namespace

TEST(Evaluate, Examples) {
  VarContext ctx1(1);
  EXPECT_EQ(evaluate(parse_polynomial("x0^2 - x0", ctx1), {Rational(1)}), 0);
  EXPECT_EQ(evaluate(P("2*x0*x2 + 4*x1*x2 - 6"),
                     {Rational(1), Rational(1), Rational(1)}),
            0);
  EXPECT_EQ(evaluate(P("7"), {Rational(-5), Rational(2, 3), Rational(0)}), 7);
  EXPECT_EQ(evaluate(P("1/2*x0^2"), {Rational(3), Rational(0), Rational(0)}),
            Rational(9, 2));
}

TEST(Evaluate, ArityMismatchRejected) {
  EXPECT_THROW(evaluate(P("x0 + x1"), {Rational(1)}), ArityMismatchError);
}

TEST(BooleanSolutions, ReferenceSystemHasExactlyOneRoot) {
  std::vector<Polynomial> F{P("(x0+2*x1)*(2*x2) - 6"), P("x2^2 - x2"),
                            P("x1^2 - x1"), P("x0^2 - x0")};
  auto sols = boolean_solutions(F, ctx3);
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0], (BooleanPoint{1, 1, 1}));
}

TEST(BooleanSolutions, InconsistentPairHasNoRoot) {
  VarContext ctx1(1);
  std::vector<Polynomial> F{parse_polynomial("x0", ctx1),
                            parse_polynomial("x0 + 1", ctx1)};
  EXPECT_TRUE(boolean_solutions(F, ctx1).empty());
}

TEST(BooleanSolutions, ZeroPolynomialVanishesEverywhere) {
  auto sols = boolean_solutions({Polynomial()}, ctx3);
  ASSERT_EQ(sols.size(), 8u);
  // Lexicographic point order: (0,0,0), (0,0,1), ..., (1,1,1).
  EXPECT_EQ(sols.front(), (BooleanPoint{0, 0, 0}));
  EXPECT_EQ(sols[1], (BooleanPoint{0, 0, 1}));
  EXPECT_EQ(sols.back(), (BooleanPoint{1, 1, 1}));
}

TEST(BooleanSolutions, TooManyVariablesRejected) {
  VarContext big(21);
  EXPECT_THROW(boolean_solutions({}, big), TooManyVariablesError);
}

TEST(BooleanSolutions, EveryReportedPointIsARoot) {
  Rng rng(2468);
  for (int trial = 0; trial < 25; ++trial) {
    VarContext ctx(static_cast<std::size_t>(rng.uniform(1, 4)));
    auto F = with_field_equations(rng.small_system(ctx, 2), ctx);
    for (const BooleanPoint& bits : boolean_solutions(F, ctx))
      for (const Polynomial& f : F)
        EXPECT_EQ(evaluate(f, to_point(bits)), 0);
  }
}

TEST(BooleanSolutions, RootsSatisfyConservativeBasis) {
  Rng rng(1357);
  for (int trial = 0; trial < 15; ++trial) {
    VarContext ctx(static_cast<std::size_t>(rng.uniform(1, 3)));
    auto F = with_field_equations(rng.small_system(ctx, 2), ctx);
    auto basis = buchberger(F, BuchbergerConfig::conservative()).basis;
    for (const BooleanPoint& bits : boolean_solutions(F, ctx))
      for (const Polynomial& g : basis)
        EXPECT_EQ(evaluate(g, to_point(bits)), 0);
  }
}

TEST(FieldEquationDetection, RequiresEveryVariable) {
  std::vector<Polynomial> F{P("x0^2 - x0"), P("x1^2 - x1"), P("x2^2 - x2")};
  EXPECT_TRUE(has_all_field_equations(F, ctx3));
  F.pop_back();
  EXPECT_FALSE(has_all_field_equations(F, ctx3));
}
