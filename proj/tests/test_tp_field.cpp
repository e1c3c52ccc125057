#include <gtest/gtest.h>

#include "tpa/polynomial.hpp"
#include "tpa/tp_field.hpp"

using namespace tpa;

namespace {

Polynomial var(std::size_t n, std::size_t v) { return Polynomial::variable(n, v); }
Polynomial one(std::size_t n) { return Polynomial::constant(n, 1); }

FieldContext d_dt() { return FieldContext(DerivationSpec::partial(1, 0)); }

FieldContext mixed() {
  DerivationSpec d;
  d.images = {var(2, 0), one(2)};
  return FieldContext(d);
}

Fraction random_fraction(PolySampler& s) {
  Polynomial num = s.next();
  return Fraction(num, s.next_nonzero());
}

}  // namespace

TEST(FieldBracket, Examples) {
  FieldContext ctx = d_dt();
  Polynomial t = var(1, 0);
  Fraction x = Fraction::of(t), y(one(1), t);
  Fraction expected(Polynomial::constant(1, 2), t);
  EXPECT_TRUE(frac_eq(field_bracket(ctx, x, y), expected));
  EXPECT_TRUE(frac_eq(field_bracket(ctx, y, x), Fraction(Polynomial::constant(1, -2), t)));
}

TEST(FieldBracket, SelfBracketVanishes) {
  FieldContext ctx = mixed();
  PolySampler s(2, 2, 3, 11);
  for (int k = 0; k < 25; ++k) {
    Fraction f = random_fraction(s);
    EXPECT_TRUE(frac_is_zero(field_bracket(ctx, f, f)));
  }
}

TEST(FieldBracket, ZeroDerivation) {
  FieldContext ctx(DerivationSpec::zero(2));
  PolySampler s(2, 2, 3, 5);
  for (int k = 0; k < 10; ++k)
    EXPECT_TRUE(frac_is_zero(field_bracket(ctx, random_fraction(s), random_fraction(s))));
  SamplerConfig cfg;
  cfg.samples = 20;
  EXPECT_TRUE(verify_field_axioms(ctx, cfg).holds());
}

TEST(FieldBracket, RestrictsToThePolynomialBracket) {
  FieldContext ctx = mixed();
  PolySampler s(2, 3, 3, 13);
  const DerivationSpec& d = ctx.derivation();
  for (int k = 0; k < 25; ++k) {
    Polynomial p = s.next(), q = s.next();
    Polynomial expected = poly_derive(p, d) * q - p * poly_derive(q, d);
    EXPECT_TRUE(frac_eq(field_bracket(ctx, Fraction::of(p), Fraction::of(q)), Fraction::of(expected)));
  }
}

TEST(FieldBracket, WellDefinedOnRepresentatives) {
  FieldContext ctx = mixed();
  PolySampler s(2, 2, 3, 17);
  for (int k = 0; k < 20; ++k) {
    Fraction f = random_fraction(s), g = random_fraction(s);
    Polynomial m = s.next_nonzero();
    Fraction f2(f.num * m, f.den * m);
    EXPECT_TRUE(frac_eq(field_bracket(ctx, f, g), field_bracket(ctx, f2, g)));
    EXPECT_TRUE(frac_eq(field_bracket(ctx, g, f), field_bracket(ctx, g, f2)));
  }
}

TEST(FieldBracket, CompatibilityOnSamples) {
  FieldContext ctx = mixed();
  PolySampler s(2, 2, 2, 23);
  for (int k = 0; k < 10; ++k) {
    Fraction f = random_fraction(s), g = random_fraction(s), h = random_fraction(s);
    Fraction lhs = mpq_class(2) * (f * field_bracket(ctx, g, h));
    Fraction rhs = field_bracket(ctx, f * g, h) + field_bracket(ctx, g, f * h);
    EXPECT_TRUE(frac_eq(lhs, rhs));
  }
}

TEST(FieldBracket, ZeroDenominatorRejected) {
  EXPECT_THROW(Fraction(one(1), Polynomial(1)), Error);
  Fraction bad;
  bad.num = one(1);
  bad.den = Polynomial(1);
  EXPECT_THROW(frac_eq(bad, Fraction::of(one(1))), Error);
}

TEST(FactoredArithmetic, AgreesWithPlainFractions) {
  FieldContext ctx = mixed();
  PolySampler s(2, 2, 3, 29);
  for (int k = 0; k < 15; ++k) {
    Fraction f = random_fraction(s), g = random_fraction(s), h = random_fraction(s);
    auto F = detail::FactoredFraction::of(f), G = detail::FactoredFraction::of(g), H = detail::FactoredFraction::of(h);
    auto fg = detail::bracket(ctx, F, G, false);
    EXPECT_TRUE(frac_eq(fg.to_fraction(), field_bracket(ctx, f, g)));
    auto fgh = detail::bracket(ctx, fg, H, false);
    EXPECT_TRUE(frac_eq(fgh.to_fraction(), field_bracket(ctx, field_bracket(ctx, f, g), h)));
    auto prod = detail::mul(F, G);
    EXPECT_TRUE(frac_eq(prod.to_fraction(), f * g));
    auto diff = detail::combine({{1, &F}, {-1, &G}, {1, &H}});
    EXPECT_TRUE(frac_eq(diff.to_fraction(), f - g + h));
  }
}

TEST(VerifyFieldAxioms, OneVariableDdt) {
  SamplerConfig cfg;
  cfg.vars = 1;
  FieldReport r = verify_field_axioms(d_dt(), cfg);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.samples, 100u);
  EXPECT_EQ(r.checks, 300u);
  EXPECT_FALSE(r.first_failure);
}

TEST(VerifyFieldAxioms, TwoVariablesDefaults) {
  SamplerConfig cfg;
  cfg.samples = 20;
  EXPECT_TRUE(verify_field_axioms(mixed(), cfg).holds());
}

TEST(VerifyFieldAxioms, FlippedSignFailsJacobi) {
  SamplerConfig cfg;
  cfg.vars = 1;
  cfg.samples = 20;
  cfg.flip_sign = true;
  FieldReport r = verify_field_axioms(d_dt(), cfg);
  EXPECT_FALSE(r.holds());
  ASSERT_TRUE(r.first_by_axiom.count("jacobi"));
  EXPECT_EQ(r.first_by_axiom.at("jacobi").inputs.size(), 3u);
  EXPECT_GT(r.failures_by_axiom.at("jacobi"), 0u);
  ASSERT_TRUE(r.first_failure);
}

TEST(VerifyFieldAxioms, DeterministicPerSeed) {
  SamplerConfig cfg;
  cfg.samples = 10;
  cfg.flip_sign = true;
  FieldReport a = verify_field_axioms(mixed(), cfg), b = verify_field_axioms(mixed(), cfg);
  EXPECT_EQ(a.failures_by_axiom, b.failures_by_axiom);
  ASSERT_TRUE(a.first_failure && b.first_failure);
  EXPECT_EQ(a.first_failure->inputs, b.first_failure->inputs);
}

TEST(PolySampler, Limits) {
  EXPECT_THROW(PolySampler(0, 2, 3, 1), Error);
  EXPECT_THROW(PolySampler(5, 2, 3, 1), Error);
  EXPECT_THROW(PolySampler(2, 2, 0, 1), Error);
  PolySampler s(2, 3, 3, 1);
  for (int k = 0; k < 20; ++k) {
    Polynomial p = s.next();
    EXPECT_LE(p.degree(), 3u);
    for (const auto& [m, c] : p.terms()) EXPECT_LE(abs(c), 3);
  }
}

TEST(FieldContext, MismatchedImagesRejected) {
  DerivationSpec d;
  d.images = {one(2)};
  EXPECT_THROW(FieldContext{d}, Error);
}
