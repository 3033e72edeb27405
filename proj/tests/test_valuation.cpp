#include <gtest/gtest.h>

#include "hahnfield/error.hpp"
#include "hahnfield/parser.hpp"
#include "hahnfield/sampling.hpp"
#include "hahnfield/valuation.hpp"
#include "support/oracles.hpp"

using hahn::ArchClass;
using hahn::Carrier;
using hahn::ChainOrder;
using hahn::FieldClass;
using hahn::GroupElement;
using hahn::Scalar;
using hahn::Series;
using hahn::ValuationClass;

namespace {

Carrier rat_carrier() { return {FieldClass::Rat, hahn::make_group(ChainOrder::finite(1), ArchClass::Rat)}; }
Series S(const std::string& src) { return hahn::parse_series(src, rat_carrier()); }
GroupElement G(const std::string& src) { return hahn::parse_group_element(src, rat_carrier().group); }

// |x| against the integers 1..100 and their reciprocals, via the oracle order.
ValuationClass archimedean_class(const Series& x) {
  if (x.is_zero()) return ValuationClass::Zero;
  oracle::Terms abs = oracle::terms(x);
  if (oracle::sign(abs) < 0) abs = oracle::negate(abs);
  bool below_all_reciprocals = true;
  bool above_all_integers = true;
  for (long n = 1; n <= 100; ++n) {
    below_all_reciprocals = below_all_reciprocals &&
                            oracle::compare(abs, oracle::constant(Scalar(mpq_class(1, n)))) < 0;
    above_all_integers = above_all_integers && oracle::compare(abs, oracle::constant(Scalar(n))) > 0;
  }
  if (below_all_reciprocals) return ValuationClass::Infinitesimal;
  if (above_all_integers) return ValuationClass::Infinite;
  return ValuationClass::FiniteUnit;
}

}  // namespace

TEST(Valuation, Classify) {
  EXPECT_EQ(hahn::classify(S("t")), ValuationClass::Infinitesimal);
  EXPECT_EQ(hahn::classify(S("7/2")), ValuationClass::FiniteUnit);
  EXPECT_EQ(hahn::classify(S("t^{-1} + 5")), ValuationClass::Infinite);
  EXPECT_EQ(hahn::classify(S("0")), ValuationClass::Zero);
}

TEST(Valuation, ClassifyAgreesWithArchimedeanDefinition) {
  hahn::Sampler rng(31);
  const Carrier c{FieldClass::Root2, hahn::make_group(ChainOrder::rationals(), ArchClass::Rat)};
  for (int i = 0; i < 300; ++i) {
    const Series x = rng.series(c);
    EXPECT_EQ(hahn::classify(x), archimedean_class(x)) << hahn::to_string(x);
  }
}

TEST(Valuation, Residue) {
  EXPECT_EQ(hahn::residue(S("3 + t")), Scalar(3));
  EXPECT_EQ(hahn::residue(S("t")), Scalar(0));
  EXPECT_EQ(hahn::residue(S("(1 + t)*(2 - t)")), Scalar(2));
  EXPECT_THROW(hahn::residue(S("t^{-1}")), hahn::MathError);
}

TEST(Valuation, ResidueIsHomomorphismAndClassProducts) {
  hahn::Sampler rng(32);
  const Carrier c{FieldClass::Rat, hahn::make_group(ChainOrder::integers(), ArchClass::Rat)};
  int pairs = 0;
  for (int i = 0; i < 3000 && pairs < 300; ++i) {
    const Series x = rng.series(c);
    const Series y = rng.series(c);
    const ValuationClass cx = hahn::classify(x);
    const ValuationClass cy = hahn::classify(y);
    if (cx == ValuationClass::Infinitesimal && cy == ValuationClass::FiniteUnit) {
      EXPECT_EQ(hahn::classify(x * y), ValuationClass::Infinitesimal);
    }
    if (cx == ValuationClass::Infinite && cy == ValuationClass::Infinite) {
      EXPECT_EQ(hahn::classify(x * y), ValuationClass::Infinite);
    }
    if (cx == ValuationClass::Infinite || cy == ValuationClass::Infinite) continue;
    ++pairs;
    EXPECT_EQ(hahn::residue(x + y), hahn::residue(x) + hahn::residue(y));
    EXPECT_EQ(hahn::residue(x * y), hahn::residue(x) * hahn::residue(y));
  }
  EXPECT_EQ(pairs, 300);
}

TEST(Valuation, DecomposeAdditive) {
  const auto d = hahn::decompose_additive(S("3*t^{-1/2} + 2 - 5*t^{2/3}"));
  EXPECT_EQ(d.infinite_part, S("3*t^{-1/2}"));
  EXPECT_EQ(d.constant_part, Scalar(2));
  EXPECT_EQ(d.infinitesimal_part, S("-5*t^{2/3}"));
  const auto zero = hahn::decompose_additive(S("0"));
  EXPECT_TRUE(zero.infinite_part.is_zero() && zero.constant_part.is_zero() && zero.infinitesimal_part.is_zero());
  const auto inf = hahn::decompose_additive(S("t^{-1}"));
  EXPECT_EQ(inf.infinite_part, S("t^{-1}"));
  EXPECT_TRUE(inf.constant_part.is_zero() && inf.infinitesimal_part.is_zero());
}

TEST(Valuation, DecomposeMultiplicative) {
  const auto d = hahn::decompose_multiplicative(S("2*t^{-1} + 6"));
  EXPECT_EQ(d.exponent, G("-1"));
  EXPECT_EQ(d.unit_coeff, Scalar(2));
  EXPECT_EQ(d.one_unit, S("1 + 3*t"));
  const auto five = hahn::decompose_multiplicative(S("5"));
  EXPECT_EQ(five.exponent, G("0"));
  EXPECT_EQ(five.unit_coeff, Scalar(5));
  EXPECT_EQ(five.one_unit, S("1"));
  const auto cube = hahn::decompose_multiplicative(S("t^{3}"));
  EXPECT_EQ(cube.exponent, G("3"));
  EXPECT_EQ(cube.unit_coeff, Scalar(1));
  EXPECT_EQ(cube.one_unit, S("1"));
  EXPECT_THROW(hahn::decompose_multiplicative(S("-1 + t")), hahn::MathError);
  EXPECT_THROW(hahn::decompose_multiplicative(S("0")), hahn::MathError);
}

TEST(Valuation, DecompositionProperties) {
  hahn::Sampler rng(33);
  const Carrier c{FieldClass::Root2, hahn::make_group(ChainOrder::rationals(), ArchClass::RatRoot2)};
  for (int i = 0; i < 300; ++i) {
    const Series x = rng.series(c, 5);
    const auto d = hahn::decompose_additive(x);
    EXPECT_EQ(d.recompose(), x);
    for (const auto& t : d.infinite_part.terms()) EXPECT_LT(t.exponent.sign(), 0);
    for (const auto& t : d.infinitesimal_part.terms()) EXPECT_GT(t.exponent.sign(), 0);
    if (!d.infinite_part.is_zero()) EXPECT_EQ(hahn::classify(d.infinite_part), ValuationClass::Infinite);

    const Series p = rng.positive_series(c, 5);
    const auto m = hahn::decompose_multiplicative(p);
    EXPECT_EQ(m.recompose(), p);
    EXPECT_GT(m.unit_coeff, Scalar(0));
    const auto v1 = hahn::valuation(m.one_unit - Series::constant(c, 1));
    if (v1) EXPECT_GT(v1->sign(), 0);

    const GroupElement g1 = rng.element(c.group);
    const GroupElement g2 = rng.element(c.group);
    // Larger exponents give smaller monomials.
    if (g1 < g2) EXPECT_GT(Series::monomial(c, g1, 1), Series::monomial(c, g2, 1));
  }
}
