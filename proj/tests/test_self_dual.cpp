#include "generators.hpp"

#include "glp/self_dual.hpp"

#include <gtest/gtest.h>

using namespace glp;

namespace {

InfinityType even_type(int half, int w, int base) {
  InfinityType t{2 * half, {}, w, 0};
  for (int i = half - 1; i >= 0; --i) t.kappa.push_back(gen::Rng::lift(base, w) + 2 * i * (base - 1));
  validate(t);
  return t;
}

}  // namespace

TEST(SelfDual, OrthogonalBranch) {
  for (int w : {-2, 0, 2, 4}) {
    auto pi = even_type(2, w, 4);
    auto c = classify(pi, ArchCharacter{mod2(w - 1), Rational(w)});
    EXPECT_EQ(c.verdict, SelfDuality::Orthogonal);
    EXPECT_EQ(c.hom_sym2, 2);
    EXPECT_EQ(c.hom_wedge2, 0);
    EXPECT_EQ(c.chi_sign, -1);
  }
}

TEST(SelfDual, SymplecticBranch) {
  for (int w : {-3, -1, 0, 1, 2}) {
    auto pi = even_type(3, w, 3);
    auto c = classify(pi, ArchCharacter{mod2(w), Rational(w)});
    EXPECT_EQ(c.verdict, SelfDuality::Symplectic);
    EXPECT_EQ(c.hom_sym2, 0);
    EXPECT_EQ(c.hom_wedge2, 3);
    EXPECT_EQ(c.chi_sign, 1);
  }
}

TEST(SelfDual, WrongTwistIsNeither) {
  auto pi = even_type(2, 0, 4);
  auto c = classify(pi, ArchCharacter{0, Rational(1)});
  EXPECT_EQ(c.verdict, SelfDuality::Neither);
  EXPECT_EQ(c.hom_sym2, 0);
  EXPECT_EQ(c.hom_wedge2, 0);
  EXPECT_STREQ(to_string(c.verdict), "neither");
}

TEST(SelfDual, CriterionMatchesCharacterSign) {
  gen::Rng rng(71);
  for (int k = 0; k < 200; ++k) {
    auto pi = gen::infinity_type(rng, 2 * rng.uniform(1, 4));
    const bool orth = rng.coin();
    auto c = classify(pi, self_dual_character(pi, orth));
    EXPECT_EQ(c.verdict == SelfDuality::Orthogonal, c.chi_sign == -1) << describe(pi);
    EXPECT_EQ(c.verdict, orth ? SelfDuality::Orthogonal : SelfDuality::Symplectic);
  }
}

TEST(SelfDual, AsaiTypes) {
  auto a = asai(4, 0, 2, 0);
  EXPECT_EQ(a.kappa_hi, 5);
  EXPECT_EQ(a.kappa_lo, 3);
  EXPECT_EQ(a.w, 1);
  EXPECT_TRUE(a.valid_type);
  EXPECT_EQ(to_arch_rep(a.type()), a.parameter);
  EXPECT_EQ(a.classification.verdict, SelfDuality::Orthogonal);
  EXPECT_EQ(a.gauss_label, "omega_F/Q");
}

TEST(SelfDual, AsaiEqualWeightsInvalid) {
  auto a = asai(6, 0, 6, 0);
  EXPECT_EQ(a.kappa_lo, 1);
  EXPECT_FALSE(a.valid_type);
  EXPECT_FALSE(a.regular);
}

TEST(SelfDual, AsaiRegularity) {
  EXPECT_TRUE(asai(6, 0, 4, 0).regular);
  EXPECT_FALSE(asai(6, 0, 2, 0).regular);
  EXPECT_TRUE(asai(5, 1, 4, 0).regular);
  EXPECT_TRUE(asai(5, 1, 3, 1).regular);
  EXPECT_FALSE(asai(5, 1, 2, 0).regular);
  EXPECT_THROW(asai(5, 0, 2, 0), DomainError);
}

TEST(SelfDual, AsaiFormula) {
  gen::Rng rng(72);
  for (int k = 0; k < 100; ++k) {
    const int w1 = rng.uniform(-4, 4), w2 = rng.uniform(-4, 4);
    const int k1 = gen::Rng::lift(rng.uniform(2, 16), w1), k2 = gen::Rng::lift(rng.uniform(2, 16), w2);
    auto a = asai(k1, w1, k2, w2);
    EXPECT_EQ(a.kappa_hi, k1 + k2 - 1);
    EXPECT_EQ(a.kappa_lo, std::abs(k1 - k2) + 1);
    EXPECT_EQ(a.parameter.dim(), 4);
    EXPECT_EQ(a.classification.chi_sign, -1);
    if (a.valid_type) {
      EXPECT_EQ(to_arch_rep(a.type()), a.parameter);
    }
  }
}
