#include "generators.hpp"

#include "glp/period_group.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

using namespace glp;

namespace {

PeriodAtom random_atom(gen::Rng& rng) {
  switch (rng.uniform(0, 5)) {
    case 0: return PeriodAtom::bw(rng.coin() ? "Pi" : "Sigma", rng.coin() ? 1 : -1);
    case 1: return PeriodAtom::gauss(rng.coin() ? "omega" : "chi");
    case 2: return PeriodAtom::arch(Rational(rng.uniform(-4, 4)), "Pi x Sigma");
    case 3: return PeriodAtom::lval(Rational(2 * rng.uniform(-4, 4) + 1, 2), "Pi x Sigma");
    case 4: return PeriodAtom::i();
    default: return PeriodAtom::delta("M");
  }
}

}  // namespace

TEST(PeriodGroup, InverseCancels) {
  auto x = atom(PeriodAtom::bw("Pi", 1), 3) * atom(PeriodAtom::gauss("omega"), -2);
  EXPECT_TRUE((x * x.inv()).is_identity());
  EXPECT_TRUE((x / x).is_identity());
}

TEST(PeriodGroup, ISquaredIsRational) {
  EXPECT_TRUE(i_power(2).is_identity());
  EXPECT_TRUE((i_power(1) * i_power(1)).is_identity());
  EXPECT_EQ(i_power(-1), i_power(1));
  EXPECT_EQ(i_power(7).i_parity(), 1);
  EXPECT_EQ(i_power(1).pow(3), i_power(1));
}

TEST(PeriodGroup, ZeroExponentsVanish) {
  FormalPeriod f;
  f.add(PeriodAtom::delta("M"), 2).add(PeriodAtom::delta("M"), -2);
  EXPECT_TRUE(f.is_identity());
  EXPECT_TRUE(atom(PeriodAtom::delta("M"), 0).is_identity());
}

TEST(PeriodGroup, ProductIsOrderIndependent) {
  gen::Rng rng(51);
  for (int k = 0; k < 200; ++k) {
    std::vector<std::pair<PeriodAtom, int>> seq;
    const int len = rng.uniform(0, 12);
    for (int j = 0; j < len; ++j) seq.emplace_back(random_atom(rng), rng.uniform(-3, 3));
    FormalPeriod a, b;
    for (const auto& [x, e] : seq) a *= atom(x, e);
    std::shuffle(seq.begin(), seq.end(), std::mt19937_64(k));
    for (const auto& [x, e] : seq) b *= atom(x, e);
    EXPECT_EQ(a, b);
  }
}

TEST(PeriodGroup, PowersCompose) {
  gen::Rng rng(52);
  for (int k = 0; k < 100; ++k) {
    FormalPeriod f;
    for (int j = 0; j < 5; ++j) f *= atom(random_atom(rng), rng.uniform(-2, 2));
    const int p = rng.uniform(-3, 3), q = rng.uniform(-3, 3);
    EXPECT_EQ(f.pow(p) * f.pow(q), f.pow(p + q));
    EXPECT_EQ(f.pow(p).pow(q), f.pow(p * q));
  }
}

TEST(PeriodGroup, AtomChecks) {
  EXPECT_NO_THROW(check_atom(PeriodAtom::bw("Pi", 1)));
  EXPECT_THROW(check_atom(PeriodAtom::bw("Pi", 0)), SchemaError);
  EXPECT_THROW(check_atom(PeriodAtom::gauss("")), SchemaError);
  EXPECT_THROW(check_atom(PeriodAtom::arch(Rational(1, 3), "P")), SchemaError);
  EXPECT_THROW(check_atom(PeriodAtom::dci("M", 0)), SchemaError);
  EXPECT_NO_THROW(check_atom(PeriodAtom::lval(Rational(5, 2), "P")));
}

TEST(PeriodGroup, Rendering) {
  auto f = atom(PeriodAtom::bw("Pi", -1)) * atom(PeriodAtom::gauss("omega_Pi"), 5) * i_power(1);
  EXPECT_EQ(to_string(f), "p(Pi,-) * G(omega_Pi)^5 * i");
  EXPECT_EQ(to_string(FormalPeriod{}), "1");
  EXPECT_EQ(to_string(PeriodAtom::arch(Rational(3, 2), "Pi x Sigma")), "p(3/2,Pi x Sigma)");
  EXPECT_EQ(to_string(PeriodAtom::dci("M", 2)), "c_2(M)");
}

TEST(PeriodGroup, KindNamesRoundTrip) {
  for (auto k : {AtomKind::BW, AtomKind::Gauss, AtomKind::ArchZ, AtomKind::LVal, AtomKind::Delta, AtomKind::DC,
                 AtomKind::DCi, AtomKind::TwoPiI, AtomKind::I})
    EXPECT_EQ(parse_kind(kind_name(k)), k);
}

TEST(PeriodGroup, CharacterMonomials) {
  auto omega = CharMonomial::base("omega");
  auto eta = CharMonomial::base("eta", true);
  EXPECT_TRUE((omega * omega.inv()).trivial());
  EXPECT_TRUE((eta * eta).trivial());
  EXPECT_EQ((omega.pow(2) * CharMonomial::norm(3)).gauss_label(), "omega^2");
  EXPECT_EQ((omega * CharMonomial::norm()).label(), "omega*|.|");
  EXPECT_TRUE(gauss(CharMonomial::norm(2)).is_identity());
  EXPECT_EQ(gauss(omega, 3), atom(PeriodAtom::gauss("omega"), 3));
}

TEST(PeriodGroup, RelationQuotient) {
  Relation r{"r", "test", atom(PeriodAtom::delta("M")), atom(PeriodAtom::delta("N"), 2)};
  EXPECT_EQ(r.quotient(), atom(PeriodAtom::delta("M")) * atom(PeriodAtom::delta("N"), -2));
}
