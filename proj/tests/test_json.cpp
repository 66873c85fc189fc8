#include "generators.hpp"

#include "glp/glp.hpp"
#include "glp/io/json.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace glp;
using glp::io::json;

namespace {

std::string schema_path(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST(Json, InfinityTypeRoundTrip) {
  gen::Rng rng(81);
  for (int k = 0; k < 200; ++k) {
    auto t = gen::infinity_type(rng, rng.uniform(1, 8));
    EXPECT_EQ(io::infinity_type_from_json(io::to_json(t)), t);
    EXPECT_EQ(io::infinity_type_from_json(json::parse(io::to_json(t).dump())), t);
  }
}

TEST(Json, ArchRepRoundTrip) {
  gen::Rng rng(82);
  for (int k = 0; k < 200; ++k) {
    auto a = gen::arch_rep(rng);
    EXPECT_EQ(io::arch_rep_from_json(json::parse(io::to_json(a).dump())), a);
  }
}

TEST(Json, CharacterDefaultsAndFractions) {
  auto c = io::character_from_json(json::parse(R"({"sign":1,"twist":"-3/2"})"));
  EXPECT_EQ(c, (ArchCharacter{1, Rational(-3, 2)}));
  EXPECT_EQ(io::character_from_json(json::parse(R"({"sign":0})")), (ArchCharacter{0, Rational(0)}));
  EXPECT_EQ(io::character_from_json(json::parse(R"({"sign":0,"twist":2})")).twist, Rational(2));
}

TEST(Json, MotiveRoundTrip) {
  MotiveShape M{"M", 5, 0, {7, 3}, 3, 2};
  EXPECT_EQ(io::motive_from_json(io::to_json(M)), M);
}

TEST(Json, PeriodRoundTrip) {
  FormalPeriod f = atom(PeriodAtom::bw("Pi", -1), 2) * atom(PeriodAtom::gauss("omega_Pi"), -5) *
                   atom(PeriodAtom::arch(Rational(3), "Pi x Sigma")) *
                   atom(PeriodAtom::lval(Rational(-1, 2), "Pi x Sigma")) * atom(PeriodAtom::delta("M")) *
                   atom(PeriodAtom::dc("M^v", 1)) * atom(PeriodAtom::dci("M", 2), 3) * atom(PeriodAtom::two_pi_i(), 6) *
                   i_power(1);
  EXPECT_EQ(io::period_from_json(json::parse(io::to_json(f).dump())), f);
}

TEST(Json, ScriptRoundTripPreservesResidual) {
  auto r = check_main1_step(6, 2, 0, Rational(1));
  auto back = io::script_from_json(json::parse(io::to_json(r.script).dump()));
  EXPECT_TRUE(replay(back).trivial());
  EXPECT_EQ(back.steps.size(), r.script.steps.size());

  auto m = check_motivic_dual(6);
  EXPECT_TRUE(replay(io::script_from_json(io::to_json(m.script))).trivial());
}

TEST(Json, ScriptWithDatabase) {
  auto db = io::relation_db_from_json(json::parse(R"([
    {"name":"pair","citation":"c",
     "lhs":[[{"kind":"Gauss","char":"chi"},1],[{"kind":"Gauss","char":"chi^-1"},1]],"rhs":[]}])"));
  auto s = io::script_from_json(json::parse(R"({"steps":[{"relation":"pair","bindings":{"chi":"eta"},"exponent":2}]})"));
  auto r = replay(s, db);
  EXPECT_EQ(r.value.exponent(PeriodAtom::gauss("eta")), 2);
  EXPECT_EQ(r.value.exponent(PeriodAtom::gauss("chi^-1")), 2);
}

TEST(Json, SignSpellings) {
  for (const char* s : {R"({"kind":"BW","label":"Pi","sign":"+"})", R"({"kind":"BW","label":"Pi","sign":1})",
                        R"({"kind":"BW","label":"Pi","sign":"+1"})"})
    EXPECT_EQ(io::atom_from_json(json::parse(s)), PeriodAtom::bw("Pi", 1));
  EXPECT_EQ(io::atom_from_json(json::parse(R"({"kind":"DC","label":"M","sign":"-"})")), PeriodAtom::dc("M", -1));
}

TEST(Json, SchemaErrorPaths) {
  EXPECT_EQ(schema_path([] { io::infinity_type_from_json(json::parse(R"({"n":2})"), "pi"); }), "pi.w");
  EXPECT_EQ(schema_path([] { io::infinity_type_from_json(json::parse(R"({"n":"2","w":0})"), "pi"); }), "pi.n");
  EXPECT_EQ(schema_path([] { io::infinity_type_from_json(json::parse(R"({"n":2,"w":0,"kappa":[3,"x"]})")); }),
            "kappa[1]");
  EXPECT_EQ(schema_path([] { io::character_from_json(json::parse(R"({"sign":2})"), "chi"); }), "chi.sign");
  EXPECT_EQ(schema_path([] { io::character_from_json(json::parse(R"({"sign":0,"twist":"1/x"})"), "chi"); }),
            "chi.twist");
  EXPECT_EQ(schema_path([] { io::atom_from_json(json::parse(R"({"kind":"Nope"})"), "a"); }), "a.kind");
  EXPECT_EQ(schema_path([] { io::atom_from_json(json::parse(R"({"kind":"BW","label":"Pi","sign":0})"), "a"); }),
            "a.sign");
  EXPECT_EQ(schema_path([] { io::atom_from_json(json::parse(R"({"kind":"ArchZ","m":"1/3","pair":"P"})"), "a"); }),
            "a");
  EXPECT_EQ(schema_path([] { io::period_from_json(json::parse(R"([[{"kind":"I"}]])"), "lhs"); }), "lhs[0]");
  EXPECT_EQ(schema_path([] { io::relation_from_json(json::parse(R"({"name":"x","citation":"","lhs":[],"rhs":[]})")); }),
            "citation");
  EXPECT_EQ(schema_path([] { io::script_from_json(json::parse(R"({"steps":[{"exponent":1}]})")); }),
            "steps[0].relation");
  EXPECT_EQ(schema_path([] { io::script_from_json(json::parse(R"([])")); }), "$");
  EXPECT_EQ(schema_path([] { io::arch_rep_from_json(json::parse(R"({"discretes":[{"twist":"1/2"}]})")); }),
            "discretes[0].kappa");
}

TEST(Json, ResidualReport) {
  Residual r;
  auto j = io::to_json(r);
  EXPECT_TRUE(j["trivial"].get<bool>());
  EXPECT_TRUE(j["offending"].is_null());
  r.value = atom(PeriodAtom::gauss("omega_Pi"), -1);
  j = io::to_json(r);
  EXPECT_FALSE(j["trivial"].get<bool>());
  EXPECT_EQ(j["offending"], "G(omega_Pi)");
  EXPECT_EQ(j["rendered"], "G(omega_Pi)^-1");
}
