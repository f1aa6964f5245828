#include <gtest/gtest.h>

#include "vwreath/autgen.hpp"
#include "vwreath/error.hpp"
#include "vwreath/oracle.hpp"
#include "vwreath/random.hpp"

using namespace vwreath;

namespace {

Context untwisted(const char* group) { return make_context(parse_group(group)); }

std::vector<DyadicPoint> all_points(std::size_t max_stem) {
  std::vector<DyadicPoint> out{DyadicPoint()};
  std::vector<Word> frontier{Word()};
  for (std::size_t n = 0; n < max_stem; ++n) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      next.push_back(w.child(0));
      next.push_back(w.child(1));
      out.push_back(canonicalize(w.child(1)));
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<KElement> kelements(const Context& c, std::uint64_t seed, int n = 10) {
  Rng rng = case_rng(seed, 0);
  std::vector<KElement> out;
  for (int i = 0; i < n; ++i) out.push_back(random_kelement(rng, c, 3, 2));
  return out;
}

FactorOptions options(const Context& c, std::uint64_t seed) {
  FactorOptions o;
  o.residual_samples = kelements(c, seed);
  return o;
}

const VElement x0 = gens::x0();

}  // namespace

TEST(Autgen, SCocycleExamples) {
  const Context c = untwisted("Z4");
  EXPECT_TRUE(s_cocycle(c, 2, identity_v()).is_identity());
  const KElement s = s_cocycle(c, 2, x0);
  EXPECT_EQ(s(parse_point("P:")), 2);
  EXPECT_EQ(s(parse_point("P:01")), 0);
  EXPECT_EQ(s(parse_point("P:1")), 2);
  EXPECT_EQ(to_string(s), "base{C:00=2, C:1=2} exc{}");
  EXPECT_TRUE(s_cocycle(c, 0, x0).is_identity());
  EXPECT_THROW(s_cocycle(untwisted("S3"), 1, x0), PreconditionError);
}

// Regression value, checked against brute-force p_v over all stems of length <= 8.
TEST(Autgen, S0CocycleExamples) {
  const Context c = untwisted("Z2");
  EXPECT_TRUE(s0_cocycle(c, 1, identity_v()).is_identity());
  EXPECT_TRUE(s0_cocycle(c, 0, x0).is_identity());
  const KElement s0 = s0_cocycle(c, 1, x0);
  EXPECT_EQ(to_string(s0), "base{} exc{P:=1, P:01=1}");
  for (const DyadicPoint& x : all_points(8)) {
    EXPECT_EQ(s0(x), c->group()->pow(1, oracle::s0_exponent(x0, x))) << to_string(x);
  }
}

TEST(Autgen, CocyclesAgreeWithOracle) {
  const Context c = untwisted("Z4");
  Rng rng = case_rng(1, 0);
  const auto points = all_points(6);
  for (int i = 0; i < 30; ++i) {
    const VElement v = random_velement(rng, 4);
    const KElement s = s_cocycle(c, 1, v);
    const KElement s0 = s0_cocycle(c, 1, v);
    EXPECT_TRUE(s0.is_exception_only());
    for (const DyadicPoint& x : points) {
      EXPECT_EQ(s(x), c->group()->pow(1, oracle::s_exponent(v, x)));
      EXPECT_EQ(s0(x), c->group()->pow(1, oracle::s0_exponent(v, x)));
    }
  }
}

TEST(Autgen, CocycleIdentities) {
  const Context c = untwisted("Z4");
  Rng rng = case_rng(2, 0);
  for (int i = 0; i < 100; ++i) {
    const VElement v = random_velement(rng, 5);
    const VElement w = random_velement(rng, 5);
    EXPECT_EQ(s_cocycle(c, 2, mul(v, w)), mul(s_cocycle(c, 2, v), act(v, s_cocycle(c, 2, w))));
    EXPECT_EQ(s0_cocycle(c, 2, mul(v, w)), mul(s0_cocycle(c, 2, v), act(v, s0_cocycle(c, 2, w))));
  }
}

TEST(Autgen, BuildExamples) {
  const Context c = untwisted("Z4");
  const Model m = wreath_model(c);
  Rng rng = case_rng(3, 0);
  const Isomorphism id = build(c, {});
  const GroupHom inv4 = parse_hom("inv", c->group(), c->group());
  const Isomorphism a2i = build(c, {a2(inv4)});
  const Isomorphism a3i = build(c, {a3(2)});
  for (int i = 0; i < 20; ++i) {
    const GElement g = random_gelement(rng, c, 3);
    EXPECT_EQ(id(g), g);
    const DyadicPoint x = random_point(rng, 4);
    const GElement pm{KElement::point_mass(c, x, 1), g.v};
    EXPECT_EQ(a2i(pm), (GElement{KElement::point_mass(c, x, 3), g.v}));
    EXPECT_EQ(a3i(m->from_v(g.v)), (GElement{s_cocycle(c, 2, g.v), g.v}));
  }
}

TEST(Autgen, BuildRejectsBadInput) {
  const Context c = untwisted("S3");
  EXPECT_THROW(build(c, {a3(1)}), PreconditionError);
  EXPECT_THROW(build(c, {a2(identity_hom(c->group())), a2(identity_hom(c->group()))}), PreconditionError);
  EXPECT_THROW(build(c, {a4(KElement::constant(c, 1))}), PreconditionError);
  const Group z4 = cyclic_group(4);
  EXPECT_THROW(build(make_context(z4, parse_hom("inv", z4, z4)), {}), PreconditionError);
}

TEST(Autgen, BuiltAutomorphismsValidate) {
  Rng rng = case_rng(4, 0);
  for (const char* grp : {"Z2", "Z4", "S3"}) {
    const Context c = untwisted(grp);
    const auto facs = parse_factors(grp == std::string("S3")
                                        ? "A1({0->11,10->0,11->10}) * A2(ad((123))) * A4(base{C:1=(12)} exc{})"
                                        : "A1({0->1,1->0}) * A3(1) * A6(id)",
                                    c);
    const Isomorphism theta = build(c, facs);
    std::vector<GElement> s;
    for (int i = 0; i < 40; ++i) s.push_back(random_gelement(rng, c, 3));
    EXPECT_TRUE(validate(theta, s).ok()) << grp;
  }
}

TEST(Autgen, FactorRecoversSingleFactors) {
  const Context c = untwisted("Z4");
  const GroupHom inv4 = parse_hom("inv", c->group(), c->group());
  const Factorization f = factor(build(c, {a2(inv4)}), options(c, 5));
  EXPECT_EQ(f.beta, inv4);
  EXPECT_TRUE(f.phi.is_identity());
  EXPECT_EQ(f.z, 0);
  EXPECT_TRUE(f.h.is_identity());
  EXPECT_EQ(f.psi, trivial_hom(c->group(), c->group()));
  EXPECT_TRUE(f.residual_report.ok());
  ASSERT_EQ(f.factors().size(), 1u);
  EXPECT_EQ(f.factors()[0].tag, AutTag::A2);

  const Factorization g = factor(build(c, {a3(2), a2(inv4)}), options(c, 6));
  EXPECT_EQ(g.z, 2);
  EXPECT_EQ(g.beta, inv4);
  EXPECT_TRUE(g.residual_report.ok());
}

TEST(Autgen, FactorRecoversHModuloConstants) {
  const Context c = untwisted("S3");
  const Group& g = c->group();
  const KElement h = parse_kelement("base{C:01=(123),C:10=(12)} exc{P:11=(13)}", c);
  const Factorization f = factor(build(c, {a4(h)}), options(c, 7));
  EXPECT_TRUE(f.residual_report.ok());
  const KElement normalized = mul(h, KElement::constant(c, g->inv(h(DyadicPoint()))));
  EXPECT_EQ(f.h, normalized);
}

TEST(Autgen, FactorRoundTripsComposites) {
  Rng rng = case_rng(8, 0);
  const Context c = untwisted("Z4");
  for (int i = 0; i < 5; ++i) {
    const VElement phi = random_velement(rng, 3);
    const int z = uniform_int(rng, 0, 3);
    const GroupHom psi = parse_hom("x2", c->group(), c->group());
    const std::vector<AutFactor> in{a1(phi), a3(z), a6(psi)};
    const Factorization f = factor(build(c, in), options(c, 9 + static_cast<std::uint64_t>(i)));
    EXPECT_EQ(f.phi, phi);
    EXPECT_EQ(f.z, z);
    EXPECT_EQ(f.psi, psi);
    EXPECT_TRUE(f.residual_report.ok());
  }
}

TEST(Autgen, SectionsAreSplit) {
  const Context c = untwisted("Z4");
  for (int z = 0; z < 4; ++z) EXPECT_EQ(factor(build(c, {a3(z)}), options(c, 20)).z, z);
  const VElement phi = gens::c();
  EXPECT_EQ(extract_v_phi(build(c, {a1(phi)})), phi);
}

TEST(Autgen, CocycleFactorize) {
  const Context c = untwisted("Z4");
  const auto probes = standard_probes(3);
  const CocycleSplit plain = cocycle_factorize(c, [&](const VElement& v) { return s_cocycle(c, 2, v); }, probes);
  EXPECT_EQ(plain.z, 2);
  for (const auto& [x, f] : plain.f) EXPECT_EQ(f, 0) << to_string(x);

  const KElement f0 = parse_kelement("base{} exc{P:01=1,P:11=3}", c);
  auto coboundary = [&](const VElement& v) { return mul(f0, inv(act(v, f0))); };
  const CocycleSplit cob = cocycle_factorize(c, coboundary, probes);
  EXPECT_EQ(cob.z, 0);
  for (const auto& [x, f] : cob.f) EXPECT_EQ(f, f0(x)) << to_string(x);

  const CocycleSplit both =
      cocycle_factorize(c, [&](const VElement& v) { return mul(s_cocycle(c, 1, v), coboundary(v)); }, probes);
  EXPECT_EQ(both.z, 1);
  for (const auto& [x, f] : both.f) EXPECT_EQ(f, f0(x)) << to_string(x);
}

TEST(Autgen, A5Check) {
  const Context c = untwisted("Z4");
  const auto samples = kelements(c, 30);
  const auto probes = standard_probes(3);
  EXPECT_TRUE(a5_check(build(c, {}), samples, probes).ok());
  EXPECT_FALSE(a5_check(build(c, {a2(parse_hom("inv", c->group(), c->group()))}), samples, probes).ok());
  EXPECT_FALSE(a5_check(build(c, {a3(1)}), samples, probes).ok());
}

// A residual passing the check acts as a -> a·eta(a) with eta central.
TEST(Autgen, ResidualHasEtaForm) {
  const Context c = untwisted("Z2");
  const Isomorphism theta = build(c, {a1(x0), a3(1), a6(identity_hom(c->group()))});
  const Factorization f = factor(theta, options(c, 31));
  ASSERT_TRUE(f.residual_report.ok());
  const Model& m = f.residual.source;
  for (const KElement& a : kelements(c, 32, 20)) {
    const GElement image = f.residual(m->from_k(a));
    ASSERT_TRUE(in_k(image));
    const KElement eta = mul(inv(a), image.k);
    EXPECT_TRUE(eta.is_constant() || eta.is_identity());
  }
}

TEST(Autgen, SerializationRoundTrips) {
  const Context c = untwisted("S3");
  const FiniteGroup& g = *c->group();
  const auto facs = parse_factors("A1({0->1,1->0}) * A2(ad((12))) * A4(base{C:1=(123)} exc{})", c);
  ASSERT_EQ(facs.size(), 3u);
  const std::string text = to_string(facs, g);
  EXPECT_EQ(to_string(parse_factors(text, c), g), text);
  EXPECT_TRUE(parse_factors("id", c).empty());
  EXPECT_THROW(parse_factors("A7(1)", c), ParseError);
}
