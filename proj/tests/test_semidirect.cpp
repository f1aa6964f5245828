#include <gtest/gtest.h>

#include "vwreath/random.hpp"
#include "vwreath/semidirect.hpp"

using namespace vwreath;

namespace {

Context ctx_of(const char* group, const char* twist) {
  const Group g = parse_group(group);
  return make_context(g, parse_hom(twist, g, g));
}

std::vector<Context> contexts() {
  return {ctx_of("Z2", "id"), ctx_of("Z4", "inv"), ctx_of("S3", "id"), ctx_of("S3", "ad((12))"), ctx_of("Z5", "x2")};
}

}  // namespace

TEST(Semidirect, Law) {
  Rng rng = case_rng(51, 0);
  const Context c = ctx_of("Z5", "x2");
  const Model m = wreath_model(c);
  const KElement a = random_kelement(rng, c);
  const KElement b = random_kelement(rng, c);
  const VElement v = random_velement(rng, 4);
  EXPECT_EQ(m->mul(m->from_k(a), m->from_k(b)), m->from_k(mul(a, b)));
  EXPECT_EQ(m->mul(m->from_v(v), m->from_k(a)), (GElement{act(v, a), v}));
  const DyadicPoint x = random_point(rng, 4);
  const GElement g = m->conj(m->from_v(v), m->from_k(KElement::point_mass(c, x, 1)));
  EXPECT_EQ(g, m->from_k(act(v, KElement::point_mass(c, x, 1))));
  EXPECT_EQ(project_v(GElement{a, v}), v);
  EXPECT_TRUE(in_k(m->from_k(a)));
  EXPECT_TRUE(in_k(m->identity()));
}

TEST(Semidirect, GroupAxiomsAndNormality) {
  Rng rng = case_rng(52, 0);
  for (const Context& c : contexts()) {
    const Model m = wreath_model(c);
    for (int i = 0; i < 40; ++i) {
      const GElement g = random_gelement(rng, c, 4);
      const GElement h = random_gelement(rng, c, 4);
      const GElement k = random_gelement(rng, c, 4);
      EXPECT_EQ(m->mul(m->mul(g, h), k), m->mul(g, m->mul(h, k)));
      EXPECT_EQ(m->mul(g, m->inv(g)), m->identity());
      EXPECT_EQ(m->mul(m->identity(), g), g);
      EXPECT_TRUE(in_k(m->conj(g, m->from_k(random_kelement(rng, c)))));
    }
  }
}

// Every model is a genuine action: pi(v)pi(w) = pi(vw), each pi(v) multiplicative.
TEST(Semidirect, ModelsAreActions) {
  Rng rng = case_rng(53, 0);
  for (const Context& c : contexts()) {
    const KElement b = random_kelement(rng, c, 3, 1);
    for (const Model& m : {caret_model(c), conjugated_model(c, b), swapped_model(c)}) {
      for (int i = 0; i < 20; ++i) {
        const VElement v = random_velement(rng, 4);
        const VElement w = random_velement(rng, 4);
        const KElement a = random_kelement(rng, c);
        const KElement a2 = random_kelement(rng, c);
        EXPECT_EQ(m->act(v, m->act(w, a)), m->act(mul(v, w), a)) << m->label();
        EXPECT_EQ(m->act(v, mul(a, a2)), mul(m->act(v, a), m->act(v, a2))) << m->label();
      }
    }
  }
}

TEST(Semidirect, CaretModelAgreesWithMapModel) {
  Rng rng = case_rng(54, 0);
  for (const Context& c : contexts()) {
    const Model caret = caret_model(c);
    for (int i = 0; i < 40; ++i) {
      const VElement v = random_velement(rng, 4);
      const KElement a = random_kelement(rng, c);
      EXPECT_EQ(caret->act(v, a), act(v, a));
    }
  }
}

TEST(Semidirect, CentreExamples) {
  EXPECT_EQ(center_values(*ctx_of("Z2", "id")), Subgroup({0, 1}));
  EXPECT_EQ(center_values(*ctx_of("S3", "id")).size(), 1u);
  EXPECT_EQ(center_values(*ctx_of("Z3", "inv")), Subgroup({0}));
  EXPECT_EQ(center_values(*ctx_of("Z4", "inv")), Subgroup({0, 2}));
}

// The closed-form centre agrees with commuting against a generating family
// and with the R-invariant central constants.
TEST(Semidirect, CentreDoubleCharacterization) {
  Rng rng = case_rng(55, 0);
  for (const Context& c : contexts()) {
    const Model m = wreath_model(c);
    const FiniteGroup& g = *c->group();
    std::vector<GElement> family;
    for (const VElement& v : gens::generating_set()) family.push_back(m->from_v(v));
    for (std::size_t e = 0; e < g.order(); ++e) {
      family.push_back(m->from_k(KElement::point_mass(c, DyadicPoint(), static_cast<int>(e))));
    }
    for (std::size_t z = 0; z < g.order(); ++z) {
      const GElement cand = m->from_k(KElement::constant(c, static_cast<int>(z)));
      bool commutes = true;
      for (const GElement& f : family) commutes = commutes && m->mul(cand, f) == m->mul(f, cand);
      EXPECT_EQ(is_central(cand), commutes) << g.label() << " " << g.name(static_cast<int>(z));
      EXPECT_EQ(is_central(cand), in_R_invariant_center(cand.k));
    }
    for (int i = 0; i < 20; ++i) {
      const GElement r = random_gelement(rng, c, 3);
      if (r.v.is_identity() && r.k.is_constant()) continue;
      EXPECT_FALSE(is_central(r));
    }
  }
}

TEST(Semidirect, CentreIsInsideCommutators) {
  Rng rng = case_rng(56, 0);
  for (const Context& c : contexts()) {
    const Model m = wreath_model(c);
    for (int z : center_values(*c)) {
      for (int i = 0; i < 10; ++i) {
        Word u = random_word(rng, 4);
        if (u.empty()) u = Word("1");
        const auto [v, zj] = centre_commutator_witness(c, z, u);
        const GElement comm = m->commutator(m->from_v(v), m->from_k(zj));
        EXPECT_EQ(comm, m->from_k(restrict(KElement::constant(c, z), Cylinder(u))));
      }
    }
  }
}

TEST(Semidirect, SerializationRoundTrips) {
  Rng rng = case_rng(57, 0);
  for (const Context& c : contexts()) {
    for (int i = 0; i < 30; ++i) {
      const GElement g = random_gelement(rng, c, 4);
      EXPECT_EQ(parse_gelement(to_string(g), c), g);
    }
  }
}
