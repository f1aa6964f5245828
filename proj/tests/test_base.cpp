#include <gtest/gtest.h>

#include "vwreath/base.hpp"
#include "vwreath/error.hpp"
#include "vwreath/oracle.hpp"
#include "vwreath/random.hpp"

using namespace vwreath;

namespace {

DyadicPoint pt(const char* s) { return parse_point(s); }

Context ctx_of(const char* group, const char* twist) {
  const Group g = parse_group(group);
  return make_context(g, parse_hom(twist, g, g));
}

std::vector<Context> contexts() {
  return {ctx_of("Z2", "id"), ctx_of("Z4", "id"), ctx_of("Z4", "inv"), ctx_of("S3", "id"), ctx_of("S3", "ad((12))"),
          ctx_of("Z5", "x2")};
}

}  // namespace

TEST(Base, Evaluation) {
  const Context c = ctx_of("S3", "id");
  const Group& g = c->group();
  const int t = g->element("(12)");
  const int r = g->element("(123)");
  EXPECT_EQ(KElement::constant(c, t)(pt("P:0101")), t);
  const KElement m = KElement::point_mass(c, pt("P:01"), t);
  EXPECT_EQ(m(pt("P:01")), t);
  EXPECT_EQ(m(pt("P:011")), g->identity());
  const KElement a = parse_kelement("base{C:0=(12)} exc{P:01=(123)}", c);
  EXPECT_EQ(a(pt("P:01")), r);
  EXPECT_EQ(a(pt("P:")), t);
  EXPECT_EQ(a(pt("P:1")), g->identity());
}

TEST(Base, Multiplication) {
  const Context c = ctx_of("Z4", "id");
  Rng rng = case_rng(31, 0);
  const KElement a = random_kelement(rng, c, 4, 2);
  EXPECT_TRUE(mul(a, inv(a)).is_identity());
  const DyadicPoint x = pt("P:011");
  EXPECT_EQ(mul(KElement::point_mass(c, x, 1), KElement::point_mass(c, x, 2)), KElement::point_mass(c, x, 3));
  const KElement p = mul(KElement::constant(c, 1), KElement::point_mass(c, x, 2));
  EXPECT_EQ(to_string(p), "base{C:=1} exc{P:011=3}");
}

TEST(Base, NormalizationDropsRedundantData) {
  const Context c = ctx_of("Z4", "id");
  EXPECT_EQ(parse_kelement("base{C:0=1,C:1=1} exc{P:01=1}", c), KElement::constant(c, 1));
  EXPECT_TRUE(parse_kelement("base{} exc{}", c).is_identity());
  EXPECT_TRUE(KElement::point_mass(c, pt("P:1"), 2).is_exception_only());
}

TEST(Base, ActionExamples) {
  const Context c = ctx_of("Z5", "x2");
  const VElement x0 = gens::x0();
  EXPECT_EQ(act(x0, KElement::point_mass(c, DyadicPoint(), 1)), KElement::point_mass(c, DyadicPoint(), 2));
  const Context plain = ctx_of("S3", "id");
  Rng rng = case_rng(32, 0);
  for (int i = 0; i < 50; ++i) {
    const VElement v = random_velement(rng, 4);
    const DyadicPoint x = random_point(rng, 5);
    const KElement m = KElement::point_mass(plain, x, 1);
    EXPECT_EQ(act(v, m), KElement::point_mass(plain, act_point(v, x), 1));
    EXPECT_EQ(act(identity_v(), m), m);
  }
}

TEST(Base, Carets) {
  const Context c = ctx_of("Z5", "x2");
  const auto [l, r] = caret(KElement::constant(c, 1));
  EXPECT_EQ(l, KElement::constant(c, 3));  // 2^-1 = 3 in Z5
  EXPECT_EQ(r, KElement::constant(c, 3));
  const Context plain = ctx_of("Z4", "id");
  const auto [l2, r2] = caret(KElement::point_mass(plain, pt("P:01"), 1));
  EXPECT_EQ(l2, KElement::point_mass(plain, pt("P:1"), 1));
  EXPECT_TRUE(r2.is_identity());
  EXPECT_EQ(r_word(KElement::point_mass(plain, pt("P:011"), 1), Word("01")), KElement::point_mass(plain, pt("P:1"), 1));
  Rng rng = case_rng(33, 0);
  for (const Context& k : contexts()) {
    for (int i = 0; i < 20; ++i) {
      const KElement a = random_kelement(rng, k, 4, 2);
      const auto [a0, a1] = caret(a);
      EXPECT_EQ(caret_inv(a0, a1), a);
      EXPECT_EQ(r_word(a, Word()), a);
      EXPECT_EQ(r_word(a, Word("01")), caret(caret(a).first).second);
      const Word u = random_word(rng, 4);
      EXPECT_EQ(r_word(place(a, u), u), a);
    }
  }
}

TEST(Base, Support) {
  const Context c = ctx_of("S3", "id");
  EXPECT_TRUE(support(identity_k(c)).empty());
  EXPECT_EQ(support(KElement::point_mass(c, pt("P:01"), 1)), SupportSet({}, {pt("P:01")}));
  EXPECT_EQ(support(parse_kelement("base{C:0=(12)} exc{P:=e}", c)), SupportSet({Cylinder(Word("0"))}, {}));
}

TEST(Base, RestrictAndComponent) {
  const Context c = ctx_of("Z4", "id");
  const Cylinder i(Word("01"));
  EXPECT_TRUE(restrict(identity_k(c), i).is_identity());
  const KElement m = KElement::point_mass(c, pt("P:011"), 2);
  EXPECT_EQ(restrict(m, i), m);
  EXPECT_TRUE(restrict(m, Cylinder(Word("1"))).is_identity());
  EXPECT_EQ(to_string(component(KElement::constant(c, 1), Word("0"))), "base{C:0=1} exc{}");
}

TEST(Base, Decompose) {
  const Context c = ctx_of("Z4", "id");
  const KElement a = KElement::constant(c, 3);
  EXPECT_EQ(decompose(a, Tree::leaf()), std::vector<KElement>{a});
  const auto halves = decompose(a, Tree::caret());
  ASSERT_EQ(halves.size(), 2u);
  EXPECT_EQ(mul(halves[0], halves[1]), a);
  Rng rng = case_rng(34, 0);
  const Tree t2 = parse_tree("[00,01,10,11]");
  for (const Context& k : contexts()) {
    for (int i = 0; i < 20; ++i) {
      const KElement b = random_kelement(rng, k, 4, 3);
      const auto parts = decompose(b, t2);
      KElement prod = identity_k(k);
      for (std::size_t j = 0; j < parts.size(); ++j) {
        prod = mul(prod, parts[j]);
        for (std::size_t l = j + 1; l < parts.size(); ++l) EXPECT_TRUE(support_intersect_empty(support(parts[j]), support(parts[l])));
      }
      EXPECT_EQ(prod, b);
    }
  }
}

TEST(Base, RInvariance) {
  const Context c = ctx_of("Z4", "inv");
  EXPECT_TRUE(is_R_invariant(KElement::constant(c, 2)));
  EXPECT_FALSE(is_R_invariant(KElement::constant(c, 1)));
  EXPECT_FALSE(is_R_invariant(KElement::point_mass(c, pt("P:1"), 2)));
  EXPECT_TRUE(is_R_invariant(identity_k(c)));
}

// Direct formula at probe points, read from raw cell data.
TEST(Base, ActionMatchesOracle) {
  Rng rng = case_rng(35, 0);
  for (const Context& k : contexts()) {
    for (int i = 0; i < 40; ++i) {
      const VElement v = random_velement(rng, 4);
      const KElement a = random_kelement(rng, k, 4, 2);
      const KElement image = act(v, a);
      for (int j = 0; j < 10; ++j) {
        const DyadicPoint x = random_point(rng, 7);
        EXPECT_EQ(image(x), oracle::action_eval(v, a, x));
        EXPECT_EQ(a(x), oracle::eval(a, x));
      }
    }
  }
}

TEST(Base, SupportCalculus) {
  Rng rng = case_rng(36, 0);
  for (const Context& k : contexts()) {
    for (int i = 0; i < 40; ++i) {
      const KElement a = random_kelement(rng, k, 4, 2);
      const KElement b = random_kelement(rng, k, 4, 2);
      const VElement v = random_velement(rng, 4);
      EXPECT_EQ(support(a).empty(), a.is_identity());
      EXPECT_EQ(support(a), support(inv(a)));
      EXPECT_EQ(support(conj(a, b)), support(b));
      EXPECT_TRUE(support_subset(support(mul(a, b)), support_union(support(a), support(b))));
      EXPECT_EQ(support(act(v, a)), act_support(v, support(a)));
      const KElement comm = mul(mul(a, b), inv(mul(b, a)));
      EXPECT_TRUE(support_subset(support(comm), support_intersection(support(a), support(b))));
      const KElement a0 = restrict(a, Cylinder(Word("0")));
      const KElement b1 = restrict(b, Cylinder(Word("1")));
      EXPECT_EQ(mul(a0, b1), mul(b1, a0));
    }
  }
}

TEST(Base, ActionIsAGroupAction) {
  Rng rng = case_rng(37, 0);
  for (const Context& k : contexts()) {
    for (int i = 0; i < 40; ++i) {
      const VElement v = random_velement(rng, 4);
      const VElement w = random_velement(rng, 4);
      const KElement a = random_kelement(rng, k, 4, 2);
      const KElement b = random_kelement(rng, k, 4, 2);
      EXPECT_EQ(act(v, act(w, a)), act(mul(v, w), a));
      EXPECT_EQ(act(v, mul(a, b)), mul(act(v, a), act(v, b)));
    }
  }
}

TEST(Base, HalvesAndComponents) {
  Rng rng = case_rng(38, 0);
  for (const Context& k : contexts()) {
    for (int i = 0; i < 40; ++i) {
      const KElement a = random_kelement(rng, k, 4, 2);
      const Word u = random_word(rng, 3);
      const Cylinder c(u);
      const auto [c0, c1] = split(c);
      EXPECT_EQ(restrict(a, c), mul(restrict(a, c0), restrict(a, c1)));
      EXPECT_EQ(mul(component(a, u.child(0)), component(a, u.child(1))), component(a, u));
      EXPECT_EQ(place(r_word(a, u), u), restrict(a, c));
    }
  }
}

TEST(Base, TreeRouteMatchesAction) {
  Rng rng = case_rng(39, 0);
  for (const Context& k : contexts()) {
    for (int i = 0; i < 30; ++i) {
      const KElement a = random_kelement(rng, k, 4, 2);
      const Tree t = random_tree_up_to(rng, 6, 4);
      EXPECT_EQ(pi_tree_inv(pi_tree(a, t), t), a);
      // pi(v) for v = (t, sigma, s) equals pi(s)^-1 pi(sigma) pi(t).
      const VElement v = random_velement(rng, 4);
      auto [vt, sigma, vs] = v.tree_pair();
      EXPECT_EQ(pi_tree_inv(permute_tuple(sigma, pi_tree(a, vt)), vs), act(v, a));
    }
  }
}

TEST(Base, ExceptionOnlyElementsFormASubgroup) {
  Rng rng = case_rng(40, 0);
  const Context k = ctx_of("S3", "ad((12))");
  for (int i = 0; i < 50; ++i) {
    const KElement a = KElement::point_mass(k, random_point(rng, 4), random_element(rng, *k->group()));
    const KElement b = KElement::point_mass(k, random_point(rng, 4), random_element(rng, *k->group()));
    const VElement v = random_velement(rng, 4);
    EXPECT_TRUE(mul(a, b).is_exception_only());
    EXPECT_TRUE(inv(a).is_exception_only());
    EXPECT_TRUE(act(v, a).is_exception_only());
  }
}

TEST(Base, MapValues) {
  const Context c = ctx_of("Z4", "id");
  const Group& g = c->group();
  const KElement a = parse_kelement("base{C:0=1} exc{P:1=3}", c);
  EXPECT_EQ(map_values(a, parse_hom("inv", g, g), c), parse_kelement("base{C:0=3} exc{P:1=1}", c));
}

TEST(Base, SerializationRoundTrips) {
  Rng rng = case_rng(41, 0);
  for (const Context& k : contexts()) {
    for (int i = 0; i < 30; ++i) {
      const KElement a = random_kelement(rng, k, 5, 3);
      EXPECT_EQ(parse_kelement(to_string(a), k), a);
    }
  }
  EXPECT_THROW(parse_kelement("base{C:0=7}", ctx_of("Z4", "id")), ParseError);
}
