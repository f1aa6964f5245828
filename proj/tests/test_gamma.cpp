#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "vwreath/error.hpp"
#include "vwreath/gamma.hpp"
#include "vwreath/oracle.hpp"

using namespace vwreath;

namespace {

std::vector<Group> small_groups() {
  return {trivial_group(),    cyclic_group(2),  cyclic_group(3),  cyclic_group(4),
          parse_group("V4"),  cyclic_group(5),  cyclic_group(6),  symmetric_group(3),
          cyclic_group(7),    cyclic_group(8),  parse_group("product:Z4,Z2"),
          parse_group("product:Z2,product:Z2,Z2"), dihedral_group(4), parse_group("Q8")};
}

}  // namespace

TEST(Gamma, Orders) {
  EXPECT_EQ(dihedral_group(4)->order(), 8u);
  EXPECT_EQ(dicyclic_group(2)->order(), 8u);
  EXPECT_EQ(symmetric_group(4)->order(), 24u);
  EXPECT_EQ(parse_group("V4")->order(), 4u);
  EXPECT_FALSE(parse_group("Q8")->is_abelian());
}

TEST(Gamma, InvalidTablesAreRejected) {
  EXPECT_THROW(FiniteGroup({0, 1, 1, 1}, {"a", "b"}, "bad"), Error);
  EXPECT_THROW(parse_group("cyclic:x"), ParseError);
  EXPECT_THROW(parse_hom("[0,0,1]", cyclic_group(3), cyclic_group(3)), Error);
}

TEST(Gamma, CentersAndFixedSubgroups) {
  const Group s3 = symmetric_group(3);
  EXPECT_EQ(center(*s3), Subgroup({s3->identity()}));
  EXPECT_EQ(center(*cyclic_group(4)), Subgroup({0, 1, 2, 3}));
  const Group z3 = cyclic_group(3);
  EXPECT_EQ(fixed_subgroup(parse_hom("inv", z3, z3)), Subgroup({0}));
  EXPECT_EQ(commutator_subgroup(*s3).size(), 3u);
  EXPECT_EQ(center(*parse_group("Q8")).size(), 2u);
}

TEST(Gamma, AutomorphismCounts) {
  EXPECT_EQ(automorphisms(cyclic_group(4)).size(), 2u);
  EXPECT_EQ(automorphisms(cyclic_group(2)).size(), 1u);
  const Group s3 = symmetric_group(3);
  const auto auts = automorphisms(s3);
  ASSERT_EQ(auts.size(), 6u);
  std::set<std::vector<int>> inner;
  for (int h = 0; h < 6; ++h) inner.insert(inner_hom(s3, h).values());
  for (const GroupHom& a : auts) EXPECT_TRUE(inner.count(a.values()));
}

TEST(Gamma, EnumerationMatchesBruteForce) {
  const std::vector<Group> gs{cyclic_group(2), cyclic_group(4), parse_group("V4"), symmetric_group(3), cyclic_group(6)};
  for (const Group& a : gs) {
    for (const Group& b : gs) {
      if (std::pow(static_cast<double>(b->order()), static_cast<double>(a->order())) > 5e6) continue;
      EXPECT_EQ(homomorphisms(a, b, Exec::serial), homomorphisms_brute_force(a, b)) << a->label() << " " << b->label();
    }
  }
}

TEST(Gamma, ParallelEnumerationMatchesSerial) {
  for (const Group& g : small_groups()) {
    EXPECT_EQ(homomorphisms(g, g, Exec::parallel), homomorphisms(g, g, Exec::serial)) << g->label();
  }
  const Group s4 = symmetric_group(4);
  EXPECT_EQ(automorphisms(s4, Exec::parallel), automorphisms(s4, Exec::serial));
}

TEST(Gamma, HomomorphismAlgebra) {
  const Group z6 = cyclic_group(6);
  const GroupHom f = parse_hom("x5", z6, z6);
  EXPECT_EQ(compose(f, f), identity_hom(z6));
  EXPECT_EQ(inverse(f), f);
  EXPECT_EQ(power(f, -3), f);
  EXPECT_EQ(automorphism_order(f), 2u);
  EXPECT_EQ(parse_hom("zero", z6, z6), trivial_hom(z6, z6));
}

TEST(Gamma, EventualImages) {
  const Group z4 = cyclic_group(4);
  const EventualImage e = eventual_image(parse_hom("x2", z4, z4));
  EXPECT_EQ(e.elements, Subgroup({0}));
  EXPECT_EQ(e.stabilization_index, 2u);
  const Group z6 = cyclic_group(6);
  const EventualImage e6 = eventual_image(parse_hom("x3", z6, z6));
  EXPECT_EQ(e6.elements, Subgroup({0, 3}));
  EXPECT_EQ(e6.restricted, identity_hom(e6.group));
  const Group s3 = symmetric_group(3);
  const GroupHom ad = inner_hom(s3, s3->element("(12)"));
  EXPECT_EQ(eventual_image(ad).elements.size(), 6u);
}

// Backward-compatible sequence count equals the eventual image size.
TEST(Gamma, InverseLimitOracle) {
  for (const Group& g : small_groups()) {
    for (const GroupHom& b : endomorphisms(g)) {
      EXPECT_EQ(oracle::inverse_limit_count(b), eventual_image(b).elements.size()) << g->label() << " " << to_string(b);
    }
  }
}

TEST(Gamma, OuterConjugacy) {
  const Group z3 = cyclic_group(3);
  EXPECT_FALSE(outer_conjugate(identity_hom(z3), parse_hom("inv", z3, z3)));
  const Group s3 = symmetric_group(3);
  const int t = s3->element("(12)");
  const auto w = outer_conjugate(identity_hom(s3), inner_hom(s3, t));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->gamma, identity_hom(s3));
  EXPECT_EQ(w->h, t);
  const auto same = outer_conjugate(inner_hom(s3, t), inner_hom(s3, t));
  ASSERT_TRUE(same);
  EXPECT_EQ(same->gamma, identity_hom(s3));
  EXPECT_EQ(same->h, s3->identity());
}

TEST(Gamma, OuterConjugacyWitnessIsValid) {
  for (const Group& g : {symmetric_group(3), dihedral_group(4), parse_group("Q8"), cyclic_group(8)}) {
    const auto auts = automorphisms(g);
    for (const GroupHom& a : auts) {
      for (const GroupHom& b : auts) {
        const auto w = outer_conjugate(a, b, Exec::serial);
        EXPECT_EQ(w.has_value(), outer_conjugate(b, a, Exec::serial).has_value());
        EXPECT_EQ(w.has_value(), outer_conjugate(a, b, Exec::parallel).has_value());
        if (!w) continue;
        const GroupHom rhs = compose(inner_hom(g, w->h), compose(w->gamma, compose(a, inverse(w->gamma))));
        EXPECT_EQ(rhs, b);
      }
    }
  }
}

TEST(Gamma, ParallelOuterConjugateMatchesSerial) {
  const Group s4 = symmetric_group(4);
  const auto auts = automorphisms(s4);
  for (std::size_t i = 0; i < auts.size(); i += 5) {
    const auto p = outer_conjugate(auts[0], auts[i], Exec::parallel);
    const auto s = outer_conjugate(auts[0], auts[i], Exec::serial);
    ASSERT_EQ(p.has_value(), s.has_value());
    if (p) {
      EXPECT_EQ(p->gamma, s->gamma);
      EXPECT_EQ(p->h, s->h);
    }
  }
}

TEST(Gamma, OmegaSubgroup) {
  const Group s3 = symmetric_group(3);
  EXPECT_EQ(gamma_omega_subgroup(parse_omega("id/zero", s3)).size(), 6u);
  const Group z4 = cyclic_group(4);
  EXPECT_EQ(gamma_omega_subgroup(parse_omega("x2/zero", z4)), Subgroup({0}));
  const Group z2 = cyclic_group(2);
  EXPECT_EQ(gamma_omega_subgroup(parse_omega("id/id", z2)), Subgroup({0, 1}));
}

TEST(Gamma, OmegaBWitness) {
  const Group z2 = cyclic_group(2);
  const OmegaData first = parse_omega("id/zero", z2);
  const auto b0 = omega_b_witness(first, 0, 3);
  ASSERT_TRUE(b0);
  for (const auto& [u, g] : *b0) EXPECT_EQ(g, 0) << u.str();
  const auto b = omega_b_witness(first, 1, 2);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->at(Word()), 0);
  for (const auto& [u, g] : *b) {
    if (u.size() >= 2) continue;
    EXPECT_EQ(first(b->at(u.child(0)), b->at(u.child(1))), z2->mul(z2->inv(1), g));
  }
  EXPECT_FALSE(omega_b_witness(parse_omega("x2/zero", cyclic_group(4)), 1, 2));
}

TEST(Gamma, SerializationRoundTrips) {
  for (const Group& g : small_groups()) {
    for (const GroupHom& f : endomorphisms(g)) EXPECT_EQ(parse_hom(to_string(f), g, g), f);
  }
  const Group s3 = symmetric_group(3);
  for (const std::string& n : s3->names()) EXPECT_EQ(s3->name(s3->element(n)), n);
}
