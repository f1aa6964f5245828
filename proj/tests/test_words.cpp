#include <gtest/gtest.h>

#include "vwreath/error.hpp"
#include "vwreath/random.hpp"
#include "vwreath/words.hpp"

using namespace vwreath;

namespace {

DyadicPoint pt(const char* s) { return parse_point(s); }
Cylinder cyl(const char* s) { return parse_cylinder(s); }

}  // namespace

TEST(Words, CanonicalizeStripsTrailingZeros) {
  EXPECT_EQ(canonicalize(Word("0100")).stem().str(), "01");
  EXPECT_EQ(canonicalize(Word("")).stem().str(), "");
  EXPECT_EQ(canonicalize(Word("0011")).stem().str(), "0011");
  EXPECT_EQ(canonicalize(Word("000")), DyadicPoint());
}

TEST(Words, RejectsNonBinaryDigits) {
  EXPECT_THROW(Word("012"), ParseError);
  EXPECT_THROW(parse_point("P:0a"), ParseError);
}

TEST(Words, SplitCylinder) {
  EXPECT_EQ(split(cyl("C:0")), std::make_pair(cyl("C:00"), cyl("C:01")));
  EXPECT_EQ(split(Cylinder()), std::make_pair(cyl("C:0"), cyl("C:1")));
  EXPECT_EQ(split(cyl("C:101")), std::make_pair(cyl("C:1010"), cyl("C:1011")));
}

TEST(Words, CylinderContainsPoint) {
  EXPECT_TRUE(contains(cyl("C:01"), pt("P:01")));
  EXPECT_FALSE(contains(cyl("C:01"), pt("P:1")));
  EXPECT_TRUE(contains(cyl("C:0100"), pt("P:01")));
  EXPECT_FALSE(contains(cyl("C:0101"), pt("P:01")));
}

TEST(Words, SupportSetOperations) {
  const SupportSet a({cyl("C:00")}, {});
  const SupportSet b({cyl("C:01")}, {});
  EXPECT_EQ(support_union(a, b), SupportSet({cyl("C:0")}, {}));
  EXPECT_FALSE(support_intersect_empty(SupportSet({cyl("C:0")}, {}), SupportSet({}, {pt("P:01")})));
  EXPECT_TRUE(support_equal(SupportSet({cyl("C:0"), cyl("C:1")}, {}), SupportSet({Cylinder()}, {})));
  EXPECT_TRUE(support_subset(a, support_union(a, b)));
}

TEST(Words, SupportSetAbsorbsPointsInsideCylinders) {
  const SupportSet s({cyl("C:0")}, {pt("P:01"), pt("P:1")});
  EXPECT_EQ(s.points().size(), 1u);
  EXPECT_TRUE(s.contains(pt("P:01")));
  EXPECT_TRUE(s.contains(pt("P:1")));
  EXPECT_FALSE(s.contains(pt("P:11")));
}

TEST(Words, PrefixCodes) {
  EXPECT_TRUE(is_complete_prefix_code({Word("0"), Word("10"), Word("11")}));
  EXPECT_FALSE(is_complete_prefix_code({Word("0"), Word("10")}));
  EXPECT_FALSE(is_complete_prefix_code({Word("0"), Word("01"), Word("1")}));
  EXPECT_THROW(require_complete_prefix_code({Word("1"), Word("0")}), PreconditionError);
  const auto r = common_refinement({Word("0"), Word("10"), Word("11")}, {Word("00"), Word("01"), Word("1")});
  EXPECT_EQ(r, (std::vector<Word>{Word("00"), Word("01"), Word("10"), Word("11")}));
  EXPECT_EQ(complete_prefix_code({Word("01")}), (std::vector<Word>{Word("00"), Word("01"), Word("1")}));
}

TEST(Words, LocateFindsContainingCell) {
  const std::vector<Word> code{Word("0"), Word("10"), Word("11")};
  EXPECT_EQ(locate(code, pt("P:1")), 1u);
  EXPECT_EQ(locate(code, pt("P:011")), 0u);
  EXPECT_EQ(locate(code, Word("111")), std::optional<std::size_t>(2));
  EXPECT_EQ(locate(code, Word("1")), std::nullopt);
}

TEST(Words, PrependAndDropAreInverse) {
  Rng rng = case_rng(7, 0);
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(rng, 5);
    const DyadicPoint x = random_point(rng, 6);
    const DyadicPoint y = prepend(u, x);
    EXPECT_TRUE(has_prefix(y, u));
    EXPECT_EQ(drop_prefix(y, u.size()), x);
  }
}

TEST(Words, SerializationRoundTrips) {
  Rng rng = case_rng(11, 0);
  for (int i = 0; i < 200; ++i) {
    const DyadicPoint x = random_point(rng, 6);
    EXPECT_EQ(parse_point(to_string(x)), x);
    const Cylinder c(random_word(rng, 5));
    EXPECT_EQ(parse_cylinder(to_string(c)), c);
    const SupportSet s({Cylinder(random_word(rng, 4)), Cylinder(random_word(rng, 4))}, {random_point(rng, 5)});
    EXPECT_EQ(parse_support_set(to_string(s)), s);
  }
}

TEST(Words, SupportAlgebraLaws) {
  Rng rng = case_rng(13, 0);
  for (int i = 0; i < 200; ++i) {
    const SupportSet s({Cylinder(random_word(rng, 4))}, {random_point(rng, 4)});
    const SupportSet t({Cylinder(random_word(rng, 4))}, {random_point(rng, 4)});
    EXPECT_EQ(support_union(s, t), support_union(t, s));
    EXPECT_EQ(support_intersection(s, t), support_intersection(t, s));
    EXPECT_TRUE(support_subset(support_intersection(s, t), s));
    EXPECT_TRUE(support_subset(s, support_union(s, t)));
    EXPECT_EQ(support_intersect_empty(s, t), support_intersection(s, t).empty());
  }
}
