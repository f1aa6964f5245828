#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "vwreath/error.hpp"
#include "vwreath/forest.hpp"
#include "vwreath/random.hpp"

using namespace vwreath;

namespace {

std::vector<Word> words(std::initializer_list<const char*> list) {
  std::vector<Word> out;
  for (const char* s : list) out.emplace_back(s);
  return out;
}

// Leaf labels reached by feeding every strand through the forest.
std::vector<std::pair<std::size_t, Word>> strand_images(const Forest& f) {
  std::vector<std::pair<std::size_t, Word>> out;
  for (std::size_t r = 0; r < f.roots(); ++r) {
    for (const Word& l : f.trees()[r].leaves()) out.push_back(apply(f, r, l + Word("01")));
  }
  return out;
}

}  // namespace

TEST(Forest, TreeLeaves) {
  EXPECT_EQ(Tree::caret().leaves(), words({"0", "1"}));
  const Tree t = Tree::node(Tree::node(Tree::leaf(), Tree::caret()), Tree::caret());
  EXPECT_EQ(t.leaves(), words({"00", "010", "011", "10", "11"}));
  EXPECT_EQ(Tree::leaf().leaves(), words({""}));
  EXPECT_EQ(t.depth(), 3u);
  EXPECT_EQ(t.subtree(Word("0")), Tree::node(Tree::leaf(), Tree::caret()));
}

TEST(Forest, InvalidTreeIsRejected) {
  EXPECT_THROW(Tree(words({"0", "10"})), PreconditionError);
  EXPECT_THROW(parse_tree("[0,2]"), ParseError);
}

TEST(Forest, ElementaryForests) {
  EXPECT_EQ(Forest::elementary(2, 3), Forest({Tree::leaf(), Tree::caret(), Tree::leaf()}));
  EXPECT_EQ(Forest::elementary(1, 1), Forest({Tree::caret()}));
  EXPECT_EQ(Forest::elementary(3, 3), Forest({Tree::leaf(), Tree::leaf(), Tree::caret()}));
}

TEST(Forest, Compose) {
  const Forest caret({Tree::caret()});
  EXPECT_EQ(compose(Forest::identity(2), caret), caret);
  EXPECT_EQ(compose(Forest::elementary(1, 2), caret).trees()[0].leaves(), words({"00", "01", "1"}));
  EXPECT_EQ(compose(Forest::elementary(2, 2), caret).trees()[0].leaves(), words({"0", "10", "11"}));
}

TEST(Forest, Tensor) {
  EXPECT_EQ(tensor(Forest::identity(1), Forest({Tree::caret()})), Forest::elementary(2, 2));
  const Forest two = tensor(Forest({Tree::caret()}), Forest({Tree::caret()}));
  EXPECT_EQ(two.roots(), 2u);
  EXPECT_EQ(two.leaves(), 4u);
}

TEST(Forest, ElementaryDecompositionRecomposes) {
  Rng rng = case_rng(3, 0);
  for (int i = 0; i < 50; ++i) {
    const Forest f({random_tree_up_to(rng, 6, 4), random_tree_up_to(rng, 6, 4)});
    const std::vector<Forest> parts = elementary_decomposition(f);
    Forest acc = Forest::identity(f.roots());
    for (const Forest& p : parts) acc = compose(p, acc);
    EXPECT_EQ(acc, f);
  }
}

TEST(Forest, SlideIdentity) {
  const Forest f({Tree::leaf(), Tree::caret()});
  const auto [p, g] = slide(f, Permutation::identity(2));
  EXPECT_TRUE(p.is_identity());
  EXPECT_EQ(g, f);
}

// Frozen by hand: the block of root 2 (two leaves) moves in front of root 1.
TEST(Forest, SlideTransposition) {
  const Permutation swap = parse_permutation("(2 1)");
  {
    const auto [p, g] = slide(Forest({Tree::leaf(), Tree::caret()}), swap);
    EXPECT_EQ(to_string(p), "(2 3 1)");
    EXPECT_EQ(g, Forest({Tree::caret(), Tree::leaf()}));
  }
  {
    const auto [p, g] = slide(Forest({Tree::caret(), Tree::caret()}), swap);
    EXPECT_EQ(to_string(p), "(3 4 1 2)");
    EXPECT_EQ(g, Forest({Tree::caret(), Tree::caret()}));
  }
}

// f∘sigma and S(f,sigma)∘sigma(f) send every strand to the same leaf.
TEST(Forest, SlideExchangeRelation) {
  Rng rng = case_rng(5, 0);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    std::vector<Tree> trees;
    for (std::size_t r = 0; r < n; ++r) trees.push_back(random_tree_up_to(rng, 4, 3));
    const Forest f(trees);
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    const Permutation sigma(images);
    const auto [s, g] = slide(f, sigma);
    for (std::size_t r = 0; r < n; ++r) {
      for (const Word& l : g.trees()[r].leaves()) {
        // Left side: strand r passes sigma first, then f.
        const auto [root, rest] = apply(sigma, r, l);
        const auto lhs = apply(f, root, rest);
        const auto [leaf, rest2] = apply(g, r, l);
        const auto rhs = apply(s, leaf, rest2);
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(Forest, CommonRefinement) {
  const Tree t = parse_tree("[0,10,11]");
  const Tree s = parse_tree("[00,01,1]");
  EXPECT_EQ(common_tree(t, s).leaves(), words({"00", "01", "10", "11"}));
  const auto [p, q] = common_refinement(t, s);
  EXPECT_EQ(compose(p, Forest({t})), compose(q, Forest({s})));
  const auto [p2, q2] = common_refinement(t, t);
  EXPECT_EQ(p2, Forest::identity(3));
  EXPECT_EQ(q2, Forest::identity(3));
  const auto [p3, q3] = common_refinement(Tree::caret(), Tree::leaf());
  EXPECT_EQ(p3, Forest::identity(2));
  EXPECT_EQ(q3, Forest({Tree::caret()}));
}

TEST(Forest, MinTree) {
  EXPECT_EQ(min_tree(Word()), Tree::leaf());
  EXPECT_EQ(min_tree(Word("0")), Tree::caret());
  EXPECT_EQ(min_tree(Word("01")).leaves(), words({"00", "01", "1"}));
}

TEST(Forest, PermutationAlgebra) {
  const Permutation a = parse_permutation("(2 3 1)");
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(a * a * a, Permutation::identity(3));
  EXPECT_EQ(permute_tuple(a, std::vector<char>{'x', 'y', 'z'}), (std::vector<char>{'z', 'x', 'y'}));
}

TEST(Forest, SerializationRoundTrips) {
  Rng rng = case_rng(9, 0);
  for (int i = 0; i < 100; ++i) {
    const Tree t = random_tree_up_to(rng, 8, 5);
    EXPECT_EQ(parse_tree(to_string(t)), t);
    const Forest f({t, random_tree_up_to(rng, 4, 3)});
    EXPECT_EQ(parse_forest(to_string(f)), f);
    EXPECT_EQ(strand_images(f).size(), f.leaves());
  }
  const Permutation p = parse_permutation("(3 1 2)");
  EXPECT_EQ(parse_permutation(to_string(p)), p);
}
