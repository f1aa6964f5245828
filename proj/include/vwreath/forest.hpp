#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vwreath/words.hpp"

namespace vwreath {

// Finite rooted planar binary tree, stored by its leaf addresses.
class Tree {
 public:
  Tree() : leaves_{Word{}} {}
  // Throws PreconditionError unless the words form a complete prefix code.
  explicit Tree(std::vector<Word> leaves);

  static Tree leaf() { return Tree(); }
  static Tree caret();
  static Tree node(const Tree& left, const Tree& right);

  const std::vector<Word>& leaves() const { return leaves_; }
  std::size_t leaf_count() const { return leaves_.size(); }
  bool is_leaf() const { return leaves_.size() == 1; }
  std::size_t depth() const;
  // Subtree hanging below the node at `address` (must be a node or leaf of this tree).
  Tree subtree(const Word& address) const;
  // Index of the leaf that is a prefix of w.
  std::size_t leaf_index_of_prefix(const Word& w) const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  std::vector<Word> leaves_;
};

// Permutation of {0..n-1}; printed 1-based as its image list "(2 3 1)".
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// (a*b)(i) = a(b(i)).
Permutation operator*(const Permutation& a, const Permutation& b);

// Tuple action: position sigma(i) of the result holds entry i.
template <class T>
std::vector<T> permute_tuple(const Permutation& sigma, const std::vector<T>& tuple) {
  std::vector<T> out = tuple;
  for (std::size_t i = 0; i < tuple.size(); ++i) out[static_cast<std::size_t>(sigma(static_cast<int>(i)))] = tuple[i];
  return out;
}

class Forest {
 public:
  // Nonempty list of trees.
  explicit Forest(std::vector<Tree> trees);
  static Forest identity(std::size_t n);
  static Forest elementary(std::size_t k, std::size_t n);  // 1 <= k <= n

  const std::vector<Tree>& trees() const { return trees_; }
  std::size_t roots() const { return trees_.size(); }
  std::size_t leaves() const;
  // Global leaf index of the first leaf of tree i.
  std::size_t block_start(std::size_t i) const;

  friend bool operator==(const Forest&, const Forest&) = default;

 private:
  std::vector<Tree> trees_;
};

// Grafts leaf i of f onto root i of g.
Forest compose(const Forest& g, const Forest& f);
Forest tensor(const Forest& f, const Forest& g);
// Elementary forests whose composition (last applied last) equals f.
std::vector<Forest> elementary_decomposition(const Forest& f);

// Morphism sigma∘f of the symmetric forest category.
struct SymForest {
  Forest forest;
  Permutation perm;
};
SymForest make_sym_forest(Forest f, Permutation perm);

// Strand-level evaluation: address (root, w), with w extending a leaf of tree `root`,
// goes to (global leaf index, remainder).
std::pair<std::size_t, Word> apply(const Forest& f, std::size_t root, const Word& w);
std::pair<std::size_t, Word> apply(const Permutation& p, std::size_t strand, const Word& w);

// f sigma = S(f, sigma) sigma(f), with sigma(f)_i = f_{sigma(i)}.
std::pair<Permutation, Forest> slide(const Forest& f, const Permutation& sigma);

// Forests p, q with p∘t = q∘s equal to the smallest tree refining t and s.
std::pair<Forest, Forest> common_refinement(const Tree& t, const Tree& s);
Tree common_tree(const Tree& t, const Tree& s);

// Smallest tree having u as a leaf.
Tree min_tree(const Word& u);

std::string to_string(const Tree& t);
std::string to_string(const Forest& f);
std::string to_string(const Permutation& p);
Tree parse_tree(std::string_view text);
Forest parse_forest(std::string_view text);
Permutation parse_permutation(std::string_view text);

}  // namespace vwreath
