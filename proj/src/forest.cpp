#include "vwreath/forest.hpp"

#include <algorithm>
#include <numeric>

#include "vwreath/error.hpp"
#include "vwreath/text.hpp"

namespace vwreath {

Tree::Tree(std::vector<Word> leaves) : leaves_(std::move(leaves)) {
  require_complete_prefix_code(leaves_);
}

Tree Tree::caret() { return Tree({Word("0"), Word("1")}); }

Tree Tree::node(const Tree& left, const Tree& right) {
  std::vector<Word> leaves;
  for (const Word& w : left.leaves()) leaves.push_back(Word("0") + w);
  for (const Word& w : right.leaves()) leaves.push_back(Word("1") + w);
  return Tree(std::move(leaves));
}

std::size_t Tree::depth() const {
  std::size_t d = 0;
  for (const Word& w : leaves_) d = std::max(d, w.size());
  return d;
}

Tree Tree::subtree(const Word& address) const {
  std::vector<Word> out;
  for (const Word& w : leaves_) {
    if (address.is_prefix_of(w)) out.push_back(w.drop(address.size()));
  }
  if (out.empty()) throw PreconditionError("address " + address.str() + " is below a leaf");
  return Tree(std::move(out));
}

std::size_t Tree::leaf_index_of_prefix(const Word& w) const {
  auto idx = locate(leaves_, w);
  if (!idx) throw PreconditionError("word " + w.str() + " does not extend a leaf");
  return *idx;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int i : images_) {
    if (i < 0 || static_cast<std::size_t>(i) >= images_.size() || seen[static_cast<std::size_t>(i)]) {
      throw PreconditionError("permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(i)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw PreconditionError("permutation sizes differ");
  std::vector<int> images(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) images[i] = a(b(static_cast<int>(i)));
  return Permutation(std::move(images));
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  if (trees_.empty()) throw PreconditionError("forests have at least one root");
}

Forest Forest::identity(std::size_t n) { return Forest(std::vector<Tree>(n, Tree::leaf())); }

Forest Forest::elementary(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) throw PreconditionError("elementary forest index out of range");
  std::vector<Tree> trees(n, Tree::leaf());
  trees[k - 1] = Tree::caret();
  return Forest(std::move(trees));
}

std::size_t Forest::leaves() const {
  std::size_t n = 0;
  for (const Tree& t : trees_) n += t.leaf_count();
  return n;
}

std::size_t Forest::block_start(std::size_t i) const {
  std::size_t n = 0;
  for (std::size_t j = 0; j < i; ++j) n += trees_[j].leaf_count();
  return n;
}

Forest compose(const Forest& g, const Forest& f) {
  if (f.leaves() != g.roots()) {
    throw PreconditionError("cannot compose: " + std::to_string(f.leaves()) + " leaves vs " +
                            std::to_string(g.roots()) + " roots");
  }
  std::vector<Tree> trees;
  std::size_t leaf = 0;
  for (const Tree& t : f.trees()) {
    std::vector<Word> grafted;
    for (const Word& w : t.leaves()) {
      for (const Word& x : g.trees()[leaf].leaves()) grafted.push_back(w + x);
      ++leaf;
    }
    trees.emplace_back(std::move(grafted));
  }
  return Forest(std::move(trees));
}

Forest tensor(const Forest& f, const Forest& g) {
  std::vector<Tree> trees = f.trees();
  trees.insert(trees.end(), g.trees().begin(), g.trees().end());
  return Forest(std::move(trees));
}

std::vector<Forest> elementary_decomposition(const Forest& f) {
  std::vector<Forest> out;
  // Current leaves as (tree index, address).
  std::vector<std::pair<std::size_t, Word>> current;
  for (std::size_t j = 0; j < f.roots(); ++j) current.emplace_back(j, Word{});
  for (;;) {
    std::size_t pos = current.size();
    for (std::size_t i = 0; i < current.size(); ++i) {
      const auto& [j, w] = current[i];
      const auto& leaves = f.trees()[j].leaves();
      if (!std::binary_search(leaves.begin(), leaves.end(), w)) {
        pos = i;
        break;
      }
    }
    if (pos == current.size()) break;
    out.push_back(Forest::elementary(pos + 1, current.size()));
    auto [j, w] = current[pos];
    current[pos] = {j, w.child(0)};
    current.insert(current.begin() + static_cast<std::ptrdiff_t>(pos) + 1, {j, w.child(1)});
  }
  return out;
}

SymForest make_sym_forest(Forest f, Permutation perm) {
  if (perm.size() != f.leaves()) throw PreconditionError("permutation size must equal leaf count");
  return SymForest{std::move(f), std::move(perm)};
}

std::pair<std::size_t, Word> apply(const Forest& f, std::size_t root, const Word& w) {
  const Tree& t = f.trees().at(root);
  std::size_t i = t.leaf_index_of_prefix(w);
  return {f.block_start(root) + i, w.drop(t.leaves()[i].size())};
}

std::pair<std::size_t, Word> apply(const Permutation& p, std::size_t strand, const Word& w) {
  return {static_cast<std::size_t>(p(static_cast<int>(strand))), w};
}

std::pair<Permutation, Forest> slide(const Forest& f, const Permutation& sigma) {
  if (sigma.size() != f.roots()) throw PreconditionError("permutation must act on the roots");
  std::vector<Tree> moved;
  for (std::size_t i = 0; i < f.roots(); ++i) moved.push_back(f.trees()[static_cast<std::size_t>(sigma(static_cast<int>(i)))]);
  Forest sf(std::move(moved));
  std::vector<int> images(f.leaves());
  for (std::size_t i = 0; i < sf.roots(); ++i) {
    std::size_t from = sf.block_start(i);
    std::size_t to = f.block_start(static_cast<std::size_t>(sigma(static_cast<int>(i))));
    for (std::size_t k = 0; k < sf.trees()[i].leaf_count(); ++k) images[from + k] = static_cast<int>(to + k);
  }
  return {Permutation(std::move(images)), std::move(sf)};
}

Tree common_tree(const Tree& t, const Tree& s) { return Tree(common_refinement(t.leaves(), s.leaves())); }

std::pair<Forest, Forest> common_refinement(const Tree& t, const Tree& s) {
  Tree big = common_tree(t, s);
  std::vector<Tree> p, q;
  for (const Word& l : t.leaves()) p.push_back(big.subtree(l));
  for (const Word& l : s.leaves()) q.push_back(big.subtree(l));
  return {Forest(std::move(p)), Forest(std::move(q))};
}

Tree min_tree(const Word& u) { return Tree(complete_prefix_code({u})); }

std::string to_string(const Tree& t) {
  if (t.is_leaf()) return "[]";
  std::string out = "[";
  for (std::size_t i = 0; i < t.leaf_count(); ++i) out += (i ? "," : "") + t.leaves()[i].str();
  return out + "]";
}

std::string to_string(const Forest& f) {
  std::string out;
  for (std::size_t i = 0; i < f.roots(); ++i) out += (i ? ";" : "") + to_string(f.trees()[i]);
  return out;
}

std::string to_string(const Permutation& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? " " : "") + std::to_string(p(static_cast<int>(i)) + 1);
  return out + ")";
}

Tree parse_tree(std::string_view t) {
  auto body = text::trim(text::unwrap(t, '[', ']'));
  if (body.empty()) return Tree::leaf();
  std::vector<Word> leaves;
  for (const auto& piece : text::split_top_level(body, ',', 1)) leaves.push_back(parse_word(piece.text));
  std::vector<Word> sorted = leaves;
  std::sort(sorted.begin(), sorted.end());
  return Tree(std::move(sorted));
}

Forest parse_forest(std::string_view t) {
  std::vector<Tree> trees;
  for (const auto& piece : text::split_top_level(t, ';')) trees.push_back(parse_tree(piece.text));
  return Forest(std::move(trees));
}

Permutation parse_permutation(std::string_view t) {
  auto body = text::trim(text::unwrap(t, '(', ')'));
  std::vector<int> images;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && (body[i] == ' ' || body[i] == ',')) ++i;
    std::size_t j = i;
    while (j < body.size() && body[j] != ' ' && body[j] != ',') ++j;
    if (j > i) images.push_back(static_cast<int>(text::parse_int(body.substr(i, j - i), i + 1)) - 1);
    i = j;
  }
  return Permutation(std::move(images));
}

}  // namespace vwreath
