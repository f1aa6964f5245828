#include "vwreath/random.hpp"

#include <algorithm>
#include <numeric>

namespace vwreath {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng case_rng(std::uint64_t seed, std::uint64_t index) { return Rng(splitmix(splitmix(seed) ^ index)); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Word random_word(Rng& rng, std::size_t max_len) {
  const int len = uniform_int(rng, 0, static_cast<int>(max_len));
  std::string digits;
  for (int i = 0; i < len; ++i) digits.push_back(uniform_int(rng, 0, 1) ? '1' : '0');
  return Word(digits);
}

DyadicPoint random_point(Rng& rng, std::size_t max_stem) { return canonicalize(random_word(rng, max_stem)); }

Tree random_tree(Rng& rng, std::size_t leaves, std::size_t max_depth) {
  std::vector<Word> cells{Word{}};
  while (cells.size() < leaves) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() < max_depth) open.push_back(i);
    }
    if (open.empty()) break;
    const std::size_t i = open[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(open.size()) - 1))];
    const Word w = cells[i];
    cells[i] = w.child(0);
    cells.insert(cells.begin() + static_cast<long>(i) + 1, w.child(1));
  }
  return Tree(std::move(cells));
}

Tree random_tree_up_to(Rng& rng, std::size_t max_leaves, std::size_t max_depth) {
  return random_tree(rng, static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_leaves))), max_depth);
}

VElement random_velement(Rng& rng, std::size_t max_depth, std::size_t max_leaves) {
  const Tree t = random_tree_up_to(rng, max_leaves, max_depth);
  const Tree s = random_tree(rng, t.leaf_count(), max_depth);
  std::vector<int> images(t.leaf_count());
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return make(t, Permutation(std::move(images)), s);
}

std::pair<VElement, DyadicPoint> random_velement_with_fixed_point(Rng& rng, std::size_t max_depth) {
  // Conjugate of an element fixing 00... with slope 2^(a-b) there.
  const int a = uniform_int(rng, 1, 3);
  const int b = uniform_int(rng, 1, 3);
  const Word d(std::string(static_cast<std::size_t>(a), '0'));
  const Word r(std::string(static_cast<std::size_t>(b), '0'));
  const VElement base = extend_partial({{d, r}});
  const VElement g = random_velement(rng, max_depth);
  return {mul(mul(g, base), inv(g)), act_point(g, DyadicPoint{})};
}

int random_element(Rng& rng, const FiniteGroup& g) { return uniform_int(rng, 0, static_cast<int>(g.order()) - 1); }

KElement random_kelement(Rng& rng, const Context& ctx, std::size_t max_depth, std::size_t max_exceptions) {
  const FiniteGroup& g = *ctx->group();
  const Tree t = random_tree_up_to(rng, 6, max_depth);
  std::vector<int> values;
  for (std::size_t i = 0; i < t.leaf_count(); ++i) {
    values.push_back(uniform_int(rng, 0, 2) == 0 ? g.identity() : random_element(rng, g));
  }
  std::map<DyadicPoint, int> exc;
  const int n = uniform_int(rng, 0, static_cast<int>(max_exceptions));
  for (int i = 0; i < n; ++i) exc[random_point(rng, max_depth + 1)] = random_element(rng, g);
  return KElement(ctx, t.leaves(), std::move(values), std::move(exc));
}

GElement random_gelement(Rng& rng, const Context& ctx, std::size_t max_depth) {
  return {random_kelement(rng, ctx, max_depth), random_velement(rng, max_depth, 6)};
}

}  // namespace vwreath
