#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "vwreath/semidirect.hpp"

namespace vwreath {

using Rng = std::mt19937_64;

// Independent stream for case `index` of a run seeded with `seed`.
Rng case_rng(std::uint64_t seed, std::uint64_t index);

int uniform_int(Rng& rng, int lo, int hi);  // inclusive

Word random_word(Rng& rng, std::size_t max_len);
DyadicPoint random_point(Rng& rng, std::size_t max_stem);
// Random tree with the given number of leaves and depth at most max_depth.
Tree random_tree(Rng& rng, std::size_t leaves, std::size_t max_depth);
Tree random_tree_up_to(Rng& rng, std::size_t max_leaves, std::size_t max_depth);
VElement random_velement(Rng& rng, std::size_t max_depth, std::size_t max_leaves = 8);
// (v, x) with v(x) = x.
std::pair<VElement, DyadicPoint> random_velement_with_fixed_point(Rng& rng, std::size_t max_depth);
KElement random_kelement(Rng& rng, const Context& ctx, std::size_t max_depth = 4, std::size_t max_exceptions = 2);
GElement random_gelement(Rng& rng, const Context& ctx, std::size_t max_depth = 4);
int random_element(Rng& rng, const FiniteGroup& g);

}  // namespace vwreath
