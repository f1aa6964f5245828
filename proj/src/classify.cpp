#include "vwreath/classify.hpp"

#include <algorithm>
#include <limits>

#include "vwreath/error.hpp"

namespace vwreath {

Isomorphism iso_from_equivariant(const Context& source, const Context& target, const GroupHom& gamma) {
  if (!gamma.is_bijective()) throw PreconditionError("gamma is not an isomorphism");
  if (!(compose(gamma, source->twist()) == compose(target->twist(), gamma))) {
    throw PreconditionError("gamma does not intertwine the twists");
  }
  const GroupHom gamma_inv = inverse(gamma);
  Model src = wreath_model(source);
  Model dst = wreath_model(target);
  auto forward = [gamma, target](const GElement& g) { return GElement{map_values(g.k, gamma, target), g.v}; };
  auto backward = [gamma_inv, source](const GElement& g) {
    return GElement{map_values(g.k, gamma_inv, source), g.v};
  };
  return Isomorphism{src, dst, forward, backward, Provenance{"equivariant(" + to_string(gamma) + ")", identity_v()}};
}

namespace {

std::optional<std::pair<bool, int>> omega_match(const OmegaData& omega, const OmegaData& omega_t,
                                                const GroupHom& gamma, const Subgroup& gamma_omega) {
  const FiniteGroup& g = *omega.group();
  const GroupHom gi = inverse(gamma);
  const int n = static_cast<int>(g.order());
  for (bool swap : {false, true}) {
    for (int h : gamma_omega) {
      bool ok = true;
      for (int x1 = 0; x1 < n && ok; ++x1) {
        for (int x2 = 0; x2 < n && ok; ++x2) {
          const int a = gi(swap ? x2 : x1);
          const int b = gi(swap ? x1 : x2);
          ok = omega_t(x1, x2) == gamma(g.conj(h, omega(a, b)));
        }
      }
      if (ok) return std::make_pair(swap, h);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<OmegaWitness> sufficient_iso_check(const OmegaData& omega, const OmegaData& omega_t, Exec exec) {
  const std::vector<GroupHom> isos = isomorphisms(omega.group(), omega_t.group(), exec);
  const Subgroup gamma_omega = gamma_omega_subgroup(omega);
  std::vector<std::optional<std::pair<bool, int>>> hits(isos.size());
  for_each_index(isos.size(), exec, [&](std::size_t i) { hits[i] = omega_match(omega, omega_t, isos[i], gamma_omega); });
  for (std::size_t i = 0; i < isos.size(); ++i) {
    if (hits[i]) return OmegaWitness{isos[i], hits[i]->first, hits[i]->second};
  }
  return std::nullopt;
}

std::optional<OuterConjugacy> classify_wreath(const GroupHom& beta, const GroupHom& beta_t, Exec exec) {
  if (!beta.is_bijective() || !beta_t.is_bijective()) throw PreconditionError("classify_wreath expects automorphisms");
  return outer_conjugate(beta, beta_t, exec);
}

EndoClassification classify_endos(const GroupHom& alpha, const GroupHom& alpha_t, Exec exec) {
  EventualImage e = eventual_image(alpha);
  EventualImage et = eventual_image(alpha_t);
  auto witness = outer_conjugate(e.restricted, et.restricted, exec);
  return {std::move(e), std::move(et), std::move(witness)};
}

std::string to_string(const OmegaWitness& w) {
  const FiniteGroup& g = *w.gamma.source();
  return "gamma=" + to_string(w.gamma) + " sigma=" + (w.swap ? "swap" : "id") + " g=" + g.name(w.g);
}

std::string to_string(const OuterConjugacy& w) {
  return "gamma=" + to_string(w.gamma) + " h=" + w.gamma.target()->name(w.h);
}

// ---- inner twists ------------------------------------------------------------

KElement twist_word(const KElement& b, const Word& u) {
  KElement out = identity_k(b.context());
  for (std::size_t n = 1; n <= u.size(); ++n) out = mul(out, r_word(b, u.drop(u.size() - n)));
  return out;
}

KElement twist_cocycle(const KElement& b, const VElement& v) {
  auto [t, sigma, s] = v.tree_pair();
  std::vector<KElement> bt;
  for (const Word& l : t.leaves()) bt.push_back(inv(twist_word(b, l)));
  std::vector<KElement> parts = permute_tuple(sigma, bt);
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = mul(parts[i], twist_word(b, s.leaves()[i]));
  return pi_tree_inv(parts, s);
}

KElement twisted_act(const KElement& b, const VElement& v, const KElement& a) {
  const KElement c = twist_cocycle(b, v);
  return conj(inv(c), act(v, a));
}

InnerTwist inner_twist(const KElement& b) {
  const Context& ctx = b.context();
  Model untwisted = wreath_model(ctx);
  Model twisted = conjugated_model(ctx, b);
  auto cocycle = [b](const VElement& v) { return twist_cocycle(b, v); };
  auto forward = [b](const GElement& g) { return GElement{mul(g.k, twist_cocycle(b, g.v)), g.v}; };
  auto backward = [b](const GElement& g) { return GElement{mul(g.k, inv(twist_cocycle(b, g.v))), g.v}; };
  Isomorphism theta{untwisted, twisted, forward, backward, Provenance{"inner_twist(" + to_string(b) + ")", identity_v()}};
  return InnerTwist{b, untwisted, twisted, cocycle, theta};
}

// ---- embeddings from 1 -> 2 morphisms ---------------------------------------------

SymForest caret_forest() { return make_sym_forest(Forest({Tree::caret()}), Permutation::identity(2)); }

SymForest swapped_caret_forest() { return make_sym_forest(Forest({Tree::caret()}), Permutation({1, 0})); }

namespace {

void require_one_to_two(const SymForest& f) {
  if (f.forest.roots() != 1 || !(f.forest.trees()[0] == Tree::caret()) || f.perm.size() != 2) {
    throw PreconditionError("expected a single caret followed by a permutation of two strands");
  }
}

bool swaps(const SymForest& f) { return !f.perm.is_identity(); }

// Replaces every caret of the tree below `node` by f, recording where each leaf lands.
void psi_tree(const Tree& t, const SymForest& f, const Word& node, const Word& image, std::vector<Word>& out) {
  auto it = std::lower_bound(t.leaves().begin(), t.leaves().end(), node);
  if (it != t.leaves().end() && *it == node) {
    out[static_cast<std::size_t>(it - t.leaves().begin())] = image;
    return;
  }
  for (int b : {0, 1}) psi_tree(t, f, node.child(b), image.child(f.perm(b)), out);
}

std::vector<Word> psi_leaves(const Tree& t, const SymForest& f) {
  std::vector<Word> out(t.leaf_count());
  psi_tree(t, f, Word{}, Word{}, out);
  return out;
}

}  // namespace

VElement psi_embed(const SymForest& f, const VElement& v) {
  require_one_to_two(f);
  auto [t, sigma, s] = v.tree_pair();
  const std::vector<Word> td = psi_leaves(t, f);
  const std::vector<Word> sd = psi_leaves(s, f);
  std::vector<Word> range;
  for (std::size_t i = 0; i < td.size(); ++i) range.push_back(sd[static_cast<std::size_t>(sigma(static_cast<int>(i)))]);
  return VElement(td, std::move(range));
}

Model embed_source_model(const SymForest& f, const Context& ctx) {
  require_one_to_two(f);
  return swaps(f) ? swapped_model(ctx) : wreath_model(ctx);
}

GElement embed_check(const SymForest& f, const VElement& t, const GElement& g) {
  const VElement ti = inv(t);
  return {act(ti, g.k), mul(mul(ti, psi_embed(f, g.v)), t)};
}

Isomorphism embed_iso(const SymForest& f, const Context& ctx, const VElement& t) {
  Model src = embed_source_model(f, ctx);
  Model dst = wreath_model(ctx);
  auto forward = [f, t](const GElement& g) { return embed_check(f, t, g); };
  // Psi is an involution for a 1 -> 2 morphism.
  auto backward = [f, t](const GElement& g) {
    return GElement{act(t, g.k), psi_embed(f, mul(mul(t, g.v), inv(t)))};
  };
  return Isomorphism{src, dst, forward, backward, Provenance{"embed", std::nullopt}};
}

}  // namespace vwreath
