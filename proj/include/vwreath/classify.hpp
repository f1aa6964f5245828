#pragma once

#include <functional>
#include <optional>
#include <string>

#include "vwreath/rigidity.hpp"

namespace vwreath {

// (a, v) -> (gamma∘a, v) between wreath models; requires gamma∘beta = beta~∘gamma.
Isomorphism iso_from_equivariant(const Context& source, const Context& target, const GroupHom& gamma);

struct OmegaWitness {
  GroupHom gamma;
  bool swap;
  int g;  // element of Gamma_omega
};
// First (gamma, sigma, g) in lexicographic order with
// omega~(x1, x2) = gamma(ad(g)(omega(gamma^-1 x_{sigma 1}, gamma^-1 x_{sigma 2}))).
// A witness proves isomorphism; its absence proves nothing.
std::optional<OmegaWitness> sufficient_iso_check(const OmegaData& omega, const OmegaData& omega_t,
                                                 Exec exec = Exec::parallel);

std::optional<OuterConjugacy> classify_wreath(const GroupHom& beta, const GroupHom& beta_t,
                                              Exec exec = Exec::parallel);

struct EndoClassification {
  EventualImage source;
  EventualImage target;
  std::optional<OuterConjugacy> witness;
};
EndoClassification classify_endos(const GroupHom& alpha, const GroupHom& alpha_t, Exec exec = Exec::parallel);

std::string to_string(const OmegaWitness& w);
std::string to_string(const OuterConjugacy& w);

// The isomorphism from the wreath model onto the model twisted by ad(b).
struct InnerTwist {
  KElement b;
  Model untwisted;
  Model twisted;
  std::function<KElement(const VElement&)> cocycle;
  Isomorphism theta;
};

// b^R_u: product of R_w(b) over the suffixes w of u, shortest first.
KElement twist_word(const KElement& b, const Word& u);
// c_v = pi(s)^-1(pi(sigma)(b_t^-1)·b_s) for v = (t, sigma, s).
KElement twist_cocycle(const KElement& b, const VElement& v);
// ad(c_v^-1)∘pi(v), the action of the twisted model written through the cocycle.
KElement twisted_act(const KElement& b, const VElement& v, const KElement& a);
InnerTwist inner_twist(const KElement& b);

// f must be a single caret followed by a permutation of its two leaves.
// Psi(v) replaces each caret of v by f.
VElement psi_embed(const SymForest& f, const VElement& v);
// theta(a v) = pi(t^-1)(a)·t^-1 Psi(v) t, from G(pi(f)) into the wreath model.
GElement embed_check(const SymForest& f, const VElement& t, const GElement& g);
// The model G(pi(f)) of the source side.
Model embed_source_model(const SymForest& f, const Context& ctx);
Isomorphism embed_iso(const SymForest& f, const Context& ctx, const VElement& t);

SymForest caret_forest();
SymForest swapped_caret_forest();

}  // namespace vwreath
