#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vwreath/forest.hpp"
#include "vwreath/gamma.hpp"
#include "vwreath/thompson.hpp"
#include "vwreath/words.hpp"

namespace vwreath {

// A finite group with an automorphism twisting the action of V.
class TwistContext {
 public:
  TwistContext(Group group, GroupHom twist);

  const Group& group() const { return group_; }
  const GroupHom& twist() const { return twist_; }
  // beta^n(g) for any integer n.
  int twist_pow(int g, long n) const;
  std::size_t twist_order() const { return powers_.size(); }
  bool untwisted() const { return powers_.size() == 1; }
  bool same_as(const TwistContext& other) const;

 private:
  Group group_;
  GroupHom twist_;
  std::vector<std::vector<int>> powers_;
};

using Context = std::shared_ptr<const TwistContext>;
Context make_context(const Group& group, const GroupHom& twist);
Context make_context(const Group& group);

// Element of the product of copies of Gamma over the dyadic rationals, as a
// map constant on the cells of a partition except at finitely many points.
class KElement {
 public:
  explicit KElement(Context ctx);
  // Normalizes: exceptions equal to their cell value are dropped, then
  // sibling cells carrying equal values are merged.
  KElement(Context ctx, std::vector<Word> cells, std::vector<int> values, std::map<DyadicPoint, int> exceptions = {});

  static KElement constant(Context ctx, int g);
  static KElement point_mass(Context ctx, const DyadicPoint& x, int g);

  const Context& context() const { return ctx_; }
  const Group& group() const { return ctx_->group(); }
  const std::vector<Word>& cells() const { return cells_; }
  const std::vector<int>& values() const { return values_; }
  const std::map<DyadicPoint, int>& exceptions() const { return exceptions_; }

  int cell_value(const DyadicPoint& x) const;
  int operator()(const DyadicPoint& x) const;
  bool is_identity() const;
  bool is_constant() const { return cells_.size() == 1 && exceptions_.empty(); }
  // Finitely supported.
  bool is_exception_only() const;

  friend bool operator==(const KElement& a, const KElement& b) {
    return a.cells_ == b.cells_ && a.values_ == b.values_ && a.exceptions_ == b.exceptions_;
  }

 private:
  Context ctx_;
  std::vector<Word> cells_;
  std::vector<int> values_;
  std::map<DyadicPoint, int> exceptions_;
};

int eval(const KElement& a, const DyadicPoint& x);
KElement identity_k(const Context& ctx);
KElement mul(const KElement& a, const KElement& b);
KElement inv(const KElement& a);
KElement conj(const KElement& b, const KElement& a);  // b a b^-1

// pi(v)(a)(x) = beta^{-n}(a(v^-1 x)) with n the slope exponent of v at v^-1 x.
KElement act(const VElement& v, const KElement& a);

// R_i(a)(x) = beta^-1(a(ix)).
std::pair<KElement, KElement> caret(const KElement& a);
KElement caret_inv(const KElement& a0, const KElement& a1);
// R_u = R_{u_m} ∘ ... ∘ R_{u_0}, so R_u(a)(x) = beta^{-|u|}(a(ux)).
KElement r_word(const KElement& a, const Word& u);
// The element supported in C_u whose R_u is b.
KElement place(const KElement& b, const Word& u);

SupportSet support(const KElement& a);
KElement restrict(const KElement& a, const Cylinder& c);
KElement component(const KElement& a, const Word& u);
std::vector<KElement> decompose(const KElement& a, const Tree& t);
bool is_R_invariant(const KElement& a);

// Applies a homomorphism pointwise, landing in `target`.
KElement map_values(const KElement& a, const GroupHom& f, const Context& target);

// Tree route through the caret maps: pi(t)(a) = (R_l(a)) over the leaves l,
// and its inverse assembling a tuple back into one element.
std::vector<KElement> pi_tree(const KElement& a, const Tree& t);
KElement pi_tree_inv(const std::vector<KElement>& parts, const Tree& t);

// base{C:<u>=<elt>,...} exc{P:<x>=<elt>,...}; identity-valued cells are omitted.
std::string to_string(const KElement& a);
KElement parse_kelement(std::string_view text, const Context& ctx);

}  // namespace vwreath
