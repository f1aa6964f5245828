#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "vwreath/base.hpp"
#include "vwreath/thompson.hpp"

namespace vwreath {

// The pair (a, v) denoting the product a·v.
struct GElement {
  KElement k;
  VElement v;

  friend bool operator==(const GElement&, const GElement&) = default;
};

// An action of V on the base group; the semidirect law is
// (a, v)(b, w) = (a·pi(v)(b), vw).
class GroupModel {
 public:
  explicit GroupModel(Context ctx) : ctx_(std::move(ctx)) {}
  virtual ~GroupModel() = default;

  const Context& context() const { return ctx_; }
  virtual KElement act(const VElement& v, const KElement& a) const = 0;
  virtual std::string label() const = 0;

  GElement identity() const;
  GElement from_k(const KElement& a) const { return {a, identity_v()}; }
  GElement from_v(const VElement& v) const;
  GElement mul(const GElement& g, const GElement& h) const;
  GElement inv(const GElement& g) const;
  GElement conj(const GElement& g, const GElement& h) const;  // g h g^-1
  GElement commutator(const GElement& g, const GElement& h) const;  // g h g^-1 h^-1

 private:
  Context ctx_;
};

using Model = std::shared_ptr<const GroupModel>;

// The twisted permutational wreath product.
class WreathModel : public GroupModel {
 public:
  using GroupModel::GroupModel;
  KElement act(const VElement& v, const KElement& a) const override { return vwreath::act(v, a); }
  std::string label() const override { return "wreath"; }
};

// The action determined by a pair of mutually inverse caret maps
// split: K -> K^2 and join: K^2 -> K, evaluated through the tree pair of v.
class CaretModel : public GroupModel {
 public:
  using Split = std::function<std::pair<KElement, KElement>(const KElement&)>;
  using Join = std::function<KElement(const KElement&, const KElement&)>;

  CaretModel(Context ctx, Split split, Join join, std::string label);
  KElement act(const VElement& v, const KElement& a) const override;
  std::string label() const override { return label_; }

  // Component of a at the word u: split repeatedly along the letters of u.
  KElement r_word(const KElement& a, const Word& u) const;
  KElement join_tree(const std::vector<KElement>& parts, const Tree& t) const;

 private:
  Split split_;
  Join join_;
  std::string label_;
};

Model wreath_model(const Context& ctx);
// Caret maps of the wreath model evaluated through the tree route.
Model caret_model(const Context& ctx);
// split(a) = caret(b a b^-1), the model for R∘ad(b).
Model conjugated_model(const Context& ctx, const KElement& b);
// split(a) = (R_1(a), R_0(a)).
Model swapped_model(const Context& ctx);

VElement project_v(const GElement& g);
bool in_k(const GElement& g);

// Z(Gamma) ∩ Gamma^beta: the values of the central constants.
Subgroup center_values(const TwistContext& ctx);
bool is_central(const GElement& g);
// Constant z with z in Z(Gamma), R-invariant; the second description of the centre.
bool in_R_invariant_center(const KElement& a);

// For central z and a proper cylinder C_u: (v, z_J) with J disjoint from C_u,
// v(J_0) = J, v(J_1) = C_u, so that [v, z_J] = z restricted to C_u.
std::pair<VElement, KElement> centre_commutator_witness(const Context& ctx, int z, const Word& u);

// <KElement> ; <VElement>
std::string to_string(const GElement& g);
GElement parse_gelement(std::string_view text, const Context& ctx);

}  // namespace vwreath
