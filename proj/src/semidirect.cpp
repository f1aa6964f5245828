#include "vwreath/semidirect.hpp"

#include <algorithm>

#include "vwreath/error.hpp"
#include "vwreath/text.hpp"

namespace vwreath {

GElement GroupModel::identity() const { return {identity_k(ctx_), identity_v()}; }

GElement GroupModel::from_v(const VElement& v) const { return {identity_k(ctx_), v}; }

GElement GroupModel::mul(const GElement& g, const GElement& h) const {
  return {vwreath::mul(g.k, act(g.v, h.k)), vwreath::mul(g.v, h.v)};
}

GElement GroupModel::inv(const GElement& g) const {
  VElement vi = vwreath::inv(g.v);
  return {act(vi, vwreath::inv(g.k)), vi};
}

GElement GroupModel::conj(const GElement& g, const GElement& h) const { return mul(mul(g, h), inv(g)); }

GElement GroupModel::commutator(const GElement& g, const GElement& h) const {
  return mul(mul(g, h), mul(inv(g), inv(h)));
}

CaretModel::CaretModel(Context ctx, Split split, Join join, std::string label)
    : GroupModel(std::move(ctx)), split_(std::move(split)), join_(std::move(join)), label_(std::move(label)) {}

KElement CaretModel::r_word(const KElement& a, const Word& u) const {
  KElement out = a;
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto parts = split_(out);
    out = u.bit(i) == 0 ? parts.first : parts.second;
  }
  return out;
}

namespace {

void split_below(const CaretModel::Split& split, const KElement& a, const Word& node, const std::vector<Word>& leaves,
                 std::vector<KElement>& out) {
  auto it = std::lower_bound(leaves.begin(), leaves.end(), node);
  if (it != leaves.end() && *it == node) {
    out[static_cast<std::size_t>(it - leaves.begin())] = a;
    return;
  }
  auto [a0, a1] = split(a);
  split_below(split, a0, node.child(0), leaves, out);
  split_below(split, a1, node.child(1), leaves, out);
}

KElement join_below(const CaretModel::Join& join, const std::vector<KElement>& parts, const Word& node,
                    const std::vector<Word>& leaves) {
  auto it = std::lower_bound(leaves.begin(), leaves.end(), node);
  if (it != leaves.end() && *it == node) return parts[static_cast<std::size_t>(it - leaves.begin())];
  return join(join_below(join, parts, node.child(0), leaves), join_below(join, parts, node.child(1), leaves));
}

}  // namespace

KElement CaretModel::join_tree(const std::vector<KElement>& parts, const Tree& t) const {
  if (parts.size() != t.leaf_count()) throw PreconditionError("tuple size does not match the tree");
  return join_below(join_, parts, Word{}, t.leaves());
}

KElement CaretModel::act(const VElement& v, const KElement& a) const {
  auto [t, sigma, s] = v.tree_pair();
  std::vector<KElement> parts(t.leaf_count(), a);
  split_below(split_, a, Word{}, t.leaves(), parts);
  return join_tree(permute_tuple(sigma, parts), s);
}

Model wreath_model(const Context& ctx) { return std::make_shared<const WreathModel>(ctx); }

Model caret_model(const Context& ctx) {
  return std::make_shared<const CaretModel>(
      ctx, [](const KElement& a) { return caret(a); },
      [](const KElement& a0, const KElement& a1) { return caret_inv(a0, a1); }, "caret");
}

Model conjugated_model(const Context& ctx, const KElement& b) {
  KElement bi = inv(b);
  return std::make_shared<const CaretModel>(
      ctx, [b, bi](const KElement& a) { return caret(mul(mul(b, a), bi)); },
      [b, bi](const KElement& a0, const KElement& a1) { return mul(mul(bi, caret_inv(a0, a1)), b); },
      "conjugated(" + to_string(b) + ")");
}

Model swapped_model(const Context& ctx) {
  return std::make_shared<const CaretModel>(
      ctx,
      [](const KElement& a) {
        auto [a0, a1] = caret(a);
        return std::make_pair(a1, a0);
      },
      [](const KElement& a0, const KElement& a1) { return caret_inv(a1, a0); }, "swapped");
}

VElement project_v(const GElement& g) { return g.v; }

bool in_k(const GElement& g) { return g.v.is_identity(); }

Subgroup center_values(const TwistContext& ctx) {
  Subgroup out;
  for (int z : center(*ctx.group())) {
    if (ctx.twist()(z) == z) out.push_back(z);
  }
  return out;
}

bool is_central(const GElement& g) {
  if (!in_k(g) || !g.k.is_constant()) return false;
  const Subgroup zs = center_values(*g.k.context());
  return std::binary_search(zs.begin(), zs.end(), g.k.values()[0]);
}

bool in_R_invariant_center(const KElement& a) {
  if (!a.is_constant() || !a.group()->is_central(a.values()[0])) return false;
  return is_R_invariant(a);
}

std::pair<VElement, KElement> centre_commutator_witness(const Context& ctx, int z, const Word& u) {
  if (u.empty()) throw PreconditionError("the cylinder must be proper");
  const Word j = u.sibling().child(0);
  VElement v = extend_partial({{j.child(0), j}, {j.child(1), u}});
  KElement zj = restrict(KElement::constant(ctx, z), Cylinder(j));
  return {v, zj};
}

std::string to_string(const GElement& g) { return to_string(g.k) + " ; " + to_string(g.v); }

GElement parse_gelement(std::string_view t, const Context& ctx) {
  const auto semi = t.rfind(';');
  if (semi == std::string_view::npos) throw ParseError("expected '<KElement> ; <VElement>'", 0);
  KElement k = parse_kelement(t.substr(0, semi), ctx);
  VElement v = [&] {
    try {
      return parse_velement(t.substr(semi + 1));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), semi + 1 + e.position());
    }
  }();
  return {k, v};
}

}  // namespace vwreath
