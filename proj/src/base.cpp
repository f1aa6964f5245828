#include "vwreath/base.hpp"

#include <algorithm>
#include <numeric>

#include "vwreath/error.hpp"
#include "vwreath/text.hpp"

namespace vwreath {

TwistContext::TwistContext(Group group, GroupHom twist) : group_(std::move(group)), twist_(std::move(twist)) {
  if (!twist_.source()->same_table(*group_) || !twist_.is_endomorphism() || !twist_.is_bijective()) {
    throw PreconditionError("the twist must be an automorphism of the group");
  }
  std::vector<int> current(group_->order());
  std::iota(current.begin(), current.end(), 0);
  const std::vector<int> start = current;
  do {
    powers_.push_back(current);
    for (int& g : current) g = twist_(g);
  } while (current != start);
}

int TwistContext::twist_pow(int g, long n) const {
  const long m = static_cast<long>(powers_.size());
  long k = n % m;
  if (k < 0) k += m;
  return powers_[static_cast<std::size_t>(k)][static_cast<std::size_t>(g)];
}

bool TwistContext::same_as(const TwistContext& other) const {
  return this == &other || (group_->same_table(*other.group_) && twist_ == other.twist_);
}

Context make_context(const Group& group, const GroupHom& twist) { return std::make_shared<const TwistContext>(group, twist); }

Context make_context(const Group& group) { return make_context(group, identity_hom(group)); }

// ---- KElement ------------------------------------------------------------

KElement::KElement(Context ctx) : ctx_(std::move(ctx)), cells_{Word{}}, values_{ctx_->group()->identity()} {}

KElement::KElement(Context ctx, std::vector<Word> cells, std::vector<int> values, std::map<DyadicPoint, int> exceptions)
    : ctx_(std::move(ctx)) {
  if (cells.size() != values.size()) throw PreconditionError("one value per cell is required");
  const int n = static_cast<int>(ctx_->group()->order());
  std::vector<std::size_t> order(cells.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cells[a] < cells[b]; });
  std::vector<Word> sorted;
  std::vector<int> vals;
  for (std::size_t i : order) {
    if (values[i] < 0 || values[i] >= n) throw PreconditionError("cell value out of range");
    sorted.push_back(cells[i]);
    vals.push_back(values[i]);
  }
  require_complete_prefix_code(sorted);
  for (const auto& [x, g] : exceptions) {
    if (g < 0 || g >= n) throw PreconditionError("exception value out of range");
    if (g != vals[locate(sorted, x)]) exceptions_.emplace(x, g);
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cells_.push_back(sorted[i]);
    values_.push_back(vals[i]);
    while (cells_.size() >= 2) {
      const std::size_t k = cells_.size();
      if (!(are_siblings(cells_[k - 2], cells_[k - 1]) && cells_[k - 2].last_bit() == 0 && values_[k - 2] == values_[k - 1])) {
        break;
      }
      Word parent = cells_[k - 2].parent();
      cells_.pop_back();
      values_.pop_back();
      cells_.back() = parent;
    }
  }
}

KElement KElement::constant(Context ctx, int g) { return KElement(std::move(ctx), {Word{}}, {g}); }

KElement KElement::point_mass(Context ctx, const DyadicPoint& x, int g) {
  const int e = ctx->group()->identity();
  return KElement(std::move(ctx), {Word{}}, {e}, {{x, g}});
}

int KElement::cell_value(const DyadicPoint& x) const { return values_[locate(cells_, x)]; }

int KElement::operator()(const DyadicPoint& x) const {
  if (auto it = exceptions_.find(x); it != exceptions_.end()) return it->second;
  return cell_value(x);
}

bool KElement::is_identity() const { return is_constant() && values_[0] == group()->identity(); }

bool KElement::is_exception_only() const { return cells_.size() == 1 && values_[0] == group()->identity(); }

int eval(const KElement& a, const DyadicPoint& x) { return a(x); }

KElement identity_k(const Context& ctx) { return KElement(ctx); }

namespace {

void require_same(const KElement& a, const KElement& b) {
  if (!a.context()->same_as(*b.context())) throw PreconditionError("elements belong to different base groups");
}

std::vector<Word> cylinder_code(const Word& u) { return complete_prefix_code({u}); }

}  // namespace

KElement mul(const KElement& a, const KElement& b) {
  require_same(a, b);
  const FiniteGroup& g = *a.group();
  std::vector<Word> cells = common_refinement(a.cells(), b.cells());
  std::vector<int> values;
  values.reserve(cells.size());
  for (const Word& c : cells) {
    values.push_back(g.mul(a.values()[*locate(a.cells(), c)], b.values()[*locate(b.cells(), c)]));
  }
  std::map<DyadicPoint, int> exc;
  for (const auto& [x, _] : a.exceptions()) exc[x] = g.mul(a(x), b(x));
  for (const auto& [x, _] : b.exceptions()) exc[x] = g.mul(a(x), b(x));
  return KElement(a.context(), std::move(cells), std::move(values), std::move(exc));
}

KElement inv(const KElement& a) {
  const FiniteGroup& g = *a.group();
  std::vector<int> values;
  for (int v : a.values()) values.push_back(g.inv(v));
  std::map<DyadicPoint, int> exc;
  for (const auto& [x, v] : a.exceptions()) exc[x] = g.inv(v);
  return KElement(a.context(), a.cells(), std::move(values), std::move(exc));
}

KElement conj(const KElement& b, const KElement& a) { return mul(mul(b, a), inv(b)); }

KElement act(const VElement& v, const KElement& a) {
  const TwistContext& ctx = *a.context();
  std::vector<Word> refined = common_refinement(a.cells(), v.domain());
  std::vector<Word> cells;
  std::vector<int> values;
  for (const Word& c : refined) {
    const std::size_t i = *locate(v.domain(), c);
    const Word& d = v.domain()[i];
    const Word& r = v.range()[i];
    const long n = static_cast<long>(d.size()) - static_cast<long>(r.size());
    cells.push_back(r + c.drop(d.size()));
    values.push_back(ctx.twist_pow(a.values()[*locate(a.cells(), c)], -n));
  }
  std::map<DyadicPoint, int> exc;
  for (const auto& [x, g] : a.exceptions()) exc[act_point(v, x)] = ctx.twist_pow(g, -slope(v, x));
  return KElement(a.context(), std::move(cells), std::move(values), std::move(exc));
}

KElement r_word(const KElement& a, const Word& u) {
  if (u.empty()) return a;
  const TwistContext& ctx = *a.context();
  const long shift = -static_cast<long>(u.size());
  std::vector<Word> cells;
  std::vector<int> values;
  for (const Word& c : common_refinement(a.cells(), cylinder_code(u))) {
    if (!u.is_prefix_of(c)) continue;
    cells.push_back(c.drop(u.size()));
    values.push_back(ctx.twist_pow(a.values()[*locate(a.cells(), c)], shift));
  }
  std::map<DyadicPoint, int> exc;
  for (const auto& [x, g] : a.exceptions()) {
    if (has_prefix(x, u)) exc[drop_prefix(x, u.size())] = ctx.twist_pow(g, shift);
  }
  return KElement(a.context(), std::move(cells), std::move(values), std::move(exc));
}

std::pair<KElement, KElement> caret(const KElement& a) { return {r_word(a, Word("0")), r_word(a, Word("1"))}; }

KElement place(const KElement& b, const Word& u) {
  if (u.empty()) return b;
  const TwistContext& ctx = *b.context();
  const int e = b.group()->identity();
  const long shift = static_cast<long>(u.size());
  std::vector<Word> cells;
  std::vector<int> values;
  for (const Word& c : cylinder_code(u)) {
    if (c == u) continue;
    cells.push_back(c);
    values.push_back(e);
  }
  for (std::size_t i = 0; i < b.cells().size(); ++i) {
    cells.push_back(u + b.cells()[i]);
    values.push_back(ctx.twist_pow(b.values()[i], shift));
  }
  std::map<DyadicPoint, int> exc;
  for (const auto& [x, g] : b.exceptions()) exc[prepend(u, x)] = ctx.twist_pow(g, shift);
  return KElement(b.context(), std::move(cells), std::move(values), std::move(exc));
}

KElement caret_inv(const KElement& a0, const KElement& a1) {
  require_same(a0, a1);
  return mul(place(a0, Word("0")), place(a1, Word("1")));
}

SupportSet support(const KElement& a) {
  const int e = a.group()->identity();
  std::vector<Cylinder> cyls;
  for (std::size_t i = 0; i < a.cells().size(); ++i) {
    if (a.values()[i] != e) cyls.emplace_back(a.cells()[i]);
  }
  std::vector<DyadicPoint> pts;
  for (const auto& [x, g] : a.exceptions()) {
    if (g != e) pts.push_back(x);
  }
  return SupportSet(std::move(cyls), std::move(pts));
}

KElement restrict(const KElement& a, const Cylinder& c) {
  const Word& u = c.prefix();
  if (u.empty()) return a;
  const int e = a.group()->identity();
  std::vector<Word> cells = common_refinement(a.cells(), cylinder_code(u));
  std::vector<int> values;
  for (const Word& w : cells) values.push_back(u.is_prefix_of(w) ? a.values()[*locate(a.cells(), w)] : e);
  std::map<DyadicPoint, int> exc;
  for (const auto& [x, g] : a.exceptions()) {
    if (has_prefix(x, u)) exc[x] = g;
  }
  return KElement(a.context(), std::move(cells), std::move(values), std::move(exc));
}

KElement component(const KElement& a, const Word& u) { return restrict(a, Cylinder(u)); }

std::vector<KElement> decompose(const KElement& a, const Tree& t) {
  std::vector<KElement> out;
  for (const Word& l : t.leaves()) out.push_back(component(a, l));
  return out;
}

bool is_R_invariant(const KElement& a) {
  auto [a0, a1] = caret(a);
  return a0 == a && a1 == a;
}

KElement map_values(const KElement& a, const GroupHom& f, const Context& target) {
  if (!f.source()->same_table(*a.group()) || !f.target()->same_table(*target->group())) {
    throw PreconditionError("homomorphism does not match the base groups");
  }
  std::vector<int> values;
  for (int g : a.values()) values.push_back(f(g));
  std::map<DyadicPoint, int> exc;
  for (const auto& [x, g] : a.exceptions()) exc[x] = f(g);
  return KElement(target, a.cells(), std::move(values), std::move(exc));
}

std::vector<KElement> pi_tree(const KElement& a, const Tree& t) {
  std::vector<KElement> out;
  for (const Word& l : t.leaves()) out.push_back(r_word(a, l));
  return out;
}

KElement pi_tree_inv(const std::vector<KElement>& parts, const Tree& t) {
  if (parts.size() != t.leaf_count()) throw PreconditionError("tuple size does not match the tree");
  KElement out = identity_k(parts.front().context());
  for (std::size_t i = 0; i < parts.size(); ++i) out = mul(out, place(parts[i], t.leaves()[i]));
  return out;
}

// ---- text ----------------------------------------------------------------

std::string to_string(const KElement& a) {
  const FiniteGroup& g = *a.group();
  std::string out = "base{";
  bool first = true;
  for (std::size_t i = 0; i < a.cells().size(); ++i) {
    if (a.values()[i] == g.identity()) continue;
    out += (first ? "" : ", ") + to_string(Cylinder(a.cells()[i])) + "=" + g.name(a.values()[i]);
    first = false;
  }
  out += "} exc{";
  first = true;
  for (const auto& [x, v] : a.exceptions()) {
    out += (first ? "" : ", ") + to_string(x) + "=" + g.name(v);
    first = false;
  }
  return out + "}";
}

namespace {

// Parses the body of base{...} or exc{...} into (key, element) pairs.
std::vector<std::pair<std::string_view, int>> parse_assignments(std::string_view body, std::size_t offset,
                                                                const FiniteGroup& g) {
  std::vector<std::pair<std::string_view, int>> out;
  if (text::trim(body).empty()) return out;
  for (const auto& piece : text::split_top_level(body, ',', offset)) {
    const auto eq = piece.text.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected '<key>=<element>'", piece.offset);
    try {
      out.emplace_back(text::trim(piece.text.substr(0, eq)), g.element(text::trim(piece.text.substr(eq + 1))));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), piece.offset);
    }
  }
  return out;
}

std::optional<std::pair<std::string_view, std::size_t>> section(std::string_view s, std::string_view key) {
  const auto at = s.find(key);
  if (at == std::string_view::npos) return std::nullopt;
  const auto open = at + key.size();
  const auto close = s.find('}', open);
  if (close == std::string_view::npos) throw ParseError("unterminated '" + std::string(key) + "'", at);
  return std::make_pair(s.substr(open, close - open), open);
}

}  // namespace

KElement parse_kelement(std::string_view t, const Context& ctx) {
  const FiniteGroup& g = *ctx->group();
  auto base = section(t, "base{");
  auto exc = section(t, "exc{");
  if (!base && !exc) throw ParseError("expected 'base{...}' and/or 'exc{...}'", 0);
  std::vector<Word> cells;
  std::vector<int> values;
  if (base) {
    for (const auto& [key, v] : parse_assignments(base->first, base->second, g)) {
      cells.push_back(parse_cylinder(key).prefix());
      values.push_back(v);
    }
  }
  std::vector<Word> full;
  try {
    full = complete_prefix_code(cells);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("base cells: ") + e.what(), base ? base->second : 0);
  }
  std::vector<int> full_values;
  for (const Word& w : full) {
    auto it = std::find(cells.begin(), cells.end(), w);
    full_values.push_back(it == cells.end() ? g.identity() : values[static_cast<std::size_t>(it - cells.begin())]);
  }
  std::map<DyadicPoint, int> points;
  if (exc) {
    for (const auto& [key, v] : parse_assignments(exc->first, exc->second, g)) {
      auto x = parse_point(key);
      if (!points.emplace(x, v).second) throw ParseError("duplicate exception point " + to_string(x), exc->second);
    }
  }
  return KElement(ctx, std::move(full), std::move(full_values), std::move(points));
}

}  // namespace vwreath
