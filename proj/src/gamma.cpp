#include "vwreath/gamma.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "vwreath/error.hpp"

namespace vwreath {

FiniteGroup::FiniteGroup(std::vector<int> table, std::vector<std::string> names, std::string label,
                         bool check_associativity)
    : n_(names.size()), table_(std::move(table)), names_(std::move(names)), label_(std::move(label)) {
  if (n_ == 0) throw PreconditionError("a group has at least one element");
  if (table_.size() != n_ * n_) throw PreconditionError("multiplication table has the wrong size");
  for (int v : table_) {
    if (v < 0 || static_cast<std::size_t>(v) >= n_) throw PreconditionError("table entry out of range");
  }
  const int n = static_cast<int>(n_);
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw PreconditionError("table has no identity element");
  inverse_.assign(n_, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
    }
    if (inverse_[static_cast<std::size_t>(a)] < 0) throw PreconditionError("element " + names_[static_cast<std::size_t>(a)] + " has no inverse");
  }
  if (check_associativity) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw PreconditionError("table is not associative");
  }
  std::set<std::string> unique_names(names_.begin(), names_.end());
  if (unique_names.size() != n_) throw PreconditionError("element names are not unique");

  std::vector<bool> reached(n_, false);
  reached[static_cast<std::size_t>(identity_)] = true;
  for (int g = 0; g < n; ++g) {
    if (reached[static_cast<std::size_t>(g)]) continue;
    generators_.push_back(g);
    Subgroup s = generated_subgroup(*this, generators_);
    for (int x : s) reached[static_cast<std::size_t>(x)] = true;
  }
  parent_.assign(n_, -1);
  via_.assign(n_, -1);
  std::vector<bool> seen(n_, false);
  std::deque<int> queue{identity_};
  seen[static_cast<std::size_t>(identity_)] = true;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    bfs_.push_back(x);
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      int y = mul(x, generators_[k]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        parent_[static_cast<std::size_t>(y)] = x;
        via_[static_cast<std::size_t>(y)] = static_cast<int>(k);
        queue.push_back(y);
      }
    }
  }
}

int FiniteGroup::pow(int a, long k) const {
  const long ord = element_order(a);
  k %= ord;
  if (k < 0) k += ord;
  int out = identity_;
  for (long i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroup::element(std::string_view name) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  throw ParseError("unknown element '" + std::string(name) + "' of " + label_, 0);
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (mul(static_cast<int>(a), static_cast<int>(b)) != mul(static_cast<int>(b), static_cast<int>(a))) return false;
  return true;
}

bool FiniteGroup::is_central(int g) const {
  for (std::size_t x = 0; x < n_; ++x)
    if (mul(g, static_cast<int>(x)) != mul(static_cast<int>(x), g)) return false;
  return true;
}

// ---- standard groups -------------------------------------------------------

namespace {

Group from_rule(std::size_t n, const std::vector<std::string>& names, const std::string& label, auto&& rule) {
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = rule(static_cast<int>(a), static_cast<int>(b));
  return std::make_shared<const FiniteGroup>(std::move(table), names, label, n <= 64);
}

std::string cycle_notation(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

Group cyclic_group(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group order must be positive");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  const int m = static_cast<int>(n);
  return from_rule(n, names, "cyclic:" + std::to_string(n), [m](int a, int b) { return (a + b) % m; });
}

Group symmetric_group(std::size_t n) {
  if (n == 0 || n > 6) throw PreconditionError("sym:n is supported for 1 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = static_cast<int>(i);
    names.push_back(cycle_notation(perms[i]));
  }
  // (a b)(i) = a(b(i)).
  return from_rule(perms.size(), names, "sym:" + std::to_string(n), [&](int a, int b) {
    std::vector<int> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][i])];
    return index.at(c);
  });
}

Group dihedral_group(std::size_t n) {
  if (n == 0) throw PreconditionError("dihedral:n needs n >= 1");
  // Index k is r^k, index n + k is s r^k; r s = s r^-1.
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("r" + std::to_string(k));
  for (std::size_t k = 0; k < n; ++k) names.push_back("s" + std::to_string(k));
  const int m = static_cast<int>(n);
  return from_rule(2 * n, names, "dihedral:" + std::to_string(n), [m](int a, int b) {
    int ja = a / m, ka = a % m, jb = b / m, kb = b % m;
    int k = ((jb ? -ka : ka) + kb) % m;
    if (k < 0) k += m;
    return ((ja + jb) % 2) * m + k;
  });
}

Group dicyclic_group(std::size_t n) {
  if (n == 0) throw PreconditionError("dicyclic:n needs n >= 1");
  // Index k is a^k, index 2n + k is a^k x; x a = a^-1 x and x^2 = a^n.
  const int m = static_cast<int>(2 * n);
  std::vector<std::string> names;
  for (int k = 0; k < m; ++k) names.push_back("a" + std::to_string(k));
  for (int k = 0; k < m; ++k) names.push_back("a" + std::to_string(k) + "x");
  const int half = static_cast<int>(n);
  return from_rule(4 * n, names, "dicyclic:" + std::to_string(n), [m, half](int a, int b) {
    int ja = a / m, ka = a % m, jb = b / m, kb = b % m;
    int k = ka + (ja ? -kb : kb);
    int j = ja + jb;
    if (j == 2) {
      j = 0;
      k += half;
    }
    k %= m;
    if (k < 0) k += m;
    return j * m + k;
  });
}

Group product_group(const Group& a, const Group& b) {
  const std::size_t na = a->order(), nb = b->order();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) names.push_back("(" + a->name(static_cast<int>(i)) + "," + b->name(static_cast<int>(j)) + ")");
  const int m = static_cast<int>(nb);
  return from_rule(na * nb, names, "product:(" + a->label() + "),(" + b->label() + ")", [&](int x, int y) {
    return a->mul(x / m, y / m) * m + b->mul(x % m, y % m);
  });
}

Group trivial_group() { return cyclic_group(1); }

// ---- subgroups -------------------------------------------------------------

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> frontier{g.identity()};
  in[static_cast<std::size_t>(g.identity())] = true;
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int s : gens) {
      int y = g.mul(x, s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        frontier.push_back(y);
      }
    }
  }
  Subgroup out;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (in[i]) out.push_back(static_cast<int>(i));
  return out;
}

Subgroup center(const FiniteGroup& g) {
  Subgroup out;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.is_central(static_cast<int>(i))) out.push_back(static_cast<int>(i));
  return out;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::set<int> comms;
  const int n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) comms.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return generated_subgroup(g, {comms.begin(), comms.end()});
}

Subgroup fixed_subgroup(const GroupHom& beta) {
  if (!beta.is_endomorphism()) throw PreconditionError("fixed_subgroup needs an endomorphism");
  Subgroup out;
  for (std::size_t i = 0; i < beta.source()->order(); ++i)
    if (beta(static_cast<int>(i)) == static_cast<int>(i)) out.push_back(static_cast<int>(i));
  return out;
}

Subgroup image(const GroupHom& f, const Subgroup& s) {
  std::set<int> out;
  for (int x : s) out.insert(f(x));
  return {out.begin(), out.end()};
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (!std::binary_search(s.begin(), s.end(), g.identity())) return false;
  for (int a : s)
    for (int b : s)
      if (!std::binary_search(s.begin(), s.end(), g.mul(a, g.inv(b)))) return false;
  return true;
}

std::pair<Group, std::vector<int>> subgroup_as_group(const Group& g, const Subgroup& s) {
  if (!is_subgroup(*g, s)) throw PreconditionError("not a subgroup");
  const std::size_t n = s.size();
  std::vector<int> table(n * n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(g->name(s[i]));
    for (std::size_t j = 0; j < n; ++j) {
      int p = g->mul(s[i], s[j]);
      table[i * n + j] = static_cast<int>(std::lower_bound(s.begin(), s.end(), p) - s.begin());
    }
  }
  auto sub = std::make_shared<const FiniteGroup>(std::move(table), std::move(names),
                                                 "subgroup of " + g->label(), false);
  return {sub, s};
}

// ---- homomorphisms ---------------------------------------------------------

bool is_hom(const FiniteGroup& source, const FiniteGroup& target, const std::vector<int>& values) {
  if (values.size() != source.order()) return false;
  for (int v : values)
    if (v < 0 || static_cast<std::size_t>(v) >= target.order()) return false;
  const int n = static_cast<int>(source.order());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (values[static_cast<std::size_t>(source.mul(a, b))] !=
          target.mul(values[static_cast<std::size_t>(a)], values[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

GroupHom::GroupHom(Group source, Group target, std::vector<int> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  if (!is_hom(*source_, *target_, values_)) throw PreconditionError("map is not a group homomorphism");
}

bool GroupHom::is_bijective() const {
  if (source_->order() != target_->order()) return false;
  std::vector<bool> hit(target_->order(), false);
  for (int v : values_) {
    if (hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

GroupHom identity_hom(const Group& g) {
  std::vector<int> v(g->order());
  std::iota(v.begin(), v.end(), 0);
  return GroupHom(g, g, std::move(v));
}

GroupHom trivial_hom(const Group& source, const Group& target) {
  return GroupHom(source, target, std::vector<int>(source->order(), target->identity()));
}

GroupHom inner_hom(const Group& g, int h) {
  std::vector<int> v(g->order());
  for (std::size_t x = 0; x < g->order(); ++x) v[x] = g->conj(h, static_cast<int>(x));
  return GroupHom(g, g, std::move(v));
}

GroupHom power_hom(const Group& g, long k) {
  std::vector<int> v(g->order());
  for (std::size_t x = 0; x < g->order(); ++x) v[x] = g->pow(static_cast<int>(x), k);
  return GroupHom(g, g, std::move(v));
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
  if (!g.target()->same_table(*f.source())) throw PreconditionError("cannot compose homomorphisms");
  std::vector<int> v(g.source()->order());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = f(g(static_cast<int>(x)));
  return GroupHom(g.source(), f.target(), std::move(v));
}

GroupHom inverse(const GroupHom& f) {
  if (!f.is_bijective()) throw PreconditionError("homomorphism is not invertible");
  std::vector<int> v(f.target()->order());
  for (std::size_t x = 0; x < v.size(); ++x) v[static_cast<std::size_t>(f(static_cast<int>(x)))] = static_cast<int>(x);
  return GroupHom(f.target(), f.source(), std::move(v));
}

std::size_t automorphism_order(const GroupHom& f) {
  if (!f.is_endomorphism() || !f.is_bijective()) throw PreconditionError("not an automorphism");
  std::size_t order = 1;
  GroupHom p = f;
  const GroupHom id = identity_hom(f.source());
  while (!(p == id)) {
    p = compose(f, p);
    ++order;
  }
  return order;
}

GroupHom power(const GroupHom& f, long n) {
  if (!f.is_endomorphism()) throw PreconditionError("powers need an endomorphism");
  GroupHom base = f;
  if (n < 0) {
    base = inverse(f);
    n = -n;
  }
  GroupHom out = identity_hom(f.source());
  for (long i = 0; i < n; ++i) out = compose(base, out);
  return out;
}

namespace {

// Values of the homomorphism determined by generator images, or empty.
std::vector<int> extend_from_generators(const FiniteGroup& s, const FiniteGroup& t, const std::vector<int>& images) {
  std::vector<int> values(s.order(), -1);
  values[static_cast<std::size_t>(s.identity())] = t.identity();
  for (int x : s.bfs_order()) {
    if (x == s.identity()) continue;
    values[static_cast<std::size_t>(x)] = t.mul(values[static_cast<std::size_t>(s.parent(x))], images[static_cast<std::size_t>(s.via(x))]);
  }
  if (!is_hom(s, t, values)) return {};
  return values;
}

}  // namespace

std::vector<GroupHom> homomorphisms(const Group& source, const Group& target, Exec exec) {
  const auto& gens = source->generators();
  std::vector<std::vector<int>> options(gens.size());
  std::size_t total = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const int ord = source->element_order(gens[k]);
    for (std::size_t y = 0; y < target->order(); ++y)
      if (ord % target->element_order(static_cast<int>(y)) == 0) options[k].push_back(static_cast<int>(y));
    total *= options[k].size();
  }
  std::vector<std::vector<int>> slots(total);
  for_each_index(total, exec, [&](std::size_t idx) {
    std::vector<int> images(gens.size());
    std::size_t rest = idx;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      images[k] = options[k][rest % options[k].size()];
      rest /= options[k].size();
    }
    slots[idx] = extend_from_generators(*source, *target, images);
  });
  std::vector<std::vector<int>> found;
  for (auto& s : slots)
    if (!s.empty()) found.push_back(std::move(s));
  std::sort(found.begin(), found.end());
  std::vector<GroupHom> out;
  for (auto& v : found) out.emplace_back(source, target, std::move(v));
  return out;
}

std::vector<GroupHom> homomorphisms_brute_force(const Group& source, const Group& target) {
  const std::size_t n = source->order(), m = target->order();
  double count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= static_cast<double>(m);
  if (count > 2e7) throw PreconditionError("brute-force map enumeration too large");
  std::vector<GroupHom> out;
  std::vector<int> values(n, 0);
  for (;;) {
    if (is_hom(*source, *target, values)) out.emplace_back(source, target, values);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++values[i] < static_cast<int>(m)) break;
      values[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<GroupHom> endomorphisms(const Group& g, Exec exec) { return homomorphisms(g, g, exec); }

std::vector<GroupHom> automorphisms(const Group& g, Exec exec) { return isomorphisms(g, g, exec); }

std::vector<GroupHom> isomorphisms(const Group& a, const Group& b, Exec exec) {
  std::vector<GroupHom> out;
  if (a->order() != b->order()) return out;
  for (auto& f : homomorphisms(a, b, exec))
    if (f.is_bijective()) out.push_back(std::move(f));
  return out;
}

std::optional<OuterConjugacy> outer_conjugate(const GroupHom& beta_s, const GroupHom& beta_t, Exec exec) {
  if (!beta_s.is_endomorphism() || !beta_s.is_bijective() || !beta_t.is_endomorphism() || !beta_t.is_bijective()) {
    throw PreconditionError("outer_conjugate needs automorphisms");
  }
  const Group& gs = beta_s.source();
  const Group& gt = beta_t.source();
  std::vector<GroupHom> isos = isomorphisms(gs, gt, exec);
  std::vector<int> first_h(isos.size(), -1);
  for_each_index(isos.size(), exec, [&](std::size_t i) {
    const GroupHom& gamma = isos[i];
    const GroupHom gamma_inv = inverse(gamma);
    std::vector<int> middle(gt->order());
    for (std::size_t x = 0; x < gt->order(); ++x) middle[x] = gamma(beta_s(gamma_inv(static_cast<int>(x))));
    for (std::size_t h = 0; h < gt->order(); ++h) {
      bool ok = true;
      for (std::size_t x = 0; x < gt->order() && ok; ++x)
        ok = beta_t(static_cast<int>(x)) == gt->conj(static_cast<int>(h), middle[x]);
      if (ok) {
        first_h[i] = static_cast<int>(h);
        return;
      }
    }
  });
  for (std::size_t i = 0; i < isos.size(); ++i)
    if (first_h[i] >= 0) return OuterConjugacy{isos[i], first_h[i]};
  return std::nullopt;
}

EventualImage eventual_image(const GroupHom& beta) {
  if (!beta.is_endomorphism()) throw PreconditionError("eventual_image needs an endomorphism");
  Subgroup s(beta.source()->order());
  std::iota(s.begin(), s.end(), 0);
  std::size_t k = 0;
  for (;;) {
    Subgroup next = image(beta, s);
    if (next == s) break;
    s = std::move(next);
    ++k;
  }
  auto [group, embedding] = subgroup_as_group(beta.source(), s);
  std::vector<int> values(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    values[i] = static_cast<int>(std::lower_bound(s.begin(), s.end(), beta(s[i])) - s.begin());
  }
  GroupHom restricted(group, group, std::move(values));
  return EventualImage{s, group, embedding, restricted, k};
}

// ---- omega data ------------------------------------------------------------

OmegaData::OmegaData(Group g, std::vector<int> table) : group_(std::move(g)), table_(std::move(table)) {
  const std::size_t n = group_->order();
  if (table_.size() != n * n) throw PreconditionError("omega table has the wrong size");
  const int m = static_cast<int>(n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          if ((*this)(group_->mul(a, c), group_->mul(b, d)) != group_->mul((*this)(a, b), (*this)(c, d)))
            throw PreconditionError("omega is not a homomorphism from the square of the group");
}

OmegaData OmegaData::from_pair(const GroupHom& omega0, const GroupHom& omega1) {
  const Group& g = omega0.source();
  if (!omega0.is_endomorphism() || !omega1.is_endomorphism() || !g->same_table(*omega1.source())) {
    throw PreconditionError("omega factors must be endomorphisms of one group");
  }
  const std::size_t n = g->order();
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int x = omega0(static_cast<int>(a)), y = omega1(static_cast<int>(b));
      if (g->mul(x, y) != g->mul(y, x)) throw PreconditionError("images of omega_0 and omega_1 must commute");
      table[a * n + b] = g->mul(x, y);
    }
  return OmegaData(g, std::move(table));
}

Subgroup gamma_omega_subgroup(const OmegaData& omega) {
  Subgroup t(omega.group()->order());
  std::iota(t.begin(), t.end(), 0);
  for (;;) {
    std::set<int> next;
    for (int a : t)
      for (int b : t) next.insert(omega(a, b));
    Subgroup n(next.begin(), next.end());
    if (n == t) return t;
    t = std::move(n);
  }
}

std::optional<std::map<Word, int>> omega_b_witness(const OmegaData& omega, int h, std::size_t depth) {
  const FiniteGroup& g = *omega.group();
  const Subgroup core = gamma_omega_subgroup(omega);
  std::map<Word, int> b;
  b[Word{}] = g.identity();
  std::vector<Word> level{Word{}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Word> next;
    for (const Word& u : level) {
      const int target = g.mul(g.inv(h), b.at(u));
      std::optional<std::pair<int, int>> found;
      for (int x : core) {
        for (int y : core)
          if (omega(x, y) == target) {
            found = {x, y};
            break;
          }
        if (found) break;
      }
      for (int x = 0; !found && x < static_cast<int>(g.order()); ++x)
        for (int y = 0; y < static_cast<int>(g.order()); ++y)
          if (omega(x, y) == target) {
            found = {x, y};
            break;
          }
      if (!found) return std::nullopt;
      b[u.child(0)] = found->first;
      b[u.child(1)] = found->second;
      next.push_back(u.child(0));
      next.push_back(u.child(1));
    }
    level = std::move(next);
  }
  return b;
}

std::string to_string(const GroupHom& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.values().size(); ++i) out += (i ? "," : "") + f.target()->name(f.values()[i]);
  return out + "]";
}

std::string to_string(const FiniteGroup& g, const Subgroup& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + g.name(s[i]);
  return out + "}";
}

}  // namespace vwreath
