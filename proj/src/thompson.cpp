#include "vwreath/thompson.hpp"

#include <algorithm>
#include <numeric>

#include "vwreath/error.hpp"
#include "vwreath/text.hpp"

namespace vwreath {

VElement::VElement(std::vector<Word> domain, std::vector<Word> range) {
  if (domain.size() != range.size()) throw PreconditionError("domain and range sizes differ");
  std::vector<std::size_t> order(domain.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return domain[a] < domain[b]; });
  std::vector<Word> d, r;
  for (std::size_t i : order) {
    d.push_back(domain[i]);
    r.push_back(range[i]);
  }
  require_complete_prefix_code(d);
  std::vector<Word> sorted_range = r;
  std::sort(sorted_range.begin(), sorted_range.end());
  require_complete_prefix_code(sorted_range);

  // Merge sibling domain pairs mapped in order onto sibling range pairs.
  for (std::size_t i = 0; i < d.size(); ++i) {
    domain_.push_back(d[i]);
    range_.push_back(r[i]);
    while (domain_.size() >= 2) {
      const std::size_t n = domain_.size();
      const Word& d0 = domain_[n - 2];
      const Word& r0 = range_[n - 2];
      if (!(are_siblings(d0, domain_[n - 1]) && d0.last_bit() == 0 && are_siblings(r0, range_[n - 1]) &&
            r0.last_bit() == 0)) {
        break;
      }
      Word dp = d0.parent();
      Word rp = r0.parent();
      domain_.pop_back();
      range_.pop_back();
      domain_.back() = dp;
      range_.back() = rp;
    }
  }
}

std::size_t VElement::depth() const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < size(); ++i) d = std::max({d, domain_[i].size(), range_[i].size()});
  return d;
}

bool VElement::in_F() const {
  for (std::size_t i = 0; i + 1 < size(); ++i) {
    if (!(range_[i] < range_[i + 1])) return false;
  }
  return true;
}

std::tuple<Tree, Permutation, Tree> VElement::tree_pair() const {
  std::vector<Word> sorted = range_;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> images;
  for (const Word& r : range_) {
    images.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), r) - sorted.begin()));
  }
  return {Tree(domain_), Permutation(std::move(images)), Tree(std::move(sorted))};
}

VElement make(const Tree& t, const Permutation& sigma, const Tree& s) {
  if (t.leaf_count() != s.leaf_count() || sigma.size() != t.leaf_count()) {
    throw PreconditionError("tree pair sizes do not match");
  }
  std::vector<Word> range;
  for (std::size_t i = 0; i < t.leaf_count(); ++i) range.push_back(s.leaves()[static_cast<std::size_t>(sigma(static_cast<int>(i)))]);
  return VElement(t.leaves(), std::move(range));
}

VElement from_sdp_bijection(const Sdp& domain, const Sdp& range, const Permutation& pairing) {
  if (domain.size() != range.size() || pairing.size() != domain.size()) {
    throw PreconditionError("partition sizes do not match");
  }
  std::vector<Word> r;
  for (std::size_t i = 0; i < domain.size(); ++i) r.push_back(range.cells()[static_cast<std::size_t>(pairing(static_cast<int>(i)))]);
  return VElement(domain.cells(), std::move(r));
}

VElement identity_v() { return VElement(); }

VElement mul(const VElement& v, const VElement& w) {
  std::vector<Word> d, r;
  const auto& vd = v.domain();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Word& wd = w.domain()[i];
    const Word& wr = w.range()[i];
    if (auto j = locate(vd, wr)) {
      d.push_back(wd);
      r.push_back(v.range()[*j] + wr.drop(vd[*j].size()));
      continue;
    }
    for (auto it = std::lower_bound(vd.begin(), vd.end(), wr); it != vd.end() && wr.is_prefix_of(*it); ++it) {
      const auto j = static_cast<std::size_t>(it - vd.begin());
      d.push_back(wd + it->drop(wr.size()));
      r.push_back(v.range()[j]);
    }
  }
  return VElement(std::move(d), std::move(r));
}

VElement inv(const VElement& v) { return VElement(v.range(), v.domain()); }

VElement pow(const VElement& v, int n) {
  VElement base = n < 0 ? inv(v) : v;
  VElement out;
  for (int i = 0; i < (n < 0 ? -n : n); ++i) out = mul(base, out);
  return out;
}

DyadicPoint act_point(const VElement& v, const DyadicPoint& x) {
  std::size_t i = locate(v.domain(), x);
  return prepend(v.range()[i], drop_prefix(x, v.domain()[i].size()));
}

std::optional<Word> act_word(const VElement& v, const Word& u) {
  auto i = locate(v.domain(), u);
  if (!i) return std::nullopt;
  return v.range()[*i] + u.drop(v.domain()[*i].size());
}

SupportSet act_cylinder(const VElement& v, const Cylinder& c) {
  if (auto w = act_word(v, c.prefix())) return SupportSet({Cylinder(*w)}, {});
  std::vector<Cylinder> out;
  const auto& vd = v.domain();
  for (auto it = std::lower_bound(vd.begin(), vd.end(), c.prefix()); it != vd.end() && c.prefix().is_prefix_of(*it);
       ++it) {
    out.emplace_back(v.range()[static_cast<std::size_t>(it - vd.begin())]);
  }
  return SupportSet(std::move(out), {});
}

SupportSet act_support(const VElement& v, const SupportSet& s) {
  SupportSet out;
  for (const Cylinder& c : s.cylinders()) out = support_union(out, act_cylinder(v, c));
  std::vector<DyadicPoint> pts;
  for (const DyadicPoint& x : s.points()) pts.push_back(act_point(v, x));
  return support_union(out, SupportSet({}, std::move(pts)));
}

SlopeExp slope(const VElement& v, const DyadicPoint& x) {
  std::size_t i = locate(v.domain(), x);
  return static_cast<SlopeExp>(v.domain()[i].size()) - static_cast<SlopeExp>(v.range()[i].size());
}

namespace {

std::vector<Word> complement(const std::vector<Word>& code, const std::vector<Word>& used) {
  std::vector<Word> sorted_used = used;
  std::sort(sorted_used.begin(), sorted_used.end());
  std::vector<Word> out;
  for (const Word& w : code) {
    if (!std::binary_search(sorted_used.begin(), sorted_used.end(), w)) out.push_back(w);
  }
  return out;
}

void refine_to(std::vector<Word>& cells, std::size_t target) {
  while (cells.size() < target) {
    auto it = std::min_element(cells.begin(), cells.end(), [](const Word& a, const Word& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    Word w = *it;
    cells.erase(it);
    cells.push_back(w.child(0));
    cells.push_back(w.child(1));
    std::sort(cells.begin(), cells.end());
  }
}

}  // namespace

VElement extend_partial(const std::vector<std::pair<Word, Word>>& pairs) {
  std::vector<Word> ds, rs;
  for (const auto& [d, r] : pairs) {
    ds.push_back(d);
    rs.push_back(r);
  }
  std::vector<Word> dc = complement(complete_prefix_code(ds), ds);
  std::vector<Word> rc = complement(complete_prefix_code(rs), rs);
  if (dc.size() != rc.size()) {
    auto& smaller = dc.size() < rc.size() ? dc : rc;
    if (smaller.empty()) throw PreconditionError("partial pairing cannot be extended to an element of V");
    refine_to(smaller, std::max(dc.size(), rc.size()));
  }
  std::vector<Word> d = ds, r = rs;
  d.insert(d.end(), dc.begin(), dc.end());
  r.insert(r.end(), rc.begin(), rc.end());
  return VElement(std::move(d), std::move(r));
}

VElement prefix_transport(const Word& u, const Word& m) {
  if (u.empty() && m.empty()) return identity_v();
  if (u.empty() || m.empty()) throw PreconditionError("prefix transport between C_e and a proper cylinder");
  return extend_partial({{u, m}});
}

VElement swap_sdis(const Cylinder& j0, const Cylinder& j1, const std::vector<Cylinder>& fixed) {
  std::vector<std::pair<Word, Word>> pairs{{j0.prefix(), j1.prefix()}, {j1.prefix(), j0.prefix()}};
  for (const Cylinder& c : fixed) pairs.emplace_back(c.prefix(), c.prefix());
  std::vector<Word> all;
  for (const auto& p : pairs) all.push_back(p.first);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (!disjoint(Cylinder(all[i]), Cylinder(all[j]))) {
        throw PreconditionError("swap_sdis: cylinders C_" + all[i].str() + " and C_" + all[j].str() + " overlap");
      }
    }
  }
  return extend_partial(pairs);
}

VElement transport_basepoint(const DyadicPoint& x) {
  if (x.stem().empty()) return identity_v();
  return prefix_transport(Word("0"), x.stem().child(0));
}

bool fixes(const VElement& v, const Cylinder& c) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Word& d = v.domain()[i];
    if ((d.is_prefix_of(c.prefix()) || c.prefix().is_prefix_of(d)) && v.range()[i] != d) return false;
  }
  return true;
}

bool stabilizes(const VElement& v, const SupportSet& s) { return act_support(v, s) == s; }

namespace gens {
VElement x0() { return parse_velement("{0->00,10->01,11->1}"); }
VElement x1() { return parse_velement("{0->0,10->100,110->101,111->11}"); }
VElement c() { return parse_velement("{0->11,10->0,11->10}"); }
VElement pi0() { return parse_velement("{0->0,10->11,11->10}"); }
VElement cell_swap() { return parse_velement("{0->1,1->0}"); }
std::vector<VElement> generating_set() { return {x0(), x1(), c(), pi0()}; }
}  // namespace gens

std::string to_string(const VElement& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? ", " : "") + v.domain()[i].str() + "->" + v.range()[i].str();
  }
  return out + "}";
}

VElement parse_velement(std::string_view t) {
  auto body = text::trim(text::unwrap(t, '{', '}'));
  if (body.empty()) return identity_v();
  std::vector<Word> d, r;
  for (const auto& piece : text::split_top_level(body, ',', 1)) {
    auto arrow = piece.text.find("->");
    if (arrow == std::string_view::npos) throw ParseError("expected '<domain>-><range>'", piece.offset);
    try {
      d.push_back(parse_word(piece.text.substr(0, arrow)));
      r.push_back(parse_word(piece.text.substr(arrow + 2)));
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad word in V table: ") + e.what(), piece.offset);
    }
  }
  return VElement(std::move(d), std::move(r));
}

}  // namespace vwreath
