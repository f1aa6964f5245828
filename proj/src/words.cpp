#include "vwreath/words.hpp"

#include <algorithm>
#include <set>

#include "vwreath/error.hpp"
#include "vwreath/text.hpp"

namespace vwreath {

Word::Word(std::string_view digits) : digits_(digits) {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] != '0' && digits_[i] != '1') {
      throw ParseError("binary word may only contain 0 and 1", i);
    }
  }
}

Word Word::child(int b) const {
  Word w = *this;
  w.digits_.push_back(b ? '1' : '0');
  return w;
}

Word Word::parent() const {
  if (empty()) throw PreconditionError("the empty word has no parent");
  Word w = *this;
  w.digits_.pop_back();
  return w;
}

Word Word::sibling() const {
  if (empty()) throw PreconditionError("the empty word has no sibling");
  Word w = *this;
  w.digits_.back() = w.digits_.back() == '0' ? '1' : '0';
  return w;
}

Word Word::prefix(std::size_t n) const {
  Word w;
  w.digits_ = digits_.substr(0, n);
  return w;
}

Word Word::drop(std::size_t n) const {
  Word w;
  w.digits_ = n >= digits_.size() ? std::string{} : digits_.substr(n);
  return w;
}

bool Word::is_prefix_of(const Word& other) const {
  return digits_.size() <= other.digits_.size() &&
         other.digits_.compare(0, digits_.size(), digits_) == 0;
}

std::size_t Word::trailing_zeros() const {
  std::size_t n = 0;
  while (n < digits_.size() && digits_[digits_.size() - 1 - n] == '0') ++n;
  return n;
}

Word operator+(const Word& a, const Word& b) {
  Word w;
  w.digits_ = a.digits_ + b.digits_;
  return w;
}

bool are_siblings(const Word& a, const Word& b) {
  return !a.empty() && a.size() == b.size() && a.last_bit() != b.last_bit() &&
         a.str().compare(0, a.size() - 1, b.str(), 0, b.size() - 1) == 0;
}

DyadicPoint canonicalize(const Word& w) {
  DyadicPoint x;
  x.stem_ = w.prefix(w.size() - w.trailing_zeros());
  return x;
}

std::pair<Cylinder, Cylinder> split(const Cylinder& c) {
  return {Cylinder(c.prefix().child(0)), Cylinder(c.prefix().child(1))};
}

bool has_prefix(const DyadicPoint& x, const Word& u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (x.digit(i) != u.bit(i)) return false;
  }
  return true;
}

bool contains(const Cylinder& c, const DyadicPoint& x) { return has_prefix(x, c.prefix()); }

bool contains(const Cylinder& outer, const Cylinder& inner) {
  return outer.prefix().is_prefix_of(inner.prefix());
}

bool disjoint(const Cylinder& a, const Cylinder& b) {
  return !a.prefix().is_prefix_of(b.prefix()) && !b.prefix().is_prefix_of(a.prefix());
}

DyadicPoint drop_prefix(const DyadicPoint& x, std::size_t n) { return canonicalize(x.stem().drop(n)); }

DyadicPoint prepend(const Word& u, const DyadicPoint& x) { return canonicalize(u + x.stem()); }

// ---- prefix codes --------------------------------------------------------

bool is_complete_prefix_code(const std::vector<Word>& code) {
  if (code.empty()) return false;
  for (std::size_t i = 0; i + 1 < code.size(); ++i) {
    if (!(code[i] < code[i + 1]) || code[i].is_prefix_of(code[i + 1])) return false;
  }
  // Kraft equality: sum 2^{-|w|} = 1, evaluated exactly by merging siblings.
  std::vector<Word> stack;
  for (const Word& w : code) {
    stack.push_back(w);
    while (stack.size() >= 2 && are_siblings(stack[stack.size() - 2], stack.back()) &&
           stack[stack.size() - 2].last_bit() == 0) {
      Word p = stack.back().parent();
      stack.pop_back();
      stack.back() = p;
    }
  }
  return stack.size() == 1 && stack.front().empty();
}

void require_complete_prefix_code(const std::vector<Word>& code) {
  if (!is_complete_prefix_code(code)) {
    std::string listed;
    for (const Word& w : code) listed += (listed.empty() ? "" : ",") + w.str();
    throw PreconditionError("not a standard dyadic partition: [" + listed + "]");
  }
}

std::optional<std::size_t> locate(const std::vector<Word>& code, const Word& w) {
  auto it = std::upper_bound(code.begin(), code.end(), w);
  if (it == code.begin()) return std::nullopt;
  --it;
  if (!it->is_prefix_of(w)) return std::nullopt;
  return static_cast<std::size_t>(it - code.begin());
}

std::size_t locate(const std::vector<Word>& code, const DyadicPoint& x) {
  std::size_t longest = 0;
  for (const Word& w : code) longest = std::max(longest, w.size());
  Word padded = x.stem();
  while (padded.size() < longest) padded = padded.child(0);
  auto idx = locate(code, padded);
  if (!idx) throw PreconditionError("point not covered by prefix code");
  return *idx;
}

std::vector<Word> common_refinement(const std::vector<Word>& a, const std::vector<Word>& b) {
  std::vector<Word> all;
  all.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(all));
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Word> out;
  out.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i + 1 < all.size() && all[i].is_prefix_of(all[i + 1])) continue;
    out.push_back(all[i]);
  }
  return out;
}

std::vector<Word> complete_prefix_code(std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    if (words[i].is_prefix_of(words[i + 1])) {
      throw PreconditionError("cylinders C_" + words[i].str() + " and C_" + words[i + 1].str() +
                              " overlap");
    }
  }
  if (words.empty()) return {Word{}};
  std::set<Word> internal;
  for (const Word& w : words) {
    for (std::size_t n = 0; n < w.size(); ++n) internal.insert(w.prefix(n));
  }
  std::set<Word> leaves(words.begin(), words.end());
  for (const Word& p : internal) {
    for (int b = 0; b < 2; ++b) {
      Word c = p.child(b);
      if (!internal.count(c)) leaves.insert(c);
    }
  }
  return {leaves.begin(), leaves.end()};
}

Sdp::Sdp(std::vector<Word> cells) : cells_(std::move(cells)) { require_complete_prefix_code(cells_); }

// ---- support sets ----------------------------------------------------------

SupportSet::SupportSet(std::vector<Cylinder> cylinders, std::vector<DyadicPoint> points) {
  std::sort(cylinders.begin(), cylinders.end());
  cylinders.erase(std::unique(cylinders.begin(), cylinders.end()), cylinders.end());
  std::vector<Word> stack;
  for (const Cylinder& c : cylinders) {
    if (!stack.empty() && stack.back().is_prefix_of(c.prefix())) continue;
    stack.push_back(c.prefix());
    while (stack.size() >= 2 && are_siblings(stack[stack.size() - 2], stack.back())) {
      Word p = stack.back().parent();
      stack.pop_back();
      stack.back() = p;
    }
  }
  for (Word& w : stack) cylinders_.emplace_back(std::move(w));

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const DyadicPoint& x : points) {
    bool covered = false;
    for (const Cylinder& c : cylinders_) {
      if (vwreath::contains(c, x)) {
        covered = true;
        break;
      }
    }
    if (!covered) points_.push_back(x);
  }
}

bool SupportSet::contains(const DyadicPoint& x) const {
  if (std::binary_search(points_.begin(), points_.end(), x)) return true;
  for (const Cylinder& c : cylinders_) {
    if (vwreath::contains(c, x)) return true;
  }
  return false;
}

bool SupportSet::contains(const Cylinder& inner) const {
  for (const Cylinder& c : cylinders_) {
    if (vwreath::contains(c, inner)) return true;
  }
  return false;
}

SupportSet support_union(const SupportSet& s, const SupportSet& t) {
  std::vector<Cylinder> cyl = s.cylinders();
  cyl.insert(cyl.end(), t.cylinders().begin(), t.cylinders().end());
  std::vector<DyadicPoint> pts = s.points();
  pts.insert(pts.end(), t.points().begin(), t.points().end());
  return SupportSet(std::move(cyl), std::move(pts));
}

SupportSet support_intersection(const SupportSet& s, const SupportSet& t) {
  std::vector<Cylinder> cyl;
  for (const Cylinder& a : s.cylinders()) {
    for (const Cylinder& b : t.cylinders()) {
      if (contains(a, b)) {
        cyl.push_back(b);
      } else if (contains(b, a)) {
        cyl.push_back(a);
      }
    }
  }
  std::vector<DyadicPoint> pts;
  for (const DyadicPoint& x : s.points()) {
    if (t.contains(x)) pts.push_back(x);
  }
  for (const DyadicPoint& x : t.points()) {
    if (s.contains(x)) pts.push_back(x);
  }
  return SupportSet(std::move(cyl), std::move(pts));
}

bool support_intersect_empty(const SupportSet& s, const SupportSet& t) {
  return support_intersection(s, t).empty();
}

bool support_equal(const SupportSet& s, const SupportSet& t) { return s == t; }

bool support_subset(const SupportSet& s, const SupportSet& t) {
  for (const Cylinder& c : s.cylinders()) {
    if (!t.contains(c)) return false;
  }
  for (const DyadicPoint& x : s.points()) {
    if (!t.contains(x)) return false;
  }
  return true;
}

// ---- text ----------------------------------------------------------------

std::string to_string(const Word& w) { return w.str(); }
std::string to_string(const DyadicPoint& x) { return "P:" + x.stem().str(); }
std::string to_string(const Cylinder& c) { return "C:" + c.prefix().str(); }

std::string to_string(const SupportSet& s) {
  std::string out = "{";
  bool first = true;
  for (const Cylinder& c : s.cylinders()) {
    out += (first ? "" : ", ") + to_string(c);
    first = false;
  }
  for (const DyadicPoint& x : s.points()) {
    out += (first ? "" : ", ") + to_string(x);
    first = false;
  }
  return out + "}";
}

Word parse_word(std::string_view text) { return Word(text::normalize_empty_word(text)); }

Cylinder parse_cylinder(std::string_view t) {
  t = text::trim(t);
  if (!text::starts_with(t, "C:")) throw ParseError("cylinder must start with 'C:'", 0);
  return Cylinder(parse_word(t.substr(2)));
}

DyadicPoint parse_point(std::string_view t) {
  t = text::trim(t);
  if (text::starts_with(t, "P:")) t.remove_prefix(2);
  return canonicalize(parse_word(t));
}

SupportSet parse_support_set(std::string_view t) {
  auto body = text::unwrap(t, '{', '}');
  std::vector<Cylinder> cyl;
  std::vector<DyadicPoint> pts;
  if (!text::trim(body).empty()) {
    for (const auto& piece : text::split_top_level(body, ',', 1)) {
      auto item = text::trim(piece.text);
      if (text::starts_with(item, "C:")) {
        cyl.push_back(parse_cylinder(item));
      } else if (text::starts_with(item, "P:")) {
        pts.push_back(parse_point(item));
      } else {
        throw ParseError("support set items are C:<word> or P:<word>", piece.offset);
      }
    }
  }
  return SupportSet(std::move(cyl), std::move(pts));
}

}  // namespace vwreath
