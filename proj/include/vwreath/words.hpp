#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vwreath {

// A finite word over {0,1}. Ordering is lexicographic with prefixes first,
// which is the left-to-right leaf order of any binary tree.
class Word {
 public:
  Word() = default;
  // Throws ParseError on characters other than '0' and '1'.
  explicit Word(std::string_view digits);

  const std::string& str() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  int bit(std::size_t i) const { return digits_[i] - '0'; }

  Word child(int b) const;
  Word parent() const;
  Word sibling() const;
  int last_bit() const { return bit(size() - 1); }
  Word prefix(std::size_t n) const;
  Word drop(std::size_t n) const;
  bool is_prefix_of(const Word& other) const;
  std::size_t trailing_zeros() const;

  friend Word operator+(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string digits_;
};

bool are_siblings(const Word& a, const Word& b);

// Dyadic rational stem·000...; the stem never ends in 0, the empty stem is 00...
class DyadicPoint {
 public:
  DyadicPoint() = default;
  const Word& stem() const { return stem_; }
  // i-th digit of the infinite expansion.
  int digit(std::size_t i) const { return i < stem_.size() ? stem_.bit(i) : 0; }

  friend auto operator<=>(const DyadicPoint&, const DyadicPoint&) = default;
  friend bool operator==(const DyadicPoint&, const DyadicPoint&) = default;

 private:
  friend DyadicPoint canonicalize(const Word& w);
  Word stem_;
};

DyadicPoint canonicalize(const Word& w);

// Standard dyadic interval C_u: all sequences with prefix u.
class Cylinder {
 public:
  Cylinder() = default;
  explicit Cylinder(Word prefix) : prefix_(std::move(prefix)) {}
  const Word& prefix() const { return prefix_; }

  friend auto operator<=>(const Cylinder&, const Cylinder&) = default;
  friend bool operator==(const Cylinder&, const Cylinder&) = default;

 private:
  Word prefix_;
};

std::pair<Cylinder, Cylinder> split(const Cylinder& c);
bool contains(const Cylinder& c, const DyadicPoint& x);
bool contains(const Cylinder& outer, const Cylinder& inner);
bool disjoint(const Cylinder& a, const Cylinder& b);
// True iff the infinite expansion of x begins with u.
bool has_prefix(const DyadicPoint& x, const Word& u);
// x with the first n digits removed; requires n <= |stem| or trailing zeros.
DyadicPoint drop_prefix(const DyadicPoint& x, std::size_t n);
DyadicPoint prepend(const Word& u, const DyadicPoint& x);

// ---- prefix codes --------------------------------------------------------

// Complete prefix code in lexicographic order (the leaves of a binary tree).
bool is_complete_prefix_code(const std::vector<Word>& code);
// Throws PreconditionError unless `code` is sorted, prefix-free and complete.
void require_complete_prefix_code(const std::vector<Word>& code);
// Index of the cell that is a prefix of w, if any.
std::optional<std::size_t> locate(const std::vector<Word>& code, const Word& w);
// Index of the cell containing x; the code must be complete.
std::size_t locate(const std::vector<Word>& code, const DyadicPoint& x);
// Finest common coarsening is the union of the codes; this returns the
// leaves of the smallest tree refining both.
std::vector<Word> common_refinement(const std::vector<Word>& a, const std::vector<Word>& b);
// Smallest complete prefix code containing the given pairwise disjoint words.
std::vector<Word> complete_prefix_code(std::vector<Word> words);

// Standard dyadic partition: cells of a complete prefix code.
class Sdp {
 public:
  Sdp() : cells_{Word{}} {}
  explicit Sdp(std::vector<Word> cells);
  const std::vector<Word>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  friend bool operator==(const Sdp&, const Sdp&) = default;

 private:
  std::vector<Word> cells_;
};

// Closed subset of Cantor space: finite union of cylinders plus finitely many
// isolated dyadic points, in the unique canonical form.
class SupportSet {
 public:
  SupportSet() = default;
  SupportSet(std::vector<Cylinder> cylinders, std::vector<DyadicPoint> points);

  const std::vector<Cylinder>& cylinders() const { return cylinders_; }
  const std::vector<DyadicPoint>& points() const { return points_; }
  bool empty() const { return cylinders_.empty() && points_.empty(); }
  bool contains(const DyadicPoint& x) const;
  bool contains(const Cylinder& c) const;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::vector<Cylinder> cylinders_;
  std::vector<DyadicPoint> points_;
};

SupportSet support_union(const SupportSet& s, const SupportSet& t);
SupportSet support_intersection(const SupportSet& s, const SupportSet& t);
bool support_intersect_empty(const SupportSet& s, const SupportSet& t);
bool support_equal(const SupportSet& s, const SupportSet& t);
bool support_subset(const SupportSet& s, const SupportSet& t);

std::string to_string(const Word& w);
std::string to_string(const DyadicPoint& x);
std::string to_string(const Cylinder& c);
std::string to_string(const SupportSet& s);

Word parse_word(std::string_view text);
Cylinder parse_cylinder(std::string_view text);
DyadicPoint parse_point(std::string_view text);
SupportSet parse_support_set(std::string_view text);

}  // namespace vwreath
