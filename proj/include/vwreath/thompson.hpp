#pragma once

#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "vwreath/forest.hpp"
#include "vwreath/words.hpp"

namespace vwreath {

// log2 of the derivative v'(x).
using SlopeExp = int;

// Element of Thompson's group V as a reduced pairing d_i -> r_i of two
// standard dyadic partitions; acts by d_i x -> r_i x. Domains are sorted.
class VElement {
 public:
  VElement() : domain_{Word{}}, range_{Word{}} {}
  // Any valid (not necessarily reduced) pairing; the stored form is reduced.
  VElement(std::vector<Word> domain, std::vector<Word> range);

  const std::vector<Word>& domain() const { return domain_; }
  const std::vector<Word>& range() const { return range_; }
  std::size_t size() const { return domain_.size(); }
  bool is_identity() const { return domain_.size() == 1; }
  std::size_t depth() const;
  // Order-preserving on cells.
  bool in_F() const;
  // View as (t, sigma, s) with d_i = l_t^i and r_i = l_s^{sigma(i)}.
  std::tuple<Tree, Permutation, Tree> tree_pair() const;

  friend bool operator==(const VElement&, const VElement&) = default;
  friend auto operator<=>(const VElement& a, const VElement& b) {
    if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
    return a.range_ <=> b.range_;
  }

 private:
  std::vector<Word> domain_;
  std::vector<Word> range_;
};

VElement make(const Tree& t, const Permutation& sigma, const Tree& s);
VElement from_sdp_bijection(const Sdp& domain, const Sdp& range, const Permutation& pairing);
VElement identity_v();
VElement mul(const VElement& v, const VElement& w);  // v∘w
VElement inv(const VElement& v);
VElement pow(const VElement& v, int n);

DyadicPoint act_point(const VElement& v, const DyadicPoint& x);
// Image of a word prefix when it lies inside a single domain cell.
std::optional<Word> act_word(const VElement& v, const Word& u);
SupportSet act_cylinder(const VElement& v, const Cylinder& c);
SupportSet act_support(const VElement& v, const SupportSet& s);
SlopeExp slope(const VElement& v, const DyadicPoint& x);

// Extends a partial pairing of disjoint cylinders to an element of V: both
// sides are completed to partitions, the smaller complement is refined by
// splitting its shortest (then leftmost) cell until the counts agree, and the
// complementary cells are paired in lexicographic order.
VElement extend_partial(const std::vector<std::pair<Word, Word>>& pairs);
// v(ux) = mx.
VElement prefix_transport(const Word& u, const Word& m);
VElement swap_sdis(const Cylinder& j0, const Cylinder& j1, const std::vector<Cylinder>& fixed);
// Some v with v(00...) = x.
VElement transport_basepoint(const DyadicPoint& x);

bool fixes(const VElement& v, const Cylinder& c);
bool stabilizes(const VElement& v, const SupportSet& s);

// Standard generators A, B (of F), C (of T) and pi_0.
namespace gens {
VElement x0();
VElement x1();
VElement c();
VElement pi0();
VElement cell_swap();
std::vector<VElement> generating_set();
}  // namespace gens

std::string to_string(const VElement& v);
VElement parse_velement(std::string_view text);

}  // namespace vwreath
