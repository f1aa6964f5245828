#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vwreath/parallel.hpp"
#include "vwreath/words.hpp"

namespace vwreath {

// Finite group given by its multiplication table over indices 0..n-1.
class FiniteGroup {
 public:
  // Validates identity and inverses; `check_associativity` costs O(n^3).
  FiniteGroup(std::vector<int> table, std::vector<std::string> names, std::string label,
              bool check_associativity = true);

  std::size_t order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int pow(int a, long k) const;
  int conj(int h, int g) const { return mul(mul(h, g), inv(h)); }  // h g h^-1
  int element_order(int a) const;
  const std::string& name(int a) const { return names_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& names() const { return names_; }
  // Throws ParseError for unknown names.
  int element(std::string_view name) const;
  const std::string& label() const { return label_; }
  bool is_abelian() const;
  bool is_central(int g) const;
  const std::vector<int>& table() const { return table_; }

  // Greedy generating set and a spanning tree: each non-identity element e
  // equals mul(parent(e), generators()[via(e)]).
  const std::vector<int>& generators() const { return generators_; }
  int parent(int e) const { return parent_[static_cast<std::size_t>(e)]; }
  int via(int e) const { return via_[static_cast<std::size_t>(e)]; }
  // Elements in breadth-first order from the identity.
  const std::vector<int>& bfs_order() const { return bfs_; }

  bool same_table(const FiniteGroup& other) const { return table_ == other.table_; }

 private:
  std::size_t n_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
  std::string label_;
  int identity_ = 0;
  std::vector<int> generators_;
  std::vector<int> parent_;
  std::vector<int> via_;
  std::vector<int> bfs_;
};

using Group = std::shared_ptr<const FiniteGroup>;

Group cyclic_group(std::size_t n);
Group symmetric_group(std::size_t n);
Group dihedral_group(std::size_t n);  // order 2n
Group dicyclic_group(std::size_t n);  // order 4n; dicyclic_group(2) is Q8
Group product_group(const Group& a, const Group& b);
Group trivial_group();

// Sorted element indices.
using Subgroup = std::vector<int>;

class GroupHom;
Subgroup center(const FiniteGroup& g);
Subgroup commutator_subgroup(const FiniteGroup& g);
Subgroup fixed_subgroup(const GroupHom& beta);
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
Subgroup image(const GroupHom& f, const Subgroup& s);
bool is_subgroup(const FiniteGroup& g, const Subgroup& s);

// The subgroup as a group in its own right (names inherited) with its inclusion.
std::pair<Group, std::vector<int>> subgroup_as_group(const Group& g, const Subgroup& s);

class GroupHom {
 public:
  // Throws PreconditionError unless `values` is a homomorphism.
  GroupHom(Group source, Group target, std::vector<int> values);

  const Group& source() const { return source_; }
  const Group& target() const { return target_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int g) const { return values_[static_cast<std::size_t>(g)]; }
  bool is_bijective() const;
  bool is_endomorphism() const { return source_ == target_ || source_->same_table(*target_); }

  friend bool operator==(const GroupHom& a, const GroupHom& b) { return a.values_ == b.values_; }

 private:
  Group source_;
  Group target_;
  std::vector<int> values_;
};

bool is_hom(const FiniteGroup& source, const FiniteGroup& target, const std::vector<int>& values);
GroupHom identity_hom(const Group& g);
GroupHom trivial_hom(const Group& source, const Group& target);
GroupHom inner_hom(const Group& g, int h);  // ad(h)
GroupHom power_hom(const Group& g, long k);  // g -> g^k; requires a homomorphism
GroupHom compose(const GroupHom& f, const GroupHom& g);  // f∘g
GroupHom inverse(const GroupHom& f);
GroupHom power(const GroupHom& f, long n);  // f^n, n may be negative for bijections
// Order of a bijective endomorphism as a permutation.
std::size_t automorphism_order(const GroupHom& f);

// All homomorphisms, sorted lexicographically by value array. The parallel
// and serial kernels enumerate generator images; the brute-force reference
// tries all |target|^|source| maps.
std::vector<GroupHom> homomorphisms(const Group& source, const Group& target, Exec exec = Exec::parallel);
std::vector<GroupHom> homomorphisms_brute_force(const Group& source, const Group& target);
std::vector<GroupHom> endomorphisms(const Group& g, Exec exec = Exec::parallel);
std::vector<GroupHom> automorphisms(const Group& g, Exec exec = Exec::parallel);
std::vector<GroupHom> isomorphisms(const Group& a, const Group& b, Exec exec = Exec::parallel);

struct OuterConjugacy {
  GroupHom gamma;  // isomorphism source -> target
  int h;           // element of the target group
};
// First (gamma, h) in search order with beta_t = ad(h)∘gamma∘beta_s∘gamma^-1.
std::optional<OuterConjugacy> outer_conjugate(const GroupHom& beta_s, const GroupHom& beta_t,
                                              Exec exec = Exec::parallel);

struct EventualImage {
  Subgroup elements;           // in the original group
  Group group;                 // the subgroup as a group
  std::vector<int> embedding;  // subgroup index -> original index
  GroupHom restricted;         // beta on the subgroup, an automorphism
  std::size_t stabilization_index;
};
EventualImage eventual_image(const GroupHom& beta);

// Homomorphism Gamma x Gamma -> Gamma, stored as a table omega(a, b).
class OmegaData {
 public:
  OmegaData(Group g, std::vector<int> table);
  static OmegaData from_pair(const GroupHom& omega0, const GroupHom& omega1);

  const Group& group() const { return group_; }
  int operator()(int a, int b) const { return table_[static_cast<std::size_t>(a) * group_->order() + static_cast<std::size_t>(b)]; }
  const std::vector<int>& table() const { return table_; }

 private:
  Group group_;
  std::vector<int> table_;
};

Subgroup gamma_omega_subgroup(const OmegaData& omega);
// b(e) = identity and omega(b(u0), b(u1)) = h^-1 b(u) for |u| < depth.
std::optional<std::map<Word, int>> omega_b_witness(const OmegaData& omega, int h, std::size_t depth);

// ---- textual specs ---------------------------------------------------------

// cyclic:n, sym:n, dihedral:n, dicyclic:n, product:<a>,<b>, trivial, the
// shorthands Zn Sn Dn Q8 V4, a table block, or a path to a file holding one.
Group parse_group(std::string_view spec);
Group parse_group_table(std::string_view block);
// id, inv, zero, x<k>, ad(<elt>), or a value list [v0,v1,...] in index order.
GroupHom parse_hom(std::string_view spec, const Group& source, const Group& target);
// "<hom0>/<hom1>" meaning omega(g, h) = hom0(g) hom1(h).
OmegaData parse_omega(std::string_view spec, const Group& g);

std::string to_string(const GroupHom& f);
std::string to_string(const FiniteGroup& g, const Subgroup& s);

}  // namespace vwreath
