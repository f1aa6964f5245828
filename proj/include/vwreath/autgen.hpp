#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vwreath/rigidity.hpp"

namespace vwreath {

// Automorphisms of the untwisted wreath product, as composites of the
// standard factors. A6 carries a homomorphism psi: Gamma -> Z(Gamma); the
// central map it induces is psi of the product of the exception deviations
// a(x)·(cell value at x)^-1.
enum class AutTag { A1, A2, A3, A4, A6 };

struct AutFactor {
  AutTag tag;
  std::variant<VElement, GroupHom, int, KElement> payload;
};

AutFactor a1(const VElement& phi);
AutFactor a2(const GroupHom& beta);
AutFactor a3(int z);
AutFactor a4(const KElement& h);
AutFactor a6(const GroupHom& psi);

std::string to_string(AutTag tag);
std::string to_string(const AutFactor& f, const FiniteGroup& g);

// s(z)_v: z^n on the range cell of each domain cell with slope exponent n.
KElement s_cocycle(const Context& ctx, int z, const VElement& v);
// s0(z)_v(x) = z^{p_v(x)}, p_v(x) = log2 v'(v^-1 x) - nu(x) + nu(v^-1 x), nu(x) = -|stem(x)|.
KElement s0_cocycle(const Context& ctx, int z, const VElement& v);

// Central map of an A6 factor.
int a6_zeta(const GroupHom& psi, const KElement& a);

// Single factors and their composite A6∘A4∘A3∘A2∘A1 (A1 applied first).
Isomorphism factor_iso(const Context& ctx, const AutFactor& f);
Isomorphism build(const Context& ctx, const std::vector<AutFactor>& factors);

struct Factorization {
  VElement phi;
  GroupHom beta;
  int z;
  KElement h;  // normalized by h(00...) = e
  GroupHom psi;
  Isomorphism residual;
  Report residual_report;

  // The non-trivial factors, in canonical order.
  std::vector<AutFactor> factors() const;
};

struct FactorOptions {
  std::size_t max_split_depth = 12;
  std::size_t min_fit_depth = 4;
  std::size_t max_fit_depth = 7;
  std::vector<KElement> residual_samples;
};

// Throws ExtractionError when a step finds data outside the constructible class.
Factorization factor(const Isomorphism& theta, const FactorOptions& options = {});

// Phi as an element of V, fitted on cylinders and verified exactly against
// the V-parts of theta on the generators.
VElement extract_v_phi(const Isomorphism& theta, std::size_t max_depth = 12);

struct CocycleSplit {
  int z;
  std::map<DyadicPoint, int> f;  // normalized by f(00...) = e
};
// delta_v = s(z)_v·[f, v] with delta central-valued; f is read at the probes.
CocycleSplit cocycle_factorize(const Context& ctx, const std::function<KElement(const VElement&)>& delta,
                               const std::vector<DyadicPoint>& probes);

// Support preservation on the samples and identity on point masses at the
// probes and on the generators of V.
Report a5_check(const Isomorphism& theta, const std::vector<KElement>& samples,
                const std::vector<DyadicPoint>& probes);

// A1(<v>) * A2(<hom>) * A3(<elt>) * A4(<kelement>) * A6(<hom>), any subset;
// "id" is the empty composite.
std::vector<AutFactor> parse_factors(std::string_view text, const Context& ctx);
std::string to_string(const std::vector<AutFactor>& factors, const FiniteGroup& g);

}  // namespace vwreath
