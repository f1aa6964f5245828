#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vwreath/semidirect.hpp"

namespace vwreath {

struct Provenance {
  std::string description;
  // The spatial part, when it is known to be an element of V.
  std::optional<VElement> phi;
};

// An isomorphism between two semidirect products, known only through
// evaluation of itself and its inverse.
struct Isomorphism {
  Model source;
  Model target;
  std::function<GElement(const GElement&)> forward;
  std::function<GElement(const GElement&)> backward;
  Provenance provenance;

  GElement operator()(const GElement& g) const { return forward(g); }
};

Isomorphism identity_iso(const Model& m);
Isomorphism compose(const Isomorphism& f, const Isomorphism& g);  // f∘g
Isomorphism inverse(const Isomorphism& f);

struct Report {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void fail(std::string what) { failures.push_back(std::move(what)); }
};

// Multiplicativity on consecutive sample pairs, both round trips, and K onto K.
Report validate(const Isomorphism& iso, const std::vector<GElement>& samples,
                const std::vector<GElement>& target_samples = {});

// Canonical points with stems of length at most `max_stem`.
std::vector<DyadicPoint> standard_probes(std::size_t max_stem = 4);

// k = (constant c)·(point mass at y with value m), m != e.
struct PointMassSplit {
  int central;
  DyadicPoint point;
  int mass;
};
std::optional<PointMassSplit> split_point_mass(const KElement& k);

// probe < 0 selects the first non-identity element of Gamma.
DyadicPoint extract_phi(const Isomorphism& theta, const DyadicPoint& x, int probe = -1);
GroupHom extract_kappa_x(const Isomorphism& theta, const DyadicPoint& x);

struct CocycleValue {
  KElement c;
  VElement w;
};
// Splits theta(v); checks w(phi(x)) = phi(v(x)) at the probes.
CocycleValue extract_cocycle(const Isomorphism& theta, const VElement& v, const std::vector<DyadicPoint>& probes);

// The central constant zeta(a), read at phi(x) for some x outside supp(a).
int zeta_eval(const Isomorphism& theta, const KElement& a);
// theta(a) with its central constant removed.
KElement kappa0(const Isomorphism& theta, const KElement& a);
int kappa1_eval(const Isomorphism& theta, const KElement& a, const DyadicPoint& x);
// kappa1(a)^-1 kappa0(a) at phi(x); throws ExtractionError if not central.
int eta_eval(const Isomorphism& theta, const KElement& a, const DyadicPoint& x);

// supp(kappa0(a)) = phi(supp(a)), pointwise at the probes, the exception
// points and cylinder corners of a, and exactly when phi is known.
Report verify_spatial(const Isomorphism& theta, const KElement& a, const std::vector<DyadicPoint>& probes);
// For supp(a) inside C_u: kappa0(a) vanishes at phi(x) for probes x outside C_u.
Report verify_local(const Isomorphism& theta, const KElement& a, const Word& u, const std::vector<DyadicPoint>& probes);

using CentralMap = std::function<int(const GElement&)>;
// g -> theta(g)·zeta(g); zeta is checked on the samples to be central-valued,
// multiplicative and trivial on commutators.
Isomorphism theta_times_zeta(const Isomorphism& theta, const CentralMap& zeta, const std::vector<GElement>& samples);

struct DecompositionWitness {
  std::map<DyadicPoint, DyadicPoint> phi;
  std::map<DyadicPoint, GroupHom> kappa;
  std::vector<std::pair<VElement, CocycleValue>> cocycle;
};
DecompositionWitness decompose_iso(const Isomorphism& theta, const std::vector<DyadicPoint>& probes);
std::string to_string(const DecompositionWitness& w);

}  // namespace vwreath
