#include "vwreath/rigidity.hpp"

#include <algorithm>

#include "vwreath/error.hpp"

namespace vwreath {

Isomorphism identity_iso(const Model& m) {
  auto id = [](const GElement& g) { return g; };
  return Isomorphism{m, m, id, id, Provenance{"id", identity_v()}};
}

Isomorphism compose(const Isomorphism& f, const Isomorphism& g) {
  Provenance p{f.provenance.description + " * " + g.provenance.description, std::nullopt};
  if (f.provenance.phi && g.provenance.phi) p.phi = mul(*f.provenance.phi, *g.provenance.phi);
  auto ff = f.forward, gf = g.forward, fb = f.backward, gb = g.backward;
  return Isomorphism{g.source, f.target, [ff, gf](const GElement& x) { return ff(gf(x)); },
                     [fb, gb](const GElement& x) { return gb(fb(x)); }, std::move(p)};
}

Isomorphism inverse(const Isomorphism& f) {
  Provenance p{"(" + f.provenance.description + ")^-1", std::nullopt};
  if (f.provenance.phi) p.phi = inv(*f.provenance.phi);
  return Isomorphism{f.target, f.source, f.backward, f.forward, std::move(p)};
}

Report validate(const Isomorphism& iso, const std::vector<GElement>& samples,
                const std::vector<GElement>& target_samples) {
  Report r;
  const GroupModel& s = *iso.source;
  const GroupModel& t = *iso.target;
  std::vector<GElement> images;
  for (const GElement& g : samples) images.push_back(iso.forward(g));
  const std::vector<GElement>& tilde = target_samples.empty() ? images : target_samples;
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    const GElement& g = samples[i];
    const GElement& h = samples[(i + 1) % n];
    if (!(iso.forward(s.mul(g, h)) == t.mul(images[i], images[(i + 1) % n]))) {
      r.fail("forward not multiplicative at sample " + std::to_string(i));
    }
    if (!(iso.backward(images[i]) == g)) r.fail("backward(forward(g)) != g at sample " + std::to_string(i));
    if (in_k(g) != in_k(images[i])) r.fail("K not mapped onto K at sample " + std::to_string(i));
  }
  for (std::size_t i = 0; i < tilde.size(); ++i) {
    const GElement& g = tilde[i];
    const GElement& h = tilde[(i + 1) % tilde.size()];
    const GElement back = iso.backward(g);
    if (!(iso.forward(back) == g)) r.fail("forward(backward(g)) != g at target sample " + std::to_string(i));
    if (!(iso.backward(t.mul(g, h)) == s.mul(back, iso.backward(h)))) {
      r.fail("backward not multiplicative at target sample " + std::to_string(i));
    }
    if (in_k(g) != in_k(back)) r.fail("backward does not map K onto K at target sample " + std::to_string(i));
  }
  return r;
}

std::vector<DyadicPoint> standard_probes(std::size_t max_stem) {
  std::vector<DyadicPoint> out{DyadicPoint{}};
  std::vector<Word> level{Word{}};
  for (std::size_t len = 1; len <= max_stem; ++len) {
    std::vector<Word> next;
    for (const Word& w : level) {
      next.push_back(w.child(0));
      next.push_back(w.child(1));
      out.push_back(canonicalize(w.child(1)));
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<PointMassSplit> split_point_mass(const KElement& k) {
  if (k.cells().size() != 1 || k.exceptions().size() != 1) return std::nullopt;
  const FiniteGroup& g = *k.group();
  const int c = k.values()[0];
  const auto& [y, value] = *k.exceptions().begin();
  return PointMassSplit{c, y, g.mul(value, g.inv(c))};
}

namespace {

int first_nonidentity(const FiniteGroup& g) {
  for (int i = 0; i < static_cast<int>(g.order()); ++i) {
    if (i != g.identity()) return i;
  }
  throw PreconditionError("rigidity extraction needs a non-trivial group");
}

PointMassSplit point_image(const Isomorphism& theta, const DyadicPoint& x, int g) {
  const GroupModel& s = *theta.source;
  GElement image = theta(s.from_k(KElement::point_mass(s.context(), x, g)));
  if (!in_k(image)) throw ExtractionError("image of a point mass is not in the base group");
  auto split = split_point_mass(image.k);
  if (!split) {
    throw ExtractionError("image of the point mass at " + to_string(x) + " is not a central constant times a point mass: " +
                          to_string(image.k));
  }
  const Subgroup zs = center_values(*theta.target->context());
  if (!std::binary_search(zs.begin(), zs.end(), split->central)) {
    throw ExtractionError("constant part of a point-mass image is not central");
  }
  return *split;
}

}  // namespace

DyadicPoint extract_phi(const Isomorphism& theta, const DyadicPoint& x, int probe) {
  const FiniteGroup& g = *theta.source->context()->group();
  return point_image(theta, x, probe < 0 ? first_nonidentity(g) : probe).point;
}

GroupHom extract_kappa_x(const Isomorphism& theta, const DyadicPoint& x) {
  const Group& src = theta.source->context()->group();
  const Group& dst = theta.target->context()->group();
  std::vector<int> values(src->order(), dst->identity());
  std::optional<DyadicPoint> y;
  for (int g = 0; g < static_cast<int>(src->order()); ++g) {
    if (g == src->identity()) continue;
    PointMassSplit split = point_image(theta, x, g);
    if (y && !(*y == split.point)) throw ExtractionError("phi(" + to_string(x) + ") depends on the probe element");
    y = split.point;
    values[static_cast<std::size_t>(g)] = split.mass;
  }
  try {
    GroupHom k(src, dst, std::move(values));
    if (!k.is_bijective()) throw ExtractionError("kappa_x is not bijective");
    return k;
  } catch (const PreconditionError&) {
    throw ExtractionError("kappa_x at " + to_string(x) + " is not multiplicative");
  }
}

CocycleValue extract_cocycle(const Isomorphism& theta, const VElement& v, const std::vector<DyadicPoint>& probes) {
  GElement image = theta(theta.source->from_v(v));
  for (const DyadicPoint& x : probes) {
    const DyadicPoint lhs = act_point(image.v, extract_phi(theta, x));
    const DyadicPoint rhs = extract_phi(theta, act_point(v, x));
    if (!(lhs == rhs)) {
      throw ExtractionError("V-part of theta(" + to_string(v) + ") is not conjugate to v by phi at " + to_string(x));
    }
  }
  return {image.k, image.v};
}

namespace {

// Some point outside the support, which must not be the whole space.
DyadicPoint point_outside(const SupportSet& s) {
  std::vector<Word> used;
  for (const Cylinder& c : s.cylinders()) used.push_back(c.prefix());
  Word free;
  bool found = false;
  for (const Word& w : complete_prefix_code(used)) {
    if (!std::binary_search(used.begin(), used.end(), w)) {
      free = w;
      found = true;
      break;
    }
  }
  if (!found) throw PreconditionError("support is the whole space");
  Word tail;
  for (;;) {
    DyadicPoint x = prepend(free, canonicalize(tail));
    if (!s.contains(x)) return x;
    tail = tail.child(1);
  }
}

}  // namespace

int zeta_eval(const Isomorphism& theta, const KElement& a) {
  const SupportSet s = support(a);
  if (s.cylinders().size() == 1 && s.cylinders()[0].prefix().empty()) {
    const FiniteGroup& g = *theta.target->context()->group();
    return g.mul(zeta_eval(theta, component(a, Word("0"))), zeta_eval(theta, component(a, Word("1"))));
  }
  const DyadicPoint x = point_outside(s);
  GElement image = theta(theta.source->from_k(a));
  if (!in_k(image)) throw ExtractionError("theta does not map K into K");
  return image.k(extract_phi(theta, x));
}

KElement kappa0(const Isomorphism& theta, const KElement& a) {
  GElement image = theta(theta.source->from_k(a));
  const Context& ctx = theta.target->context();
  return mul(image.k, KElement::constant(ctx, ctx->group()->inv(zeta_eval(theta, a))));
}

int kappa1_eval(const Isomorphism& theta, const KElement& a, const DyadicPoint& x) {
  return extract_kappa_x(theta, x)(a(x));
}

int eta_eval(const Isomorphism& theta, const KElement& a, const DyadicPoint& x) {
  const FiniteGroup& g = *theta.target->context()->group();
  const int k1 = kappa1_eval(theta, a, x);
  const int k0 = kappa0(theta, a)(extract_phi(theta, x));
  const int eta = g.mul(g.inv(k1), k0);
  if (!g.is_central(eta)) throw ExtractionError("eta value at " + to_string(x) + " is not central");
  return eta;
}

Report verify_spatial(const Isomorphism& theta, const KElement& a, const std::vector<DyadicPoint>& probes) {
  Report r;
  const SupportSet sa = support(a);
  const KElement k0 = kappa0(theta, a);
  const SupportSet sk = support(k0);
  std::vector<DyadicPoint> points = probes;
  for (const auto& [x, _] : a.exceptions()) points.push_back(x);
  for (const Cylinder& c : sa.cylinders()) {
    points.push_back(canonicalize(c.prefix()));
    points.push_back(canonicalize(c.prefix().child(1)));
  }
  for (const DyadicPoint& x : points) {
    if (sa.contains(x) != sk.contains(extract_phi(theta, x))) {
      r.fail("support mismatch at " + to_string(x) + " (image " + to_string(extract_phi(theta, x)) + ")");
    }
  }
  if (theta.provenance.phi && !(act_support(*theta.provenance.phi, sa) == sk)) {
    r.fail("supp(kappa0(a)) = " + to_string(sk) + " differs from phi(supp(a)) = " +
           to_string(act_support(*theta.provenance.phi, sa)));
  }
  return r;
}

Report verify_local(const Isomorphism& theta, const KElement& a, const Word& u, const std::vector<DyadicPoint>& probes) {
  Report r;
  if (!support_subset(support(a), SupportSet({Cylinder(u)}, {}))) {
    r.fail("element is not supported in " + to_string(Cylinder(u)));
    return r;
  }
  const KElement k0 = kappa0(theta, a);
  const int e = k0.group()->identity();
  for (const DyadicPoint& x : probes) {
    if (has_prefix(x, u)) continue;
    if (k0(extract_phi(theta, x)) != e) r.fail("image not local: nonidentity at phi(" + to_string(x) + ")");
  }
  if (theta.provenance.phi) {
    const SupportSet image = act_cylinder(*theta.provenance.phi, Cylinder(u));
    if (!support_subset(support(k0), image)) r.fail("supp(kappa0(a)) not inside phi(" + to_string(Cylinder(u)) + ")");
  }
  return r;
}

Isomorphism theta_times_zeta(const Isomorphism& theta, const CentralMap& zeta, const std::vector<GElement>& samples) {
  const GroupModel& s = *theta.source;
  const Context& tctx = theta.target->context();
  const FiniteGroup& tg = *tctx->group();
  const Subgroup zs = center_values(*tctx);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const GElement& g = samples[i];
    const GElement& h = samples[(i + 1) % samples.size()];
    if (!std::binary_search(zs.begin(), zs.end(), zeta(g))) throw PreconditionError("zeta is not central-valued");
    if (zeta(s.mul(g, h)) != tg.mul(zeta(g), zeta(h))) throw PreconditionError("zeta is not multiplicative");
    if (zeta(s.commutator(g, h)) != tg.identity()) throw PreconditionError("zeta is not trivial on commutators");
  }
  auto tf = theta.forward, tb = theta.backward;
  Model src = theta.source, dst = theta.target;
  auto constant = [tctx](int z) { return KElement::constant(tctx, z); };
  auto forward = [tf, dst, zeta, constant](const GElement& g) {
    return dst->mul(tf(g), dst->from_k(constant(zeta(g))));
  };
  auto backward = [tb, src, dst, zeta, constant](const GElement& gt) {
    const GElement h = tb(gt);
    const GElement correction = tb(dst->from_k(constant(zeta(tb(dst->inv(gt))))));
    return src->mul(h, correction);
  };
  return Isomorphism{src, dst, forward, backward,
                     Provenance{theta.provenance.description + "·zeta", theta.provenance.phi}};
}

DecompositionWitness decompose_iso(const Isomorphism& theta, const std::vector<DyadicPoint>& probes) {
  DecompositionWitness w;
  for (const DyadicPoint& x : probes) {
    w.phi.emplace(x, extract_phi(theta, x));
    w.kappa.emplace(x, extract_kappa_x(theta, x));
  }
  for (const VElement& v : gens::generating_set()) w.cocycle.emplace_back(v, extract_cocycle(theta, v, probes));
  return w;
}

std::string to_string(const DecompositionWitness& w) {
  std::string out = "phi:\n";
  for (const auto& [x, y] : w.phi) out += "  " + to_string(x) + " -> " + to_string(y) + "\n";
  out += "kappa:\n";
  for (const auto& [x, k] : w.kappa) out += "  " + to_string(x) + " : " + to_string(k) + "\n";
  out += "cocycle:\n";
  for (const auto& [v, c] : w.cocycle) {
    out += "  c(" + to_string(v) + ") = " + to_string(c.c) + "\n";
    out += "  phi v phi^-1 = " + to_string(c.w) + "\n";
  }
  return out;
}

}  // namespace vwreath
