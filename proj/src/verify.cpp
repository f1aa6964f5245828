#include "vwreath/verify.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "vwreath/autgen.hpp"
#include "vwreath/classify.hpp"
#include "vwreath/error.hpp"
#include "vwreath/oracle.hpp"

namespace vwreath {

CaseOutcome run_cases(std::size_t n, std::uint64_t seed, const CaseBody& body, Exec exec, int jobs) {
  std::vector<std::optional<std::string>> results(n);
  for_each_index(
      n, exec,
      [&](std::size_t i) {
        Rng rng = case_rng(seed, i);
        try {
          results[i] = body(rng, i);
        } catch (const std::exception& e) {
          results[i] = std::string("exception: ") + e.what();
        }
      },
      jobs);
  CaseOutcome out;
  out.cases = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (results[i]) {
      out.failed_index = i;
      out.failure = *results[i];
      break;
    }
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;
using Failure = std::optional<std::string>;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t count(const VerifyOptions& o, std::size_t fallback) { return o.samples ? o.samples : fallback; }

CriterionResult finish(int id, const std::string& name, const CaseOutcome& out, Clock::time_point start) {
  CriterionResult r{id, name, out.ok(), out.cases, seconds_since(start), ""};
  if (!out.ok()) r.detail = "case " + std::to_string(*out.failed_index) + ": " + out.failure;
  return r;
}

CriterionResult run_suite(int id, const std::string& name, std::size_t n, const VerifyOptions& o, const CaseBody& body) {
  const auto start = Clock::now();
  return finish(id, name, run_cases(n, o.seed + static_cast<std::uint64_t>(id) * 1000003ULL, body, o.exec, o.jobs),
                start);
}

// ---- fixtures ---------------------------------------------------------------

struct Fixtures {
  Group z2 = cyclic_group(2);
  Group z4 = cyclic_group(4);
  Group z5 = cyclic_group(5);
  Group s3 = symmetric_group(3);
  // Gamma in {Z2, Z4, S3}, each with the identity and (where one exists) a
  // non-trivial automorphism; Z2 has none.
  std::vector<Context> support_contexts;
  std::vector<Context> action_contexts;
  std::vector<Context> untwisted;

  Fixtures() {
    const GroupHom z4_inv = power_hom(z4, -1);
    const GroupHom s3_ad = inner_hom(s3, s3->element("(12)"));
    support_contexts = {make_context(z2), make_context(z4), make_context(z4, z4_inv), make_context(s3),
                        make_context(s3, s3_ad)};
    action_contexts = support_contexts;
    action_contexts.push_back(make_context(z5, power_hom(z5, 2)));
    untwisted = {make_context(z2), make_context(z4), make_context(s3)};
  }
};

const Fixtures& fixtures() {
  static const Fixtures f;
  return f;
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(xs.size()) - 1))];
}

SupportSet place_support(const SupportSet& s, const Word& u) {
  std::vector<Cylinder> cyl;
  std::vector<DyadicPoint> pts;
  for (const Cylinder& c : s.cylinders()) cyl.emplace_back(u + c.prefix());
  for (const DyadicPoint& x : s.points()) pts.push_back(prepend(u, x));
  return SupportSet(std::move(cyl), std::move(pts));
}

const std::vector<DyadicPoint>& stems_up_to_8() {
  static const std::vector<DyadicPoint> pts = [] {
    std::vector<DyadicPoint> out{DyadicPoint{}};
    std::vector<Word> level{Word{}};
    for (int len = 1; len <= 8; ++len) {
      std::vector<Word> next;
      for (const Word& w : level) {
        next.push_back(w.child(0));
        next.push_back(w.child(1));
        out.push_back(canonicalize(w.child(1)));
      }
      level = std::move(next);
    }
    return out;
  }();
  return pts;
}

#define REQUIRE(cond, msg)                \
  do {                                    \
    if (!(cond)) return Failure(msg);     \
  } while (false)

// ---- 1: V algebra -------------------------------------------------------------

CriterionResult v_algebra(const VerifyOptions& o) {
  const auto start = Clock::now();
  auto body = [](Rng& rng, std::size_t) -> Failure {
    const VElement v = random_velement(rng, 5), w = random_velement(rng, 5), u = random_velement(rng, 5);
    const VElement e = identity_v();
    REQUIRE(mul(mul(v, w), u) == mul(v, mul(w, u)), "associativity fails for " + to_string(v) + ", " + to_string(w) + ", " + to_string(u));
    REQUIRE(mul(v, inv(v)) == e && mul(inv(v), v) == e, "inverse fails for " + to_string(v));
    REQUIRE(mul(v, e) == v && mul(e, v) == v, "identity fails for " + to_string(v));
    const VElement vw = mul(v, w);
    for (int i = 0; i < 20; ++i) {
      const DyadicPoint x = random_point(rng, 7);
      const DyadicPoint wx = act_point(w, x);
      REQUIRE(slope(vw, x) == slope(v, wx) + slope(w, x), "chain rule fails at " + to_string(x));
      const oracle::Located ref = oracle::forward(w, x);
      REQUIRE(ref.point == wx && ref.exponent == slope(w, x), "action disagrees with the oracle at " + to_string(x));
    }
    return std::nullopt;
  };
  CaseOutcome out = run_cases(count(o, 500), o.seed + 1000003ULL, body, o.exec, o.jobs);
  CriterionResult r = finish(1, "v-algebra", out, start);
  if (r.pass && r.seconds >= 10.0) {
    r.pass = false;
    r.detail = "runtime " + std::to_string(r.seconds) + " s exceeds 10 s";
  }
  return r;
}

// ---- 2: slopes at fixed points are conjugation invariant ------------------------------

CriterionResult homeoslope(const VerifyOptions& o) {
  return run_suite(2, "homeoslope", count(o, 200), o, [](Rng& rng, std::size_t) -> Failure {
    auto [v, x] = random_velement_with_fixed_point(rng, 4);
    const VElement phi = random_velement(rng, 5);
    REQUIRE(act_point(v, x) == x, "generated element does not fix " + to_string(x));
    const VElement conj = mul(mul(phi, v), inv(phi));
    const DyadicPoint px = act_point(phi, x);
    REQUIRE(act_point(conj, px) == px, "conjugate does not fix phi(x)");
    REQUIRE(slope(conj, px) == slope(v, x), "slope changed under conjugation by " + to_string(phi));
    REQUIRE(oracle::forward(conj, px).exponent == oracle::forward(v, x).exponent, "oracle slopes differ");
    return std::nullopt;
  });
}

// ---- 3: support calculus -------------------------------------------------------

CriterionResult support_calculus(const VerifyOptions& o) {
  return run_suite(3, "support", count(o, 500), o, [](Rng& rng, std::size_t i) -> Failure {
    const auto& ctxs = fixtures().support_contexts;
    const Context& ctx = ctxs[i % ctxs.size()];
    const KElement a = random_kelement(rng, ctx, 4, 2);
    const KElement b = random_kelement(rng, ctx, 4, 2);
    const VElement v = random_velement(rng, 4);
    const SupportSet sa = support(a), sb = support(b);
    REQUIRE(sa.empty() == a.is_identity(), "(1) fails for " + to_string(a));
    REQUIRE(support(identity_k(ctx)).empty(), "(1) fails for the identity");
    REQUIRE(support(inv(a)) == sa, "(2) fails for " + to_string(a));
    REQUIRE(support(conj(a, b)) == sb, "(3) fails for " + to_string(a) + ", " + to_string(b));
    REQUIRE(support_subset(support(mul(a, b)), support_union(sa, sb)), "(4) fails");
    if (support_intersect_empty(sa, sb)) REQUIRE(mul(a, b) == mul(b, a), "(5) fails on disjoint inputs");
    Word u = random_word(rng, 3);
    if (u.empty()) u = Word("0");
    const KElement ar = restrict(a, Cylinder(u)), br = restrict(b, Cylinder(u.sibling()));
    REQUIRE(support_intersect_empty(support(ar), support(br)), "restrictions to disjoint cylinders overlap");
    REQUIRE(mul(ar, br) == mul(br, ar), "(5) fails on restricted inputs");
    REQUIRE(support(act(v, a)) == act_support(v, sa), "(6) fails for v = " + to_string(v) + ", a = " + to_string(a));
    // Tree and permutation morphisms.
    const Tree t = random_tree_up_to(rng, 6, 3);
    const std::vector<KElement> parts = pi_tree(a, t);
    for (std::size_t l = 0; l < parts.size(); ++l) {
      const Word& leaf = t.leaves()[l];
      REQUIRE(place_support(support(parts[l]), leaf) == support_intersection(sa, SupportSet({Cylinder(leaf)}, {})),
              "tree support fails at leaf " + to_string(leaf));
    }
    const Tree s = random_tree(rng, t.leaf_count(), 4);
    std::vector<int> images(t.leaf_count());
    for (std::size_t k = 0; k < images.size(); ++k) images[k] = static_cast<int>(k);
    std::shuffle(images.begin(), images.end(), rng);
    const Permutation sigma(images);
    const KElement routed = pi_tree_inv(permute_tuple(sigma, parts), s);
    REQUIRE(support(routed) == act_support(make(t, sigma, s), sa), "support of the tree route fails");
    return std::nullopt;
  });
}

// ---- 4: decomposition ------------------------------------------------------------

CriterionResult decomposition(const VerifyOptions& o) {
  return run_suite(4, "decomposition", count(o, 300), o, [](Rng& rng, std::size_t i) -> Failure {
    const auto& ctxs = fixtures().support_contexts;
    const Context& ctx = ctxs[i % ctxs.size()];
    const KElement a = random_kelement(rng, ctx, 4, 3);
    const Tree t = random_tree_up_to(rng, 8, 4);
    const std::vector<KElement> parts = decompose(a, t);
    KElement forward = identity_k(ctx), backward = identity_k(ctx);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      forward = mul(forward, parts[k]);
      backward = mul(parts[parts.size() - 1 - k], backward);
      const Word& l = t.leaves()[k];
      REQUIRE(support_subset(support(parts[k]), SupportSet({Cylinder(l)}, {})), "component escapes its leaf");
      REQUIRE(parts[k] == place(r_word(a, l), l), "component differs from R_u(a)_I at " + to_string(l));
      for (std::size_t m = k + 1; m < parts.size(); ++m) {
        REQUIRE(support_intersect_empty(support(parts[k]), support(parts[m])), "component supports overlap");
      }
    }
    REQUIRE(forward == a && mul(backward, identity_k(ctx)) == a, "components do not multiply to a = " + to_string(a));
    const Word u = random_word(rng, 3);
    const KElement whole = restrict(a, Cylinder(u));
    REQUIRE(whole == mul(restrict(a, Cylinder(u.child(0))), restrict(a, Cylinder(u.child(1)))), "halves fail at " + to_string(u));
    const KElement via_carets =
        mul(place(r_word(a, u.child(0)), u.child(0)), place(r_word(a, u.child(1)), u.child(1)));
    REQUIRE(whole == via_carets, "caret-level halves fail at " + to_string(u));
    REQUIRE(component(a, u) == place(r_word(a, u), u), "component differs from place(R_u(a)) at " + to_string(u));
    return std::nullopt;
  });
}

// ---- 5: wreath action against the direct formula ----------------------------------

CriterionResult wreath_action(const VerifyOptions& o) {
  return run_suite(5, "wreath-action", count(o, 300), o, [](Rng& rng, std::size_t i) -> Failure {
    const auto& ctxs = fixtures().action_contexts;
    const Context& ctx = ctxs[i % ctxs.size()];
    const VElement v = random_velement(rng, 5);
    const KElement a = random_kelement(rng, ctx, 4, 2);
    const KElement image = act(v, a);
    std::vector<DyadicPoint> probes{random_point(rng, 8)};
    for (const auto& [x, _] : a.exceptions()) probes.push_back(oracle::forward(v, x).point);
    for (const Word& r : v.range()) probes.push_back(canonicalize(r));
    for (const DyadicPoint& x : probes) {
      REQUIRE(image(x) == oracle::action_eval(v, a, x),
              "act(" + to_string(v) + ", " + to_string(a) + ") differs from the formula at " + to_string(x));
    }
    return std::nullopt;
  });
}

// ---- 6: central cocycles ------------------------------------------------------------

CriterionResult cocycles(const VerifyOptions& o) {
  return run_suite(6, "cocycles", count(o, 200), o, [](Rng& rng, std::size_t) -> Failure {
    const Context ctx = make_context(fixtures().z4);
    const FiniteGroup& g = *ctx->group();
    const int z = g.element("2");
    const VElement v = random_velement(rng, 5), w = random_velement(rng, 5);
    const VElement vw = mul(v, w);
    REQUIRE(s_cocycle(ctx, z, vw) == mul(s_cocycle(ctx, z, v), act(v, s_cocycle(ctx, z, w))),
            "s(z) cocycle identity fails for " + to_string(v) + ", " + to_string(w));
    const KElement s0v = s0_cocycle(ctx, z, v);
    REQUIRE(s0_cocycle(ctx, z, vw) == mul(s0v, act(v, s0_cocycle(ctx, z, w))),
            "s0(z) cocycle identity fails for " + to_string(v) + ", " + to_string(w));
    REQUIRE(s0v.is_exception_only(), "s0(z) is not finitely supported");
    const KElement sv = s_cocycle(ctx, z, v);
    for (const DyadicPoint& x : stems_up_to_8()) {
      REQUIRE(s0v(x) == g.pow(z, oracle::s0_exponent(v, x)), "s0(z)_v differs from p_v at " + to_string(x));
      REQUIRE(sv(x) == g.pow(z, oracle::s_exponent(v, x)), "s(z)_v differs from the slope formula at " + to_string(x));
    }
    return std::nullopt;
  });
}

// ---- 7: classification ground truths ----------------------------------------------

CriterionResult classification(const VerifyOptions& o) {
  const auto start = Clock::now();
  struct Truth {
    std::string label;
    std::function<bool()> decide;
    bool expected;
  };
  const Exec exec = o.exec;
  std::vector<Truth> truths;
  truths.push_back({"wreath Z3 id / Z3 inv", [exec] {
                      const Group z3 = cyclic_group(3);
                      return classify_wreath(identity_hom(z3), power_hom(z3, -1), exec).has_value();
                    },
                    false});
  truths.push_back({"wreath S3 id / S3 ad((12))", [exec] {
                      const Group s3 = symmetric_group(3);
                      return classify_wreath(identity_hom(s3), inner_hom(s3, s3->element("(12)")), exec).has_value();
                    },
                    true});
  truths.push_back({"endo Z4 x2 / Z2 zero", [exec] {
                      const Group z4 = cyclic_group(4), z2 = cyclic_group(2);
                      return classify_endos(power_hom(z4, 2), trivial_hom(z2, z2), exec).witness.has_value();
                    },
                    true});
  truths.push_back({"endo Z6 x3 / Z2 id", [exec] {
                      const Group z6 = cyclic_group(6), z2 = cyclic_group(2);
                      return classify_endos(power_hom(z6, 3), identity_hom(z2), exec).witness.has_value();
                    },
                    true});
  CaseOutcome out;
  out.cases = truths.size();
  for (std::size_t i = 0; i < truths.size() && out.ok(); ++i) {
    const auto t0 = Clock::now();
    const bool iso = truths[i].decide();
    const double dt = seconds_since(t0);
    if (iso != truths[i].expected) {
      out.failed_index = i;
      out.failure = truths[i].label + ": got " + (iso ? "ISO" : "NOT-ISO");
    } else if (dt >= 1.0) {
      out.failed_index = i;
      out.failure = truths[i].label + ": took " + std::to_string(dt) + " s";
    }
  }
  return finish(7, "classification", out, start);
}

// ---- 8: inverse limits ---------------------------------------------------------------

std::vector<Group> groups_up_to_8() {
  std::vector<Group> out{trivial_group()};
  for (std::size_t n = 2; n <= 8; ++n) out.push_back(cyclic_group(n));
  const Group z2 = cyclic_group(2);
  out.push_back(product_group(z2, z2));
  out.push_back(symmetric_group(3));
  out.push_back(product_group(cyclic_group(4), z2));
  out.push_back(product_group(product_group(z2, z2), z2));
  out.push_back(dihedral_group(4));
  out.push_back(dicyclic_group(2));
  return out;
}

CriterionResult inverse_limit(const VerifyOptions& o) {
  const auto start = Clock::now();
  std::vector<GroupHom> endos;
  for (const Group& g : groups_up_to_8()) {
    for (GroupHom& f : endomorphisms(g, o.exec)) endos.push_back(std::move(f));
  }
  auto body = [&endos](Rng&, std::size_t i) -> Failure {
    const GroupHom& beta = endos[i];
    const std::size_t limit = oracle::inverse_limit_count(beta, 12);
    const std::size_t image = eventual_image(beta).elements.size();
    REQUIRE(limit == image, "endomorphism " + to_string(beta) + " of " + beta.source()->label() + ": " +
                                std::to_string(limit) + " sequences vs eventual image of order " + std::to_string(image));
    return std::nullopt;
  };
  return finish(8, "inverse-limit", run_cases(endos.size(), o.seed, body, o.exec, o.jobs), start);
}

// ---- 9: rigidity round trips --------------------------------------------------------

struct RigidityGroup {
  Context ctx;
  std::vector<GroupHom> autos;
  std::vector<GroupHom> central_homs;
  Subgroup centre;
};

std::vector<RigidityGroup> rigidity_groups(Exec exec) {
  std::vector<RigidityGroup> out;
  for (const Context& ctx : fixtures().untwisted) {
    const Group& g = ctx->group();
    RigidityGroup r{ctx, automorphisms(g, exec), {}, center(*g)};
    for (const GroupHom& f : homomorphisms(g, g, exec)) {
      bool central = true;
      for (int x : f.values()) central = central && g->is_central(x);
      if (central) r.central_homs.push_back(f);
    }
    out.push_back(std::move(r));
  }
  return out;
}

Failure rigidity_case(const RigidityGroup& rg, Rng& rng) {
  const Context& ctx = rg.ctx;
  const Group& group = ctx->group();
  const FiniteGroup& g = *group;
  auto coin = [&rng] { return uniform_int(rng, 0, 1) == 1; };

  VElement phi = identity_v();
  GroupHom beta = identity_hom(group);
  int z = g.identity();
  KElement h = identity_k(ctx);
  GroupHom psi = trivial_hom(group, group);
  std::vector<AutFactor> factors;
  if (coin()) factors.push_back(a1(phi = random_velement(rng, 3, 5)));
  if (coin()) factors.push_back(a2(beta = pick(rng, rg.autos)));
  if (coin()) factors.push_back(a3(z = pick(rng, rg.centre)));
  if (coin()) {
    const KElement raw = random_kelement(rng, ctx, 3, 1);
    const int target = pick(rng, rg.centre);
    h = mul(raw, KElement::constant(ctx, g.mul(g.inv(raw(DyadicPoint{})), target)));
    factors.push_back(a4(h));
  }
  if (coin()) factors.push_back(a6(psi = pick(rng, rg.central_homs)));
  const Isomorphism theta = build(ctx, factors);
  const std::string label = to_string(factors, g);

  std::vector<GElement> samples;
  for (int k = 0; k < 4; ++k) samples.push_back(random_gelement(rng, ctx, 3));
  const Report valid = validate(theta, samples);
  REQUIRE(valid.ok(), label + ": not an isomorphism: " + valid.failures.front());

  const std::vector<DyadicPoint> probes = standard_probes(3);
  for (const DyadicPoint& x : probes) {
    const DyadicPoint px = act_point(phi, x);
    REQUIRE(extract_phi(theta, x) == px, label + ": phi wrong at " + to_string(x));
  }
  for (int k = 0; k < 3; ++k) {
    const DyadicPoint x = pick(rng, probes);
    const DyadicPoint px = act_point(phi, x);
    const GroupHom expected = compose(inner_hom(group, h(px)), beta);
    REQUIRE(extract_kappa_x(theta, x) == expected, label + ": kappa wrong at " + to_string(x));
  }

  const VElement v = random_velement(rng, 4), w = random_velement(rng, 4);
  const CocycleValue cv = extract_cocycle(theta, v, probes);
  const CocycleValue cw = extract_cocycle(theta, w, probes);
  const CocycleValue cvw = extract_cocycle(theta, mul(v, w), probes);
  REQUIRE(cvw.c == mul(cv.c, act(cv.w, cw.c)), label + ": cocycle identity fails");
  REQUIRE(cv.w == mul(mul(phi, v), inv(phi)), label + ": V-part is not ad_phi(v)");

  Word u = random_word(rng, 3);
  const KElement local = restrict(random_kelement(rng, ctx, 4, 2), Cylinder(u));
  const Report loc = verify_local(theta, local, u, probes);
  REQUIRE(loc.ok(), label + ": local containment fails: " + (loc.ok() ? "" : loc.failures.front()));
  const KElement a = random_kelement(rng, ctx, 4, 2);
  const Report spatial = verify_spatial(theta, a, probes);
  REQUIRE(spatial.ok(), label + ": support equality fails: " + (spatial.ok() ? "" : spatial.failures.front()));

  FactorOptions fo;
  for (int k = 0; k < 3; ++k) fo.residual_samples.push_back(random_kelement(rng, ctx, 3, 2));
  const Factorization f = factor(theta, fo);
  REQUIRE(f.phi == phi, label + ": recovered phi " + to_string(f.phi));
  REQUIRE(f.beta == beta, label + ": recovered beta " + to_string(f.beta));
  REQUIRE(f.z == z, label + ": recovered z " + g.name(f.z));
  const KElement h_mod = mul(h, KElement::constant(ctx, g.inv(h(DyadicPoint{}))));
  REQUIRE(f.h == h_mod, label + ": recovered h " + to_string(f.h));
  REQUIRE(f.psi == psi, label + ": recovered psi " + to_string(f.psi));
  REQUIRE(f.residual_report.ok(), label + ": residual fails the A5 check: " + f.residual_report.failures.front());
  return std::nullopt;
}

CriterionResult rigidity(const VerifyOptions& o) {
  const std::vector<RigidityGroup> groups = rigidity_groups(o.exec);
  return run_suite(9, "rigidity", count(o, 50), o, [&groups](Rng& rng, std::size_t i) -> Failure {
    return rigidity_case(groups[i % groups.size()], rng);
  });
}

// ---- 10: inner twists ---------------------------------------------------------------

CriterionResult inner_twist_suite(const VerifyOptions& o) {
  return run_suite(10, "inner-twist", count(o, 100), o, [](Rng& rng, std::size_t i) -> Failure {
    const auto& ctxs = fixtures().support_contexts;
    const Context& ctx = ctxs[i % ctxs.size()];
    const KElement b = random_kelement(rng, ctx, 3, 1);
    const VElement v = random_velement(rng, 4), w = random_velement(rng, 4);
    const KElement cv = twist_cocycle(b, v), cw = twist_cocycle(b, w), cvw = twist_cocycle(b, mul(v, w));
    REQUIRE(cvw == mul(act(v, cw), cv), "pi-side identity fails for b = " + to_string(b));
    REQUIRE(cvw == mul(cv, twisted_act(b, v, cw)), "twisted-side identity fails for b = " + to_string(b));
    const InnerTwist it = inner_twist(b);
    const KElement a = random_kelement(rng, ctx, 3, 1);
    REQUIRE(it.twisted->act(v, a) == twisted_act(b, v, a), "twisted model disagrees with ad(c_v^-1) pi(v)");
    const Report r = validate(it.theta, {random_gelement(rng, ctx, 3), random_gelement(rng, ctx, 3)});
    REQUIRE(r.ok(), "theta is not an isomorphism: " + (r.ok() ? "" : r.failures.front()));
    return std::nullopt;
  });
}

// ---- 11: Psi for the swapped caret -------------------------------------------------------

CriterionResult psi_suite(const VerifyOptions& o) {
  return run_suite(11, "psi-embed", count(o, 100), o, [](Rng& rng, std::size_t i) -> Failure {
    const SymForest f = swapped_caret_forest();
    const VElement v = random_velement(rng, 5), w = random_velement(rng, 5);
    const VElement pv = psi_embed(f, v);
    REQUIRE(psi_embed(f, pv) == v, "Psi(Psi(v)) != v for " + to_string(v));
    REQUIRE(psi_embed(f, mul(v, w)) == mul(pv, psi_embed(f, w)), "Psi not multiplicative");
    REQUIRE(psi_embed(caret_forest(), v) == v, "plain caret does not give the identity");
    for (const Word& d : v.domain()) {
      const Word u = d + random_word(rng, 3);
      std::string s = u.str();
      for (char& c : s) c = c == '0' ? '1' : '0';
      const Word fu(s);
      REQUIRE(act_word(pv, fu) == oracle::flip_conjugate(v, fu), "Psi(v) differs from the flip conjugate at " + to_string(fu));
    }
    const Context& ctx = fixtures().support_contexts[i % fixtures().support_contexts.size()];
    const Isomorphism e = embed_iso(f, ctx, random_velement(rng, 3));
    const Report r = validate(e, {random_gelement(rng, ctx, 3), random_gelement(rng, ctx, 3)});
    REQUIRE(r.ok(), "embedding is not multiplicative: " + (r.ok() ? "" : r.failures.front()));
    return std::nullopt;
  });
}

#undef REQUIRE

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {1, "v-algebra", "associativity, inverses, identity and the chain rule in V", 500, v_algebra},
      {2, "homeoslope", "slopes at fixed points are conjugation invariant", 200, homeoslope},
      {3, "support", "support calculus in the base group", 500, support_calculus},
      {4, "decomposition", "decomposition along trees and cylinder halves", 300, decomposition},
      {5, "wreath-action", "twisted action against the direct formula", 300, wreath_action},
      {6, "cocycles", "s(z) and s0(z) cocycles over Z4", 200, cocycles},
      {7, "classification", "classification ground truths", 4, classification},
      {8, "inverse-limit", "inverse limits against eventual images", 0, inverse_limit},
      {9, "rigidity", "rigidity extraction and factorization round trips", 50, rigidity},
      {10, "inner-twist", "inner twist cocycles and isomorphism", 100, inner_twist_suite},
      {11, "psi-embed", "Psi for the swapped caret", 100, psi_suite},
  };
  return all;
}

const Suite* find_suite(const std::string& name) {
  for (const Suite& s : suites()) {
    if (s.name == name || std::to_string(s.id) == name) return &s;
  }
  return nullptr;
}

std::string format_result(const CriterionResult& r, bool with_time) {
  std::string out = std::string(r.pass ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + " " + r.name + "  (" +
                    std::to_string(r.cases) + " cases";
  if (with_time) {
    char time[32];
    std::snprintf(time, sizeof time, ", %.2f s", r.seconds);
    out += time;
  }
  out += ")";
  if (!r.detail.empty()) out += "\n      " + r.detail;
  return out;
}

}  // namespace vwreath
