#include "vwreath/autgen.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "vwreath/error.hpp"
#include "vwreath/text.hpp"

namespace vwreath {

AutFactor a1(const VElement& phi) { return {AutTag::A1, phi}; }
AutFactor a2(const GroupHom& beta) { return {AutTag::A2, beta}; }
AutFactor a3(int z) { return {AutTag::A3, z}; }
AutFactor a4(const KElement& h) { return {AutTag::A4, h}; }
AutFactor a6(const GroupHom& psi) { return {AutTag::A6, psi}; }

std::string to_string(AutTag tag) {
  switch (tag) {
    case AutTag::A1: return "A1";
    case AutTag::A2: return "A2";
    case AutTag::A3: return "A3";
    case AutTag::A4: return "A4";
    case AutTag::A6: return "A6";
  }
  return "?";
}

std::string to_string(const AutFactor& f, const FiniteGroup& g) {
  std::string body;
  switch (f.tag) {
    case AutTag::A1: body = to_string(std::get<VElement>(f.payload)); break;
    case AutTag::A2:
    case AutTag::A6: body = to_string(std::get<GroupHom>(f.payload)); break;
    case AutTag::A3: body = g.name(std::get<int>(f.payload)); break;
    case AutTag::A4: body = to_string(std::get<KElement>(f.payload)); break;
  }
  return to_string(f.tag) + "(" + body + ")";
}

std::string to_string(const std::vector<AutFactor>& factors, const FiniteGroup& g) {
  if (factors.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " * " : "") + to_string(factors[i], g);
  return out;
}

// ---- cocycles -------------------------------------------------------------

namespace {

void require_central(const FiniteGroup& g, int z) {
  if (!g.is_central(z)) throw PreconditionError("element " + g.name(z) + " is not central");
}

long exponent(const Word& d, const Word& r) { return static_cast<long>(d.size()) - static_cast<long>(r.size()); }

}  // namespace

KElement s_cocycle(const Context& ctx, int z, const VElement& v) {
  const FiniteGroup& g = *ctx->group();
  require_central(g, z);
  std::vector<Word> cells;
  std::vector<int> values;
  for (std::size_t i = 0; i < v.size(); ++i) {
    cells.push_back(v.range()[i]);
    values.push_back(g.pow(z, exponent(v.domain()[i], v.range()[i])));
  }
  std::vector<std::size_t> order(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cells[a] < cells[b]; });
  std::vector<Word> sc;
  std::vector<int> sv;
  for (std::size_t i : order) {
    sc.push_back(cells[i]);
    sv.push_back(values[i]);
  }
  return KElement(ctx, std::move(sc), std::move(sv));
}

KElement s0_cocycle(const Context& ctx, int z, const VElement& v) {
  const FiniteGroup& g = *ctx->group();
  require_central(g, z);
  std::map<DyadicPoint, int> exc;
  // Off the left endpoints of the cells the valuation shifts exactly by the slope.
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Word& d = v.domain()[i];
    const Word& r = v.range()[i];
    const long p = static_cast<long>(d.trailing_zeros()) - static_cast<long>(r.trailing_zeros());
    const int value = g.pow(z, p);
    if (value != g.identity()) exc.emplace(canonicalize(r), value);
  }
  return KElement(ctx, {Word{}}, {g.identity()}, std::move(exc));
}

int a6_zeta(const GroupHom& psi, const KElement& a) {
  const FiniteGroup& g = *psi.target();
  int out = g.identity();
  for (const auto& [x, value] : a.exceptions()) {
    out = g.mul(out, g.mul(psi(value), g.inv(psi(a.cell_value(x)))));
  }
  return out;
}

// ---- constructors -----------------------------------------------------------

namespace {

void require_untwisted(const Context& ctx) {
  if (!ctx->untwisted()) throw PreconditionError("automorphism factors need an untwisted context");
}

GroupHom pointwise_inverse(const GroupHom& psi) {
  const FiniteGroup& g = *psi.target();
  std::vector<int> values;
  for (int x : psi.values()) values.push_back(g.inv(x));
  return GroupHom(psi.source(), psi.target(), std::move(values));
}

void require_central_hom(const GroupHom& psi) {
  if (!psi.is_endomorphism()) throw PreconditionError("A6 payload must be an endomorphism of Gamma");
  for (int x : psi.values()) {
    if (!psi.target()->is_central(x)) throw PreconditionError("A6 payload is not valued in the centre");
  }
}

Isomorphism a6_iso(const Model& m, const GroupHom& psi) {
  require_central_hom(psi);
  const GroupHom psi_inv = pointwise_inverse(psi);
  const Context ctx = m->context();
  auto shift = [ctx](const GroupHom& p) {
    return [ctx, p](const GElement& g) {
      return GElement{mul(g.k, KElement::constant(ctx, a6_zeta(p, g.k))), g.v};
    };
  };
  return Isomorphism{m, m, shift(psi), shift(psi_inv), Provenance{"A6(" + to_string(psi) + ")", identity_v()}};
}

}  // namespace

Isomorphism factor_iso(const Context& ctx, const AutFactor& f) {
  require_untwisted(ctx);
  Model m = wreath_model(ctx);
  const FiniteGroup& g = *ctx->group();
  const std::string label = to_string(f, g);
  switch (f.tag) {
    case AutTag::A1: {
      const VElement phi = std::get<VElement>(f.payload);
      const VElement phi_inv = inv(phi);
      auto make = [](const VElement& p, const VElement& pi) {
        return [p, pi](const GElement& x) { return GElement{act(p, x.k), mul(mul(p, x.v), pi)}; };
      };
      return Isomorphism{m, m, make(phi, phi_inv), make(phi_inv, phi), Provenance{label, phi}};
    }
    case AutTag::A2: {
      const GroupHom beta = std::get<GroupHom>(f.payload);
      if (!beta.is_endomorphism() || !beta.is_bijective()) throw PreconditionError("A2 payload must be an automorphism");
      const GroupHom beta_inv = inverse(beta);
      auto make = [ctx](const GroupHom& b) {
        return [ctx, b](const GElement& x) { return GElement{map_values(x.k, b, ctx), x.v}; };
      };
      return Isomorphism{m, m, make(beta), make(beta_inv), Provenance{label, identity_v()}};
    }
    case AutTag::A3: {
      const int z = std::get<int>(f.payload);
      require_central(g, z);
      auto make = [ctx](int zz) {
        return [ctx, zz](const GElement& x) { return GElement{mul(x.k, s_cocycle(ctx, zz, x.v)), x.v}; };
      };
      return Isomorphism{m, m, make(z), make(g.inv(z)), Provenance{label, identity_v()}};
    }
    case AutTag::A4: {
      const KElement h = std::get<KElement>(f.payload);
      if (!g.is_central(h(DyadicPoint{}))) throw PreconditionError("A4 payload must be central at 00...");
      const GElement hg = m->from_k(h);
      const GElement hi = m->inv(hg);
      auto forward = [m, hg](const GElement& x) { return m->conj(hg, x); };
      auto backward = [m, hi](const GElement& x) { return m->conj(hi, x); };
      return Isomorphism{m, m, forward, backward, Provenance{label, identity_v()}};
    }
    case AutTag::A6: {
      Isomorphism out = a6_iso(m, std::get<GroupHom>(f.payload));
      out.provenance.description = label;
      return out;
    }
  }
  throw PreconditionError("unknown factor tag");
}

Isomorphism build(const Context& ctx, const std::vector<AutFactor>& factors) {
  require_untwisted(ctx);
  std::vector<AutFactor> sorted = factors;
  std::stable_sort(sorted.begin(), sorted.end(), [](const AutFactor& a, const AutFactor& b) { return a.tag < b.tag; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].tag == sorted[i - 1].tag) throw PreconditionError("duplicate factor " + to_string(sorted[i].tag));
  }
  Isomorphism out = identity_iso(wreath_model(ctx));
  for (const AutFactor& f : sorted) out = compose(factor_iso(ctx, f), out);
  if (!sorted.empty()) out.provenance.description = to_string(sorted, *ctx->group());
  return out;
}

// ---- factorization ----------------------------------------------------------

VElement extract_v_phi(const Isomorphism& theta, std::size_t max_depth) {
  std::vector<Word> suffixes{Word{}};
  for (std::size_t len = 1; len <= 3; ++len) {
    for (std::size_t i = 0, n = suffixes.size(); i < n; ++i) {
      if (suffixes[i].size() == len - 1) {
        suffixes.push_back(suffixes[i].child(0));
        suffixes.push_back(suffixes[i].child(1));
      }
    }
  }
  std::vector<Word> domain, range;
  std::deque<Word> queue{Word{}};
  while (!queue.empty()) {
    const Word u = queue.front();
    queue.pop_front();
    const DyadicPoint y = extract_phi(theta, canonicalize(u.child(1)));
    bool ok = !y.stem().empty();
    const Word m = ok ? y.stem().parent() : Word{};
    for (std::size_t i = 0; ok && i < suffixes.size(); ++i) {
      ok = extract_phi(theta, canonicalize(u + suffixes[i])) == canonicalize(m + suffixes[i]);
    }
    if (ok) {
      domain.push_back(u);
      range.push_back(m);
    } else if (u.size() < max_depth) {
      queue.push_back(u.child(0));
      queue.push_back(u.child(1));
    } else {
      throw ExtractionError("phi is not a prefix replacement on " + to_string(Cylinder(u)) + " up to depth " +
                            std::to_string(max_depth));
    }
  }
  VElement phi = [&] {
    try {
      return VElement(domain, range);
    } catch (const PreconditionError& e) {
      throw ExtractionError(std::string("fitted phi is not an element of V: ") + e.what());
    }
  }();
  const VElement phi_inv = inv(phi);
  for (const VElement& v : gens::generating_set()) {
    const GElement image = theta(theta.source->from_v(v));
    if (!(image.v == mul(mul(phi, v), phi_inv))) {
      throw ExtractionError("V-part of theta(" + to_string(v) + ") is not conjugate by the fitted phi");
    }
  }
  return phi;
}

namespace {

// The A4 payload up to central constants, from theta = A6∘ad(h).
std::optional<KElement> fit_inner(const Isomorphism& theta, std::size_t depth, const std::vector<DyadicPoint>& probes) {
  const GroupModel& m = *theta.source;
  const Context& ctx = m.context();
  const FiniteGroup& g = *ctx->group();
  std::map<DyadicPoint, int> cache;
  auto value = [&](const DyadicPoint& x) {
    auto it = cache.find(x);
    if (it != cache.end()) return it->second;
    const int out = theta(m.from_v(transport_basepoint(x))).k(x);
    cache.emplace(x, out);
    return out;
  };
  std::vector<Word> cells{Word{}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Word> next;
    for (const Word& w : cells) {
      next.push_back(w.child(0));
      next.push_back(w.child(1));
    }
    cells = std::move(next);
  }
  std::vector<int> values;
  for (const Word& w : cells) {
    const int a = value(canonicalize(w + Word("1")));
    const int b = value(canonicalize(w + Word("01")));
    const int c = value(canonicalize(w + Word("11")));
    values.push_back(b == c ? b : a);
  }
  KElement fitted(ctx, cells, values);
  std::map<DyadicPoint, int> exc;
  for (const DyadicPoint& x : probes) {
    const int v = value(x);
    if (v != fitted.cell_value(x)) exc.emplace(x, v);
  }
  KElement h(ctx, cells, values, exc);
  const GElement hg = m.from_k(h);
  for (const VElement& v : gens::generating_set()) {
    if (!(theta(m.from_v(v)) == m.conj(hg, m.from_v(v)))) return std::nullopt;
  }
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    const GElement c = m.from_k(KElement::constant(ctx, x));
    if (!(theta(c) == m.conj(hg, c))) return std::nullopt;
  }
  return h;
}

std::vector<DyadicPoint> inner_probes(const Isomorphism& theta) {
  const GroupModel& m = *theta.source;
  std::set<DyadicPoint> out;
  for (const DyadicPoint& x : standard_probes(4)) out.insert(x);
  for (const VElement& v : gens::generating_set()) {
    const VElement vi = inv(v);
    const GElement image = theta(m.from_v(v));
    for (const auto& [x, _] : image.k.exceptions()) {
      out.insert(x);
      out.insert(act_point(vi, x));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<AutFactor> Factorization::factors() const {
  std::vector<AutFactor> out;
  const FiniteGroup& g = *beta.source();
  if (!phi.is_identity()) out.push_back(a1(phi));
  if (!(beta == identity_hom(beta.source()))) out.push_back(a2(beta));
  if (z != g.identity()) out.push_back(a3(z));
  if (!h.is_identity()) out.push_back(a4(h));
  if (!(psi == trivial_hom(psi.source(), psi.target()))) out.push_back(a6(psi));
  return out;
}

Factorization factor(const Isomorphism& theta, const FactorOptions& options) {
  const Context& ctx = theta.source->context();
  require_untwisted(ctx);
  const Group& group = ctx->group();
  const FiniteGroup& g = *group;

  const VElement phi = extract_v_phi(theta, options.max_split_depth);
  const Isomorphism theta_a = compose(theta, factor_iso(ctx, a1(inv(phi))));

  const GroupHom beta = extract_kappa_x(theta_a, DyadicPoint{});
  if (!beta.is_endomorphism()) throw ExtractionError("kappa at 00... is not an automorphism of Gamma");
  const Isomorphism theta_b = compose(theta_a, factor_iso(ctx, a2(inverse(beta))));

  const GElement cx0 = theta_b(theta_b.source->from_v(gens::x0()));
  const int z = g.inv(cx0.k(DyadicPoint{}));
  if (!g.is_central(z)) throw ExtractionError("cocycle value at 00... is not central");
  const Isomorphism theta_c = compose(theta_b, factor_iso(ctx, a3(g.inv(z))));

  const std::vector<DyadicPoint> probes = inner_probes(theta_c);
  std::optional<KElement> h;
  for (std::size_t depth = options.min_fit_depth; depth <= options.max_fit_depth && !h; ++depth) {
    h = fit_inner(theta_c, depth, probes);
  }
  if (!h) throw ExtractionError("inner part is not conjugation by a simple function of depth <= " +
                                std::to_string(options.max_fit_depth));
  const Isomorphism theta_d = compose(theta_c, factor_iso(ctx, a4(inv(*h))));

  std::vector<int> psi_values(g.order(), g.identity());
  const DyadicPoint one = canonicalize(Word("1"));
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    const GElement image = theta_d(theta_d.source->from_k(KElement::point_mass(ctx, DyadicPoint{}, x)));
    if (!in_k(image)) throw ExtractionError("residual does not preserve the base group");
    psi_values[static_cast<std::size_t>(x)] = image.k(one);
  }
  const GroupHom psi = [&] {
    try {
      GroupHom out(group, group, psi_values);
      require_central_hom(out);
      return out;
    } catch (const PreconditionError& e) {
      throw ExtractionError(std::string("central part is not a homomorphism into the centre: ") + e.what());
    }
  }();
  Isomorphism residual = compose(factor_iso(ctx, a6(pointwise_inverse(psi))), theta_d);
  residual.provenance = Provenance{"residual", identity_v()};
  Report report = a5_check(residual, options.residual_samples, standard_probes(3));
  return Factorization{phi, beta, z, *h, psi, std::move(residual), std::move(report)};
}

CocycleSplit cocycle_factorize(const Context& ctx, const std::function<KElement(const VElement&)>& delta,
                               const std::vector<DyadicPoint>& probes) {
  const FiniteGroup& g = *ctx->group();
  const VElement x0 = gens::x0();
  const int z = g.inv(delta(x0)(DyadicPoint{}));
  if (!g.is_central(z)) throw ExtractionError("delta is not central-valued at 00...");
  CocycleSplit out{z, {}};
  auto read = [&](const VElement& v, const DyadicPoint& x) {
    const int d = delta(v)(x);
    if (!g.is_central(d)) throw ExtractionError("delta is not central-valued at " + to_string(x));
    return g.mul(d, g.inv(s_cocycle(ctx, z, v)(x)));
  };
  for (const DyadicPoint& x : probes) {
    const VElement vx = transport_basepoint(x);
    const int f = read(vx, x);
    if (read(mul(vx, x0), x) != f) throw ExtractionError("inconsistent propagation at " + to_string(x));
    out.f.emplace(x, f);
  }
  return out;
}

Report a5_check(const Isomorphism& theta, const std::vector<KElement>& samples, const std::vector<DyadicPoint>& probes) {
  Report r;
  const GroupModel& m = *theta.source;
  const Context& ctx = m.context();
  const FiniteGroup& g = *ctx->group();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const GElement image = theta(m.from_k(samples[i]));
    if (!in_k(image)) {
      r.fail("sample " + std::to_string(i) + " leaves the base group");
    } else if (!(support(image.k) == support(samples[i]))) {
      r.fail("support not preserved on sample " + std::to_string(i));
    }
  }
  for (const DyadicPoint& x : probes) {
    for (int a = 0; a < static_cast<int>(g.order()); ++a) {
      if (a == g.identity()) continue;
      const GElement pm = m.from_k(KElement::point_mass(ctx, x, a));
      if (!(theta(pm) == pm)) r.fail("point mass " + g.name(a) + " at " + to_string(x) + " is moved");
    }
  }
  for (const VElement& v : gens::generating_set()) {
    if (!(theta(m.from_v(v)) == m.from_v(v))) r.fail("generator " + to_string(v) + " is moved");
  }
  return r;
}

// ---- text -----------------------------------------------------------------

std::vector<AutFactor> parse_factors(std::string_view text, const Context& ctx) {
  const Group& group = ctx->group();
  std::vector<AutFactor> out;
  if (text::trim(text) == "id" || text::trim(text).empty()) return out;
  for (const auto& piece : text::split_top_level(text, '*')) {
    const std::string_view raw = piece.text;
    const std::size_t lead = raw.find_first_not_of(" \t\n");
    const std::string_view s = text::trim(raw);
    const std::size_t at = piece.offset + (lead == std::string_view::npos ? 0 : lead);
    if (s.size() < 4 || s[0] != 'A') throw ParseError("expected a factor A1(...) .. A6(...)", at);
    const std::string_view body = text::unwrap(s.substr(2), '(', ')', at + 2);
    const std::size_t body_at = at + 3;
    try {
      switch (s[1]) {
        case '1': out.push_back(a1(parse_velement(body))); break;
        case '2': out.push_back(a2(parse_hom(body, group, group))); break;
        case '3': out.push_back(a3(group->element(text::trim(body)))); break;
        case '4': out.push_back(a4(parse_kelement(body, ctx))); break;
        case '6': out.push_back(a6(parse_hom(body, group, group))); break;
        default: throw ParseError("unknown factor tag A" + std::string(1, s[1]), 0);
      }
    } catch (const ParseError& e) {
      throw ParseError(e.message(), body_at + e.position());
    }
  }
  return out;
}

}  // namespace vwreath
