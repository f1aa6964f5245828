#include "vwreath/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <ostream>

#include "vwreath/autgen.hpp"
#include "vwreath/classify.hpp"
#include "vwreath/error.hpp"
#include "vwreath/text.hpp"
#include "vwreath/verify.hpp"

namespace vwreath::cli {

namespace {

struct Settings {
  std::uint64_t seed = 42;
  std::size_t samples = 0;
  std::size_t depth = 3;
  int jobs = 1;
  std::string group = "cyclic:2";
  std::string twist = "id";

  Exec exec() const { return jobs == 1 ? Exec::serial : Exec::parallel; }
  int threads() const { return jobs > 1 ? jobs : 0; }
};

struct Command {
  std::string name;
  std::vector<std::string> args;
};

Context load_context(const Settings& s) {
  Group g = parse_group(s.group);
  return make_context(g, parse_hom(s.twist, g, g));
}

// Dispatches on the leading tag of a point, cylinder or support set.
std::string act_on_subset(const VElement& v, const std::string& t) {
  const std::string_view s = text::trim(t);
  if (text::starts_with(s, "P:")) return to_string(act_point(v, parse_point(s)));
  if (text::starts_with(s, "C:")) return to_string(act_cylinder(v, parse_cylinder(s)));
  return to_string(act_support(v, parse_support_set(s)));
}

int cmd_v(const Command& c, std::ostream& out) {
  const auto& a = c.args;
  if (c.name == "v-mul") {
    out << to_string(mul(parse_velement(a[0]), parse_velement(a[1]))) << "\n";
  } else if (c.name == "v-inv") {
    out << to_string(inv(parse_velement(a[0]))) << "\n";
  } else if (c.name == "v-act") {
    out << act_on_subset(parse_velement(a[0]), a[1]) << "\n";
  } else if (c.name == "v-slope") {
    out << slope(parse_velement(a[0]), parse_point(a[1])) << "\n";
  } else if (c.name == "v-reduce") {
    const VElement v = parse_velement(a[0]);
    auto [t, sigma, s] = v.tree_pair();
    out << to_string(v) << "\n";
    out << "domain tree " << to_string(t) << "\n";
    out << "permutation " << to_string(sigma) << "\n";
    out << "range tree  " << to_string(s) << "\n";
  }
  return ok;
}

int cmd_k(const Command& c, const Settings& st, std::ostream& out) {
  const Context ctx = load_context(st);
  const auto& a = c.args;
  if (c.name == "k-mul") {
    out << to_string(mul(parse_kelement(a[0], ctx), parse_kelement(a[1], ctx))) << "\n";
  } else if (c.name == "k-act") {
    out << to_string(act(parse_velement(a[0]), parse_kelement(a[1], ctx))) << "\n";
  } else if (c.name == "k-supp") {
    out << to_string(support(parse_kelement(a[0], ctx))) << "\n";
  } else if (c.name == "k-restrict") {
    out << to_string(restrict(parse_kelement(a[0], ctx), parse_cylinder(a[1]))) << "\n";
  }
  return ok;
}

int cmd_g(const Command& c, const Settings& st, std::ostream& out) {
  const Context ctx = load_context(st);
  const Model m = wreath_model(ctx);
  const auto& a = c.args;
  if (c.name == "g-center") {
    const Subgroup zs = center_values(*ctx);
    out << "centre values " << to_string(*ctx->group(), zs) << "\n";
    if (a.empty()) return ok;
    const bool central = is_central(parse_gelement(a[0], ctx));
    out << (central ? "central" : "not central") << "\n";
    return central ? ok : negative;
  }
  const GElement g = parse_gelement(a[0], ctx);
  if (c.name == "g-inv") {
    out << to_string(m->inv(g)) << "\n";
    return ok;
  }
  const GElement h = parse_gelement(a[1], ctx);
  if (c.name == "g-mul") out << to_string(m->mul(g, h)) << "\n";
  if (c.name == "g-conj") out << to_string(m->conj(g, h)) << "\n";
  if (c.name == "g-comm") out << to_string(m->commutator(g, h)) << "\n";
  return ok;
}

int cmd_classify(const Command& c, const Settings& st, std::ostream& out) {
  const auto& a = c.args;
  const Group g = parse_group(a[0]);
  const Group gt = parse_group(a[2]);
  if (c.name == "classify omega") {
    const auto w = sufficient_iso_check(parse_omega(a[1], g), parse_omega(a[3], gt), st.exec());
    if (!w) {
      out << "NO-WITNESS\n";
      return negative;
    }
    out << "ISO-SUFFICIENT-WITNESS\n" << to_string(*w) << "\n";
    return ok;
  }
  const GroupHom b = parse_hom(a[1], g, g);
  const GroupHom bt = parse_hom(a[3], gt, gt);
  std::optional<OuterConjugacy> w;
  if (c.name == "classify wreath") {
    w = classify_wreath(b, bt, st.exec());
  } else {
    const EndoClassification e = classify_endos(b, bt, st.exec());
    out << "eventual image " << to_string(*g, e.source.elements) << " after " << e.source.stabilization_index
        << " steps\n";
    out << "eventual image " << to_string(*gt, e.target.elements) << " after " << e.target.stabilization_index
        << " steps\n";
    w = e.witness;
  }
  if (!w) {
    out << "NOT-ISO\n";
    return negative;
  }
  out << "ISO\n" << to_string(*w) << "\n";
  return ok;
}

std::vector<GElement> seeded_samples(const Context& ctx, const Settings& st, std::size_t fallback) {
  Rng rng = case_rng(st.seed, 0);
  std::vector<GElement> out;
  for (std::size_t i = 0; i < (st.samples ? st.samples : fallback); ++i) out.push_back(random_gelement(rng, ctx, 3));
  return out;
}

std::vector<KElement> seeded_kelements(const Context& ctx, const Settings& st, std::size_t fallback) {
  Rng rng = case_rng(st.seed, 1);
  std::vector<KElement> out;
  for (std::size_t i = 0; i < (st.samples ? st.samples : fallback); ++i) out.push_back(random_kelement(rng, ctx, 3, 2));
  return out;
}

void print_report(const Report& r, std::ostream& out) {
  for (const std::string& f : r.failures) out << "  " << f << "\n";
}

int cmd_aut(const Command& c, const Settings& st, std::ostream& out) {
  const Context ctx = load_context(st);
  const FiniteGroup& g = *ctx->group();
  const std::vector<AutFactor> factors = parse_factors(c.args[0], ctx);
  const Isomorphism theta = build(ctx, factors);
  if (c.name == "aut build") {
    out << "automorphism " << to_string(factors, g) << "\n";
    for (std::size_t i = 1; i < c.args.size(); ++i) out << to_string(theta(parse_gelement(c.args[i], ctx))) << "\n";
    const Report r = validate(theta, seeded_samples(ctx, st, 20));
    out << (r.ok() ? "validated" : "validation failed") << "\n";
    print_report(r, out);
    return r.ok() ? ok : negative;
  }
  if (c.name == "aut a5-check") {
    const Report r = a5_check(theta, seeded_kelements(ctx, st, 20), standard_probes(st.depth));
    out << (r.ok() ? "A5" : "NOT-A5") << "\n";
    print_report(r, out);
    return r.ok() ? ok : negative;
  }
  FactorOptions fo;
  fo.residual_samples = seeded_kelements(ctx, st, 10);
  const Factorization f = factor(theta, fo);
  out << "A1 phi = " << to_string(f.phi) << "\n";
  out << "A2 beta = " << to_string(f.beta) << "\n";
  out << "A3 z = " << g.name(f.z) << "\n";
  out << "A4 h = " << to_string(f.h) << "  (modulo central constants)\n";
  out << "A6 psi = " << to_string(f.psi) << "\n";
  out << "recovered " << to_string(f.factors(), g) << "\n";
  out << "residual " << (f.residual_report.ok() ? "identity on checks (A5)" : "fails the A5 check") << "\n";
  print_report(f.residual_report, out);
  return f.residual_report.ok() ? ok : negative;
}

int cmd_rigidity(const Command& c, const Settings& st, std::ostream& out) {
  const Context ctx = load_context(st);
  const Isomorphism theta = build(ctx, parse_factors(c.args[0], ctx));
  const std::vector<DyadicPoint> probes = standard_probes(st.depth);
  out << to_string(decompose_iso(theta, probes));
  Report r = validate(theta, seeded_samples(ctx, st, 10));
  for (const KElement& a : seeded_kelements(ctx, st, 10)) {
    for (std::string& f : verify_spatial(theta, a, probes).failures) r.fail(std::move(f));
  }
  out << (r.ok() ? "spatial checks passed" : "spatial checks failed") << "\n";
  print_report(r, out);
  return r.ok() ? ok : negative;
}

int cmd_verify(const Command& c, const Settings& st, std::ostream& out, std::ostream& err) {
  VerifyOptions o{st.seed, st.samples, st.threads(), st.exec()};
  std::vector<const Suite*> chosen;
  if (c.args[0] == "all") {
    for (const Suite& s : suites()) chosen.push_back(&s);
  } else if (const Suite* s = find_suite(c.args[0])) {
    chosen.push_back(s);
  } else {
    err << "error: unknown suite '" << c.args[0] << "'; known:";
    for (const Suite& s : suites()) err << " " << s.name;
    err << " all\n";
    return input_error;
  }
  std::size_t failed = 0;
  for (const Suite* s : chosen) {
    const CriterionResult r = s->run(o);
    out << format_result(r) << "\n";
    if (!r.pass) ++failed;
  }
  out << (failed ? std::to_string(failed) + " of " + std::to_string(chosen.size()) + " suites failed"
                 : "all " + std::to_string(chosen.size()) + " suites passed")
      << " (seed " << st.seed << ")\n";
  return failed ? negative : ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in twisted wreath products with Thompson's group V"};
  app.name("vwreath");
  app.require_subcommand(1);
  app.fallthrough();
  Settings st;
  app.add_option("--seed", st.seed, "seed for sampled checks");
  app.add_option("--samples", st.samples, "case count for sampled checks (0 keeps the defaults)");
  app.add_option("--depth", st.depth, "maximal stem length of probe points");
  app.add_option("--jobs", st.jobs, "worker threads; 1 runs serially, 0 uses all cores");
  app.add_option("--group", st.group, "group spec or file (default cyclic:2)");
  app.add_option("--twist", st.twist, "automorphism twisting the action (default id)");

  std::map<CLI::App*, std::string> names;
  std::map<std::string, std::vector<std::string>> positional;
  auto add = [&](CLI::App* parent, const std::string& name, const std::string& full, const std::string& help,
                 const std::string& usage, int min_args, int max_args) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    auto* opt = sub->add_option("args", positional[full], usage);
    opt->expected(min_args, max_args);
    if (min_args > 0) opt->required();
    names[sub] = full;
    return sub;
  };
  auto leaf = [&](const std::string& name, const std::string& help, const std::string& usage, int lo, int hi) {
    add(&app, name, name, help, usage, lo, hi);
  };
  leaf("v-mul", "product v∘w in V", "<v> <w>", 2, 2);
  leaf("v-inv", "inverse in V", "<v>", 1, 1);
  leaf("v-act", "image of a point, cylinder or support set", "<v> <P:x|C:u|{...}>", 2, 2);
  leaf("v-slope", "slope exponent of v at a point", "<v> <P:x>", 2, 2);
  leaf("v-reduce", "reduced form and tree pair", "<v>", 1, 1);
  leaf("k-mul", "product in the base group", "<a> <b>", 2, 2);
  leaf("k-act", "twisted action of V on the base group", "<v> <a>", 2, 2);
  leaf("k-supp", "support of a base element", "<a>", 1, 1);
  leaf("k-restrict", "restriction to a cylinder", "<a> <C:u>", 2, 2);
  leaf("g-mul", "product in K ⋊ V", "<g> <h>", 2, 2);
  leaf("g-inv", "inverse in K ⋊ V", "<g>", 1, 1);
  leaf("g-conj", "g h g^-1", "<g> <h>", 2, 2);
  leaf("g-comm", "g h g^-1 h^-1", "<g> <h>", 2, 2);
  leaf("g-center", "centre values, and a membership test", "[<g>]", 0, 1);
  leaf("verify", "run a verification suite", "<suite>|all", 1, 1);

  CLI::App* classify = app.add_subcommand("classify", "isomorphism decisions");
  classify->require_subcommand(1);
  classify->fallthrough();
  add(classify, "wreath", "classify wreath", "wreath products with automorphism twists", "<grp> <aut> <grp> <aut>", 4, 4);
  add(classify, "endo", "classify endo", "groups from endomorphisms, via eventual images", "<grp> <end> <grp> <end>", 4, 4);
  add(classify, "omega", "classify omega", "sufficient condition for omega data", "<grp> <omega> <grp> <omega>", 4, 4);

  CLI::App* aut = app.add_subcommand("aut", "automorphisms of the untwisted wreath product");
  aut->require_subcommand(1);
  aut->fallthrough();
  add(aut, "build", "aut build", "build and validate a composite", "<expr> [<g>...]", 1, -1);
  add(aut, "factor", "aut factor", "recover the factors of a composite", "<expr>", 1, 1);
  add(aut, "a5-check", "aut a5-check", "test the A5 criteria", "<expr>", 1, 1);

  CLI::App* rig = app.add_subcommand("rigidity", "rigidity extraction");
  rig->require_subcommand(1);
  rig->fallthrough();
  add(rig, "decompose", "rigidity decompose", "print the extracted witness", "<expr>", 1, 1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }

  Command cmd;
  for (CLI::App* sub = app.get_subcommands().front();;) {
    auto it = names.find(sub);
    if (it != names.end()) {
      cmd.name = it->second;
      break;
    }
    sub = sub->get_subcommands().front();
  }
  cmd.args = positional[cmd.name];

  try {
    if (text::starts_with(cmd.name, "v-")) return cmd_v(cmd, out);
    if (text::starts_with(cmd.name, "k-")) return cmd_k(cmd, st, out);
    if (text::starts_with(cmd.name, "g-")) return cmd_g(cmd, st, out);
    if (text::starts_with(cmd.name, "classify")) return cmd_classify(cmd, st, out);
    if (text::starts_with(cmd.name, "aut")) return cmd_aut(cmd, st, out);
    if (text::starts_with(cmd.name, "rigidity")) return cmd_rigidity(cmd, st, out);
    return cmd_verify(cmd, st, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return input_error;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const ExtractionError& e) {
    out << "extraction failed: " << e.what() << "\n";
    return negative;
  }
}

}  // namespace vwreath::cli
