#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "cdgalab/errors.hpp"
#include "cdgalab/expr.hpp"
#include "cdgalab/formats.hpp"
#include "cdgalab/obstruction.hpp"
#include "cdgalab/polytope.hpp"

namespace cdgalab::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Report {
  json data = json::object();
  std::vector<std::string> lines;
  int status = kOk;

  void line(std::string s) { lines.push_back(std::move(s)); }
};

std::string status_word(int code) {
  switch (code) {
    case kOk: return "ok";
    case kNonvanishing: return "nonvanishing";
    default: return "error";
  }
}

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json polynomials(const std::vector<Polynomial>& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

json sizes(const std::vector<std::size_t>& v) { return json(v); }

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

json class_json(const ObstructionClass& c) {
  return {{"degree", c.degree},
          {"representative", c.representative.to_string()},
          {"coordinates", rationals(c.coordinates)},
          {"basis", polynomials(c.basis)},
          {"class", c.describe()},
          {"vanishes", c.vanishes()}};
}

// --------------------------------------------------------------------------

struct Options {
  bool json_output = false;
  std::uint64_t seed = 20240611;

  std::string file;
  std::optional<int> degree;
  std::vector<int> range;

  std::string a, b, c;

  std::string realization;
  std::string target;
  std::string theta;
  std::string morphism;
  bool permissive = false;

  int dim = 0;
  bool census = false;
};

Report cohomology_cmd(const Options& o) {
  Report r;
  CdgaPtr a = load_cdga(o.file);
  int lo = 1;
  int hi = a->cap() - 1;
  if (o.degree) lo = hi = *o.degree;
  if (!o.range.empty()) {
    lo = o.range[0];
    hi = o.range[1];
  }
  if (lo > hi) throw CLI::ValidationError("--range", "empty degree range");
  r.data["file"] = o.file;
  r.data["cap"] = a->cap();
  json degrees = json::array();
  for (int d = lo; d <= hi; ++d) {
    CohomologyGroup h = cohomology(*a, d);
    std::string reps;
    for (const auto& p : h.representatives()) reps += " [" + p.to_string() + "]";
    r.line("H^" + std::to_string(d) + ": dim " + std::to_string(h.dimension()) + reps);
    degrees.push_back({{"degree", d}, {"dimension", h.dimension()}, {"representatives", polynomials(h.representatives())}});
  }
  r.data["degrees"] = degrees;
  return r;
}

Report massey_cmd(const Options& o) {
  Report r;
  CdgaPtr b = load_cdga(o.file);
  auto parse = [&](const std::string& s) { return parse_polynomial(s, b->algebra_ptr()); };
  r.data["file"] = o.file;
  r.data["arguments"] = {o.a, o.b, o.c};
  try {
    MasseyResult m = massey_triple(b, parse(o.a), parse(o.b), parse(o.c));
    r.data["defined"] = true;
    r.data["xi"] = m.xi.to_string();
    r.data["eta"] = m.eta.to_string();
    r.data["value"] = class_json(m.value);
    r.data["indeterminacy_dimension"] = m.indeterminacy.size();
    json ind = json::array();
    for (const auto& v : m.indeterminacy) ind.push_back(rationals(v));
    r.data["indeterminacy"] = ind;
    r.line("<[" + o.a + "], [" + o.b + "], [" + o.c + "]> in H^" + std::to_string(m.value.degree));
    r.line("  xi = " + m.xi.to_string() + ", eta = " + m.eta.to_string());
    r.line("  representative " + m.value.representative.to_string() + ", class " + m.value.describe());
    r.line("  indeterminacy dimension " + std::to_string(m.indeterminacy.size()));
    r.status = m.value.vanishes() ? kOk : kNonvanishing;
  } catch (const ObstructionError& e) {
    // a*b or b*c not exact: the product is undefined
    r.data["defined"] = false;
    r.data["reason"] = e.what();
    r.line(std::string("undefined: ") + e.what());
    r.status = kNonvanishing;
  }
  return r;
}

Report check_cmd(const Options& o) {
  Report r;
  CdgaPtr a = load_cdga(o.file);
  auto dd = check_d_squared(*a, o.seed);
  auto lb = check_leibniz(*a, o.seed);
  r.data["file"] = o.file;
  r.data["seed"] = o.seed;
  r.data["d_squared"] = {{"generators_checked", dd.generators_checked},
                         {"generators_skipped", dd.generators_skipped},
                         {"products_checked", dd.products_checked},
                         {"violations", dd.violations}};
  r.data["leibniz"] = {{"pairs_checked", lb.pairs_checked}, {"violations", lb.violations}};
  r.data["passed"] = dd.passed() && lb.passed();
  r.line("dd = 0: " + std::string(dd.passed() ? "pass" : "FAIL") + " (" + std::to_string(dd.generators_checked) +
         " generators, " + std::to_string(dd.generators_skipped) + " skipped, " +
         std::to_string(dd.products_checked) + " products)");
  for (const auto& v : dd.violations) r.line("  " + v);
  r.line("Leibniz: " + std::string(lb.passed() ? "pass" : "FAIL") + " (" + std::to_string(lb.pairs_checked) +
         " pairs, seed " + std::to_string(o.seed) + ")");
  for (const auto& v : lb.violations) r.line("  " + v);
  r.status = dd.passed() && lb.passed() ? kOk : kNonvanishing;
  return r;
}

Report resolve_verify_cmd(const Options& o) {
  Report r;
  r.data["file"] = o.file;
  AssembleOptions opts;
  opts.require_corrected_attach = !o.permissive;
  std::optional<LoadedResolution> loaded;
  try {
    loaded.emplace(load_resolution(o.file, opts));
  } catch (const ResolutionError& e) {
    r.data["rejected"] = true;
    r.data["reason"] = e.what();
    r.data["passed"] = false;
    r.line(std::string("rejected: ") + e.what());
    r.status = kNonvanishing;
    return r;
  }
  const TruncatedRealization& y = loaded->realization;
  r.data["rejected"] = false;

  json levels = json::array();
  for (int k = 0; k <= y.top_level(); ++k) {
    const auto& l = y.level(k);
    json summands = json::array();
    std::string labels;
    for (const auto& s : l.summands) {
      summands.push_back(s.label());
      labels += (labels.empty() ? "" : ", ") + s.label();
    }
    levels.push_back({{"level", k}, {"generators", l.algebra->algebra().size()}, {"summands", summands}});
    r.line("W_" + std::to_string(k) + ": " + std::to_string(l.algebra->algebra().size()) + " generators (" + labels + ")");
  }
  r.data["levels"] = levels;

  json nulls = json::object();
  for (const auto& g : y.derived_nulls()) {
    nulls[bar_name(g)] = y.null(g).to_string();
    r.line("derived d_0(" + bar_name(g) + ") = " + y.null(g).to_string());
  }
  r.data["derived_nulls"] = nulls;

  auto ids = verify_simplicial_identities(y);
  json fails = json::array();
  for (const auto& f : ids.failures) {
    fails.push_back({{"identity", f.identity}, {"generator", f.generator}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  r.data["identities"] = {{"checks", ids.checks}, {"failures", fails}, {"passed", ids.passed()}};
  r.line("simplicial identities: " + std::string(ids.passed() ? "pass" : "FAIL") + " (" + std::to_string(ids.checks) +
         " checks, " + std::to_string(ids.failures.size()) + " failures)");
  for (const auto& f : ids.failures) r.line("  " + f.identity + " on " + f.generator + ": " + f.lhs + " vs " + f.rhs);

  auto latching = check_latching(y);
  r.data["latching"] = latching;
  r.line("latching census: " + std::string(latching.empty() ? "pass" : "FAIL"));
  for (const auto& p : latching) r.line("  " + p);

  MooreReport m = moore_verify(y);
  json rows = json::array();
  r.line("Moore complex of k -> H^e(W_k), e = 1.." + std::to_string(m.max_degree) + ":");
  for (const auto& d : m.degrees) {
    json row = {{"degree", d.degree},
                {"level_dims", sizes(d.level_dims)},
                {"normalized", sizes(d.normalized)},
                {"cycles", sizes(d.cycles)},
                {"boundaries", sizes(d.boundaries)},
                {"h0", d.h0},
                {"h1", d.h1 ? json(*d.h1) : json(nullptr)},
                {"expected", d.expected ? json(*d.expected) : json(nullptr)},
                {"augmentation_iso", d.augmentation_iso ? json(*d.augmentation_iso) : json(nullptr)},
                {"passed", d.passed}};
    rows.push_back(row);
    std::string s = "  e=" + std::to_string(d.degree) + "  H(W_k) " + join(d.level_dims) + "  N_k " +
                    join(d.normalized) + "  h0 " + std::to_string(d.h0);
    if (d.h1) s += "  h1 " + std::to_string(*d.h1);
    if (d.expected) s += "  expected " + std::to_string(*d.expected);
    if (d.augmentation_iso) s += std::string("  iso ") + (*d.augmentation_iso ? "yes" : "no");
    s += d.passed ? "  ok" : "  FAIL";
    r.line(s);
  }
  for (const auto& n : m.notes) r.line("  note: " + n);
  r.data["moore"] = {{"max_degree", m.max_degree}, {"degrees", rows}, {"notes", m.notes}, {"passed", m.passed()}};

  const bool passed = ids.passed() && latching.empty() && m.passed();
  r.data["passed"] = passed;
  r.line(passed ? "verified" : "verification FAILED");
  r.status = passed ? kOk : kNonvanishing;
  return r;
}

/// θ on W̄_0: the realization's augmentation when the target is its own,
/// otherwise identity by generator name where the target has a generator of
/// the same name and degree and zero elsewhere. The theta file goes on top.
CdgaMorphism build_theta(const TruncatedRealization& y, const CdgaPtr& target, const std::string& theta_path,
                         std::vector<std::string>& defaulted) {
  std::map<std::string, Polynomial> images;
  const bool own = y.base_augmentation() && y.target()->algebra().same_as(target->algebra());
  for (const auto& g : y.basis(0)) {
    auto idx = target->algebra().find(g.name);
    if (own) {
      images.emplace(g.name, transport(y.base_augmentation()->image(g.name), target->algebra_ptr()));
    } else if (idx && target->algebra().generator(*idx).degree == g.degree) {
      images.emplace(g.name, target->gen(g.name));
    } else {
      images.emplace(g.name, target->zero());
      defaulted.push_back(g.name);
    }
  }
  if (!theta_path.empty()) {
    MorphismFile f;
    try {
      f = parse_morphism_file(read_text(theta_path));
      for (const auto& a : f.map) {
        if (!images.count(a.name)) throw ParseError(a.line, "theta for '" + a.name + "' which is not a level-0 basis generator");
        try {
          images.insert_or_assign(a.name, parse_polynomial(a.expression, target->algebra_ptr()));
        } catch (const Error& e) {
          throw ParseError(a.line, e.what());
        }
        std::erase(defaulted, a.name);
      }
    } catch (const ParseError& e) {
      throw ParseError(0, theta_path + ": " + e.what());
    }
  }
  return CdgaMorphism(y.base(0), target, images);
}

Report obstruct_space_cmd(const Options& o, std::ostream& err) {
  Report r;
  auto loaded = load_resolution(o.realization);
  const TruncatedRealization& y = loaded.realization;
  CdgaPtr target = load_cdga(o.target);
  std::vector<std::string> defaulted;
  CdgaMorphism theta = build_theta(y, target, o.theta, defaulted);
  for (const auto& g : defaulted) err << "warning: theta sends '" << g << "' to 0\n";

  r.data["realization"] = o.realization;
  r.data["target"] = o.target;
  json th = json::object();
  for (const auto& g : y.basis(0)) th[g.name] = theta.image(g.name).to_string();
  r.data["theta"] = th;
  r.data["theta_defaulted"] = defaulted;

  StrandRun run = run_strand(y, theta);
  r.data["stages_completed"] = run.last.stage();
  r.data["failed_stage"] = run.failed_stage ? json(*run.failed_stage) : json(nullptr);
  json values = json::object();
  for (const auto& [k, v] : run.last.values()) values[k] = v.to_string();
  r.data["values"] = values;
  auto coeq = coequalizer_failures(y, run.last);
  r.data["coequalizer_failures"] = coeq;
  r.data["coequalizer_failure_count"] = coeq.size();

  json failures = json::array();
  for (const auto& f : run.failures) {
    json fj = class_json(f.obstruction);
    fj["generator"] = f.generator;
    failures.push_back(fj);
  }
  r.data["failures"] = failures;
  const bool vanishes = !run.failed_stage && coeq.empty();
  r.data["vanishes"] = vanishes;

  if (run.failed_stage) {
    r.line("strand fails at stage " + std::to_string(*run.failed_stage) + " (stages completed: " +
           std::to_string(run.last.stage()) + ")");
    for (const auto& f : run.failures) {
      r.line("  " + f.generator + ": representative " + f.obstruction.representative.to_string() + ", class " +
             f.obstruction.describe() + " in H^" + std::to_string(f.obstruction.degree) +
             (f.obstruction.vanishes() ? "" : " (nonzero)"));
    }
  } else {
    r.line("strand extends through stage " + std::to_string(run.last.stage()));
    for (const auto& [k, v] : run.last.values()) r.line("  " + k + " -> " + v.to_string());
  }
  r.line("coequalizer failures: " + std::to_string(coeq.size()));
  r.status = vanishes ? kOk : kNonvanishing;
  return r;
}

Report obstruct_map_cmd(const Options& o, std::ostream& err) {
  Report r;
  auto m = load_morphism(o.morphism);
  for (const auto& g : m.defaulted) err << "warning: morphism sends '" << g << "' to 0\n";
  auto loaded = load_resolution(o.realization);
  const TruncatedRealization& y = loaded.realization;
  if (!y.base_augmentation()) throw ParseError(0, o.realization + ": map obstructions need 'target' and 'augment' lines");
  MapObstruction mo = map_obstruction(m.morphism, y, *y.base_augmentation());
  r.data["morphism"] = o.morphism;
  r.data["realization"] = o.realization;
  json terms = json::array();
  for (const auto& t : mo.terms) {
    json tj = class_json(t.value);
    tj["generator"] = t.generator;
    tj["beta"] = t.beta.to_string();
    terms.push_back(tj);
    r.line(t.generator + ": beta = " + t.beta.to_string() + ", residue " + t.value.representative.to_string() +
           ", class " + t.value.describe() + " in H^" + std::to_string(t.value.degree) + " of the target");
  }
  r.data["terms"] = terms;
  r.data["vanishes"] = mo.vanishes();
  r.line(mo.vanishes() ? "obstruction vanishes" : "obstruction is nonzero");
  r.status = mo.vanishes() ? kOk : kNonvanishing;
  return r;
}

Report polytope_cmd(const Options& o) {
  Report r;
  CubicalGluing p = build_folding_polytope(o.dim);
  FacetCensus c = facet_census(p);
  StructureReport s = check_structure(p);
  r.data["dim"] = o.dim;
  r.data["cubes"] = c.cubes;
  r.data["gluings"] = p.gluings.size();
  r.data["interior_pairs"] = c.interior_pairs;
  r.data["boundary_facets"] = c.boundary_facets;
  json cubes = json::array();
  for (const auto& cube : p.cubes) {
    auto [sd, cd] = cube.product_type();
    cubes.push_back({{"index", cube.index}, {"simplex_dim", sd}, {"cube_dim", cd}});
  }
  r.data["cube_types"] = cubes;
  r.data["structure"] = {{"product_types", s.product_types}, {"facets_used_once", s.facets_used_once},
                         {"dual_path", s.dual_path},         {"euler_one", s.euler_one},
                         {"adjacency", s.adjacency},         {"dual_order", s.dual_order},
                         {"failures", s.failures},           {"passed", s.passed()}};
  r.line("folding polytope of dimension " + std::to_string(o.dim));
  if (o.census) {
    r.line("  cubes " + std::to_string(c.cubes) + ", gluings " + std::to_string(p.gluings.size()) +
           ", boundary facets " + std::to_string(c.boundary_facets));
  }
  for (const auto& cube : p.cubes) {
    auto [sd, cd] = cube.product_type();
    r.line("  cube " + std::to_string(cube.index) + ": Δ^" + std::to_string(sd) + " x I^" + std::to_string(cd));
  }
  std::string order;
  for (int k : s.dual_order) order += (order.empty() ? "" : " ") + std::to_string(k);
  r.line("  dual graph path: " + std::string(s.dual_path ? "yes" : "no") + " (" + order + ")");
  r.line("  structure: " + std::string(s.passed() ? "pass" : "FAIL"));
  for (const auto& f : s.failures) r.line("    " + f);
  r.status = s.passed() ? kOk : kNonvanishing;
  return r;
}

void emit(const Report& r, const std::string& command, bool as_json, std::ostream& out) {
  if (as_json) {
    json doc = r.data;
    doc["command"] = command;
    doc["status"] = status_word(r.status);
    doc["exit"] = r.status;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& l : r.lines) out << l << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with truncated free CDGAs, realizations and obstructions", "cdgalab"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json_output, "machine-readable report");
  app.add_option("--seed", o.seed, "seed for randomized checks")->envname("CDGALAB_SEED");

  auto* coh = app.add_subcommand("cohomology", "H^d of a CDGA file");
  coh->add_option("file", o.file)->required();
  auto* deg = coh->add_option("--degree", o.degree);
  auto* rng = coh->add_option("--range", o.range)->expected(2);
  deg->excludes(rng);

  auto* mas = app.add_subcommand("massey", "triple Massey product <a, b, c>");
  mas->add_option("file", o.file)->required();
  mas->add_option("a", o.a)->required();
  mas->add_option("b", o.b)->required();
  mas->add_option("c", o.c)->required();

  auto* chk = app.add_subcommand("check", "d^2 = 0 and a Leibniz sample");
  chk->add_option("file", o.file)->required();

  auto* res = app.add_subcommand("resolve", "realization tools");
  res->require_subcommand(1);
  auto* ver = res->add_subcommand("verify", "simplicial identities and Moore acyclicity");
  ver->add_option("file", o.file)->required();
  ver->add_flag("--permissive", o.permissive, "accept attaching maps with d1 attach != 0");

  auto* obs = app.add_subcommand("obstruct", "obstruction computations");
  obs->require_subcommand(1);
  auto* space = obs->add_subcommand("space", "extend a strand of the realization into a target");
  space->add_option("--realization", o.realization)->required();
  space->add_option("--target", o.target)->required();
  space->add_option("--theta", o.theta, "level-0 assignment overriding the by-name default");
  auto* map = obs->add_subcommand("map", "obstruction to realizing a morphism");
  map->add_option("--morphism", o.morphism)->required();
  map->add_option("--realization", o.realization)->required();

  auto* poly = app.add_subcommand("polytope", "folding polytope structure");
  poly->add_option("--dim", o.dim)->required()->check(CLI::PositiveNumber);
  poly->add_flag("--census", o.census);

  std::vector<std::string> argv_store{"cdgalab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::string command;
  for (const auto* sub : app.get_subcommands()) {
    command = sub->get_name();
    for (const auto* inner : sub->get_subcommands()) command += " " + inner->get_name();
  }
  try {
    Report r;
    if (coh->parsed()) r = cohomology_cmd(o);
    else if (mas->parsed()) r = massey_cmd(o);
    else if (chk->parsed()) r = check_cmd(o);
    else if (ver->parsed()) r = resolve_verify_cmd(o);
    else if (space->parsed()) r = obstruct_space_cmd(o, err);
    else if (map->parsed()) r = obstruct_map_cmd(o, err);
    else r = polytope_cmd(o);
    emit(r, command, o.json_output, out);
    return r.status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    if (o.json_output) {
      json doc = {{"command", command}, {"status", "error"}, {"exit", kUsage}, {"error", e.what()}};
      out << doc.dump(2) << "\n";
    }
    return kUsage;
  }
}

}  // namespace cdgalab::cli
