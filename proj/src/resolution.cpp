#include "cdgalab/resolution.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cdgalab/errors.hpp"
#include "cdgalab/expr.hpp"

namespace cdgalab {

namespace {

enum class Role { Base, Prime, Bar, SuspensionPrime, SuspensionBar };

struct Origin {
  std::string base;   // W̄ generator the fragment is built on
  Role role = Role::Base;
  int basis_level = 0;
  std::string degeneracy;
  std::string plain;  // name inside N_j, without the degeneracy suffix
};

struct Part {
  Summand summand;
  std::vector<Generator> generators;
  std::vector<Origin> origins;
};

std::string decorate(const std::string& g, Role role) {
  switch (role) {
    case Role::Base: return g;
    case Role::Prime: return prime_name(g);
    case Role::Bar: return bar_name(g);
    case Role::SuspensionPrime: return prime_name(bar_name(g));
    case Role::SuspensionBar: return bar_name(bar_name(g));
  }
  return g;
}

int role_shift(Role role) {
  switch (role) {
    case Role::Base:
    case Role::Prime: return 0;
    case Role::Bar:
    case Role::SuspensionPrime: return 1;
    case Role::SuspensionBar: return 2;
  }
  return 0;
}

Part make_part(Fragment fragment, int basis_level, const std::vector<Generator>& basis) {
  Part p;
  p.summand.fragment = fragment;
  p.summand.basis_level = basis_level;
  std::vector<Role> roles;
  switch (fragment) {
    case Fragment::Base: roles = {Role::Base}; break;
    case Fragment::Cone: roles = {Role::Prime, Role::Bar}; break;
    case Fragment::SuspensionCone: roles = {Role::SuspensionPrime, Role::SuspensionBar}; break;
  }
  for (const auto& g : basis) {
    for (Role r : roles) {
      const std::string name = decorate(g.name, r);
      p.generators.push_back({name, g.degree - role_shift(r)});
      p.origins.push_back({g.name, r, basis_level, "", name});
      p.summand.generators.push_back(name);
    }
  }
  return p;
}

Part degenerate(const Part& part, const std::string& degeneracy) {
  Part p = part;
  p.summand.degeneracy = degeneracy;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    p.generators[i].name = copy_name(part.generators[i].name, degeneracy);
    p.origins[i].degeneracy = degeneracy;
    p.summand.generators[i] = p.generators[i].name;
  }
  return p;
}

std::vector<Part> nondegenerate(int j, int top, const std::array<std::vector<Generator>, 3>& basis) {
  std::vector<Part> out;
  out.push_back(make_part(Fragment::Base, j, basis[static_cast<std::size_t>(j)]));
  if (j + 1 <= top) out.push_back(make_part(Fragment::Cone, j + 1, basis[static_cast<std::size_t>(j + 1)]));
  if (j + 2 <= top) {
    out.push_back(make_part(Fragment::SuspensionCone, j + 2, basis[static_cast<std::size_t>(j + 2)]));
  }
  return out;
}

int n_index(const Summand& s) {
  switch (s.fragment) {
    case Fragment::Base: return s.basis_level;
    case Fragment::Cone: return s.basis_level - 1;
    case Fragment::SuspensionCone: return s.basis_level - 2;
  }
  return s.basis_level;
}

struct LevelData {
  CdgaPtr algebra;
  std::vector<Summand> summands;
  std::map<std::string, Origin> origin;
};

LevelData build_level(const std::vector<Part>& parts, int cap) {
  LevelData out;
  std::vector<Generator> gens;
  for (const auto& p : parts) {
    out.summands.push_back(p.summand);
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      gens.push_back(p.generators[i]);
      out.origin.emplace(p.generators[i].name, p.origins[i]);
    }
  }
  auto alg = std::make_shared<const GradedAlgebra>(gens, cap);
  std::map<std::string, Polynomial> d;
  for (const auto& [name, o] : out.origin) {
    if (o.role == Role::Bar || o.role == Role::SuspensionBar) {
      const Role partner = o.role == Role::Bar ? Role::Prime : Role::SuspensionPrime;
      const std::string prime = copy_name(decorate(o.base, partner), o.degeneracy);
      if (alg->generator(alg->index_of(prime)).degree <= cap) {
        d.emplace(name, -Polynomial::generator(alg, prime));
      }
    }
  }
  out.algebra = std::make_shared<const FreeCdga>(alg, d);
  return out;
}

using GeneratorImage = std::function<Polynomial(const std::string&, const Origin&)>;

CdgaMorphism make_map(const LevelData& from, const CdgaPtr& to, const GeneratorImage& image) {
  std::map<std::string, Polynomial> images;
  for (const auto& [name, o] : from.origin) images.emplace(name, image(name, o));
  return CdgaMorphism(from.algebra, to, images);
}

std::map<std::string, std::string> degeneracy_rename(const LevelData& from, const std::string& sfx) {
  std::map<std::string, std::string> r;
  for (const auto& [name, o] : from.origin) {
    if (o.degeneracy.empty()) {
      r.emplace(name, copy_name(name, sfx));
    } else {
      // s_j applied to an s0 copy of N_0 inside W_1 lands in the s1s0 copy
      r.emplace(name, copy_name(o.plain, "s1" + o.degeneracy));
    }
  }
  return r;
}

void require_identifier(const Generator& g) {
  if (g.name.empty() || !is_identifier_start(g.name.front())) {
    throw ResolutionError("invalid basis generator name '" + g.name + "'");
  }
  for (char c : g.name) {
    if (!is_identifier_char(c) || c == '\'' || c == '~' || c == '@') {
      throw ResolutionError("basis generator '" + g.name + "' uses a reserved decoration character");
    }
  }
}

Polynomial parse_at(const Assignment& a, const AlgebraPtr& algebra, const CallResolver& calls = {}) {
  try {
    return parse_polynomial(a.expression, algebra, calls);
  } catch (const ParseError& e) {
    if (e.line() > 0) throw;
    throw ParseError(a.line, e.what());
  } catch (const Error& e) {
    throw ParseError(a.line, e.what());
  }
}

[[noreturn]] void fail_at(const Assignment& a, const std::string& msg) {
  if (a.line > 0) throw ParseError(a.line, msg);
  throw ResolutionError(msg);
}

}  // namespace

std::string copy_name(const std::string& name, const std::string& degeneracy) {
  return degeneracy.empty() ? name : name + "@" + degeneracy;
}

std::string Summand::label() const {
  std::string s;
  if (!degeneracy.empty()) s = degeneracy + " ";
  switch (fragment) {
    case Fragment::Base: break;
    case Fragment::Cone: s += "C "; break;
    case Fragment::SuspensionCone: s += "CΣ "; break;
  }
  return s + "W" + std::to_string(basis_level);
}

std::size_t TruncatedRealization::latching_count(int r, int j) {
  if (r < 0 || j < 0 || j > r) return 0;
  // strictly increasing index tuples of length r - j in {0, ..., r - 1}
  std::size_t c = 1;
  for (int i = 0; i < r - j; ++i) c = c * static_cast<std::size_t>(r - i) / static_cast<std::size_t>(i + 1);
  return c;
}

const Polynomial& TruncatedRealization::attach(const std::string& generator) const {
  auto it = attach_.find(generator);
  if (it == attach_.end()) throw ResolutionError("no attaching map for '" + generator + "'");
  return it->second;
}

const Polynomial& TruncatedRealization::null(const std::string& generator) const {
  auto it = null_.find(generator);
  if (it == null_.end()) throw ResolutionError("no null value for '" + generator + "'");
  return it->second;
}

TruncatedRealization TruncatedRealization::assemble(const RealizationInput& input,
                                                    const AssembleOptions& options) {
  if (input.top_level < 0 || input.top_level > 2) {
    throw ResolutionError("simplicial dimension " + std::to_string(input.top_level) +
                          " not supported (at most 2)");
  }
  if (input.cap < 1) throw ResolutionError("cap must be positive");
  const int top = input.top_level;
  const int cap = input.cap;

  std::set<std::string> seen;
  for (int k = 0; k <= 2; ++k) {
    const auto& level_basis = input.basis[static_cast<std::size_t>(k)];
    if (k > top && !level_basis.empty()) {
      throw ResolutionError("basis at level " + std::to_string(k) + " above the top level");
    }
    for (const auto& g : level_basis) {
      require_identifier(g);
      if (!seen.insert(g.name).second) throw ResolutionError("basis generator '" + g.name + "' declared twice");
      if (g.degree < 1 + k) {
        throw ResolutionError("level-" + std::to_string(k) + " generator '" + g.name + "' needs degree >= " +
                              std::to_string(1 + k));
      }
    }
  }

  TruncatedRealization r;
  r.cap_ = cap;
  r.gamma_ = input.gamma;
  r.target_ = input.target;
  for (int k = 0; k <= top; ++k) {
    r.basis_.push_back(input.basis[static_cast<std::size_t>(k)]);
    r.base_.push_back(gem_model(input.basis[static_cast<std::size_t>(k)], cap));
  }

  // Algebras of every level.
  std::vector<LevelData> data;
  {
    auto n0 = nondegenerate(0, top, input.basis);
    data.push_back(build_level(n0, cap));
    if (top >= 1) {
      auto parts = nondegenerate(1, top, input.basis);
      for (const auto& p : n0) parts.push_back(degenerate(p, "s0"));
      data.push_back(build_level(parts, cap));
    }
    if (top >= 2) {
      auto parts = nondegenerate(2, top, input.basis);
      for (const auto& p : nondegenerate(1, top, input.basis)) parts.push_back(degenerate(p, "s0"));
      for (const auto& p : nondegenerate(1, top, input.basis)) parts.push_back(degenerate(p, "s1"));
      for (const auto& p : n0) parts.push_back(degenerate(p, "s1s0"));
      data.push_back(build_level(parts, cap));
    }
  }
  auto W = [&](int k) -> const CdgaPtr& { return data[static_cast<std::size_t>(k)].algebra; };

  // Attaching maps.
  std::map<std::string, int> level_of;
  for (int k = 1; k <= top; ++k) {
    for (const auto& g : input.basis[static_cast<std::size_t>(k)]) level_of.emplace(g.name, k);
  }
  auto s0_rename = top >= 1 ? degeneracy_rename(data[0], "s0") : std::map<std::string, std::string>{};
  for (const auto& a : input.attach) {
    auto it = level_of.find(a.name);
    if (it == level_of.end()) fail_at(a, "attach for '" + a.name + "' which is not a level-1 or level-2 basis generator");
    if (r.attach_.count(a.name)) fail_at(a, "attach for '" + a.name + "' given twice");
    const int k = it->second;
    Polynomial value(W(k - 1)->algebra_ptr());
    if (k == 1) {
      value = parse_at(a, W(0)->algebra_ptr());
    } else {
      CallResolver calls = [&](const std::string& fn, std::string_view arg) {
        if (fn != "s0") throw ParseError(a.line, "only s0(...) is available in level-2 attaching maps, not " + fn);
        Assignment inner{a.name, std::string(arg), a.line};
        return transport(parse_at(inner, W(0)->algebra_ptr()), W(1)->algebra_ptr(), s0_rename);
      };
      value = parse_at(a, W(1)->algebra_ptr(), calls);
    }
    const int deg = W(k)->algebra().generator(W(k)->algebra().index_of(a.name)).degree;
    if (!value.is_zero() && value.degree() != deg) {
      fail_at(a, "attach " + a.name + " = " + value.to_string() + " is not homogeneous of degree " +
                     std::to_string(deg));
    }
    if (deg < cap && !W(k - 1)->differentiate(value).is_zero()) {
      fail_at(a, "attach " + a.name + " = " + value.to_string() + " is not a cocycle");
    }
    if (k == 2) {
      for (const auto& [mono, c] : value.terms()) {
        for (const auto& [idx, e] : mono.factors()) {
          const auto& o = data[1].origin.at(W(1)->algebra().generator(idx).name);
          if (o.degeneracy.empty() && o.basis_level == 2) {
            fail_at(a, "attach " + a.name + " uses cone generator " + o.plain);
          }
        }
      }
    }
    r.attach_.emplace(a.name, std::move(value));
  }
  for (const auto& [name, k] : level_of) {
    if (!r.attach_.count(name)) throw ResolutionError("missing attaching map for '" + name + "'");
  }

  // Level 0.
  {
    SimplicialLevel l0;
    l0.dimension = 0;
    l0.algebra = W(0);
    l0.summands = data[0].summands;
    r.levels_.push_back(std::move(l0));
  }

  if (top >= 1) {
    const auto& from = data[1];
    auto to_w0 = [&](const std::string& n) { return Polynomial::generator(W(0)->algebra_ptr(), n); };
    // Faces away from the C W̄_2 summand; that part needs d_0 of attaching maps.
    auto d0_pre = make_map(from, W(0), [&](const std::string&, const Origin& o) {
      if (!o.degeneracy.empty()) return to_w0(o.plain);
      if (o.basis_level == 1) return r.attach_.at(o.base);
      return W(0)->zero();
    });
    auto d1 = make_map(from, W(0), [&](const std::string&, const Origin& o) {
      if (!o.degeneracy.empty()) return to_w0(o.plain);
      if (o.basis_level == 1) return to_w0(prime_name(o.base));
      if (o.role == Role::Prime) return W(0)->zero();
      return -to_w0(decorate(o.base, Role::SuspensionPrime));
    });

    // Nullhomotopies d_0(g~) with d(d_0 g~) = -d_0(g').
    std::map<std::string, const Assignment*> null_input;
    for (const auto& a : input.null) {
      std::string base = a.name;
      if (base.size() > 1 && base.back() == '~') base.pop_back();
      if (top < 2 || level_of.count(base) == 0 || level_of.at(base) != 2) {
        fail_at(a, "null value for '" + a.name + "' which is not g~ for a level-2 generator");
      }
      if (!null_input.emplace(base, &a).second) fail_at(a, "null value for '" + a.name + "' given twice");
    }
    if (top >= 2) {
      for (const auto& g : input.basis[2]) {
        if (!options.require_corrected_attach) continue;
        Polynomial d1_attach = d1.apply(r.attach_.at(g.name));
        if (!d1_attach.is_zero()) {
          std::string where;
          for (const auto& a : input.attach) {
            if (a.name == g.name && a.line > 0) where = "line " + std::to_string(a.line) + ": ";
          }
          throw ResolutionError(where + "d1 of attach(" + g.name + ") = " + d1_attach.to_string() +
                                " is not zero; the attaching map needs its degeneracy correction terms");
        }
      }
      for (const auto& g : input.basis[2]) {
        Polynomial d0_prime = d0_pre.apply(r.attach_.at(g.name));
        Polynomial want = -d0_prime;
        auto it = null_input.find(g.name);
        Polynomial value(W(0)->algebra_ptr());
        if (it != null_input.end()) {
          value = parse_at(*it->second, W(0)->algebra_ptr());
          if (!value.is_zero() && value.degree() != g.degree - 1) {
            fail_at(*it->second, "null value for " + bar_name(g.name) + " is not homogeneous of degree " +
                                     std::to_string(g.degree - 1));
          }
          if (!(W(0)->differentiate(value) == want)) {
            fail_at(*it->second, "d(" + value.to_string() + ") = " + W(0)->differentiate(value).to_string() +
                                     " but the cone relation requires " + want.to_string());
          }
        } else {
          auto solved = solve_coboundary(*W(0), want, g.degree);
          if (!solved) {
            throw ResolutionError("d_0(" + prime_name(g.name) + ") = " + d0_prime.to_string() +
                                  " admits no nullhomotopy in level 0");
          }
          value = *solved;
          r.derived_nulls_.push_back(g.name);
        }
        r.null_.emplace(g.name, std::move(value));
      }
    }

    auto d0 = make_map(from, W(0), [&](const std::string&, const Origin& o) {
      if (!o.degeneracy.empty()) return to_w0(o.plain);
      if (o.basis_level == 1) return r.attach_.at(o.base);
      if (o.role == Role::Prime) return d0_pre.apply(r.attach_.at(o.base));
      return r.null_.at(o.base);
    });
    auto s0 = make_map(data[0], W(1), [&](const std::string& name, const Origin&) {
      return Polynomial::generator(W(1)->algebra_ptr(), copy_name(name, "s0"));
    });

    SimplicialLevel l1;
    l1.dimension = 1;
    l1.algebra = W(1);
    l1.summands = from.summands;
    l1.faces = {d0, d1};
    l1.degeneracies = {s0};
    r.levels_.push_back(std::move(l1));
  }

  if (top >= 2) {
    const auto& from = data[2];
    const auto& lvl1 = r.levels_[1];
    auto to_w1 = [&](const std::string& n) { return Polynomial::generator(W(1)->algebra_ptr(), n); };
    auto s0_of = [&](const Polynomial& p) { return lvl1.degeneracies[0].apply(p); };
    std::vector<CdgaMorphism> faces;
    for (int i = 0; i <= 2; ++i) {
      faces.push_back(make_map(from, W(1), [&, i](const std::string&, const Origin& o) {
        if (o.degeneracy.empty()) {
          if (i == 0) return r.attach_.at(o.base);
          if (i == 1) return to_w1(prime_name(o.base));
          return W(1)->zero();
        }
        if (o.degeneracy == "s1s0") return to_w1(copy_name(o.plain, "s0"));
        if (o.degeneracy == "s0") {
          // d0 s0 = d1 s0 = id, d2 s0 = s0 d1
          if (i < 2) return to_w1(o.plain);
          return s0_of(lvl1.faces[1].apply(to_w1(o.plain)));
        }
        // s1: d0 s1 = s0 d0, d1 s1 = d2 s1 = id
        if (i == 0) return s0_of(lvl1.faces[0].apply(to_w1(o.plain)));
        return to_w1(o.plain);
      }));
    }
    std::vector<CdgaMorphism> degeneracies;
    for (const std::string sfx : {"s0", "s1"}) {
      auto rename = degeneracy_rename(data[1], sfx);
      degeneracies.push_back(make_map(data[1], W(2), [&](const std::string& name, const Origin&) {
        return Polynomial::generator(W(2)->algebra_ptr(), rename.at(name));
      }));
    }
    SimplicialLevel l2;
    l2.dimension = 2;
    l2.algebra = W(2);
    l2.summands = from.summands;
    l2.faces = std::move(faces);
    l2.degeneracies = std::move(degeneracies);
    r.levels_.push_back(std::move(l2));
  }

  if (input.target) {
    std::map<std::string, Polynomial> images;
    std::set<std::string> given;
    for (const auto& a : input.augment) {
      if (!r.base_[0]->algebra().find(a.name)) fail_at(a, "augment for '" + a.name + "' which is not a level-0 basis generator");
      if (!given.insert(a.name).second) fail_at(a, "augment for '" + a.name + "' given twice");
      images.emplace(a.name, parse_at(a, input.target->algebra_ptr()));
    }
    try {
      r.augmentation_.emplace(r.base_[0], input.target, images);
    } catch (const MorphismError& e) {
      throw ResolutionError(std::string("augmentation: ") + e.what());
    }
  } else if (!input.augment.empty()) {
    fail_at(input.augment.front(), "augment lines need a target");
  }
  return r;
}

// ---------------------------------------------------------------------------

IdentityReport verify_simplicial_identities(const TruncatedRealization& r) {
  IdentityReport report;
  auto compare = [&](const std::string& identity, const std::string& gen, const Polynomial& lhs,
                     const Polynomial& rhs) {
    ++report.checks;
    if (!(lhs == rhs)) report.failures.push_back({identity, gen, lhs.to_string(), rhs.to_string()});
  };
  auto idx = [](const char* prefix, int i) { return std::string(prefix) + std::to_string(i); };

  if (r.top_level() >= 1) {
    const auto& l1 = r.level(1);
    const auto& w0 = r.level(0).algebra;
    for (const auto& g : w0->algebra().generators()) {
      Polynomial p = w0->gen(g.name);
      Polynomial s = l1.degeneracies[0].apply(p);
      for (int i = 0; i <= 1; ++i) compare(idx("d", i) + " s0 = id", g.name, l1.faces[static_cast<std::size_t>(i)].apply(s), p);
    }
  }
  if (r.top_level() >= 2) {
    const auto& l1 = r.level(1);
    const auto& l2 = r.level(2);
    const auto& w2 = l2.algebra;
    const auto& w1 = l1.algebra;
    const auto& w0 = r.level(0).algebra;
    // d_i d_j = d_{j-1} d_i for i < j
    for (const auto& g : w2->algebra().generators()) {
      Polynomial p = w2->gen(g.name);
      for (int j = 1; j <= 2; ++j) {
        for (int i = 0; i < j; ++i) {
          Polynomial lhs = l1.faces[static_cast<std::size_t>(i)].apply(l2.faces[static_cast<std::size_t>(j)].apply(p));
          Polynomial rhs = l1.faces[static_cast<std::size_t>(j - 1)].apply(l2.faces[static_cast<std::size_t>(i)].apply(p));
          compare(idx("d", i) + " " + idx("d", j) + " = " + idx("d", j - 1) + " " + idx("d", i), g.name, lhs, rhs);
        }
      }
    }
    // s_i s_j = s_{j+1} s_i for i <= j, from W_0
    for (const auto& g : w0->algebra().generators()) {
      Polynomial s = l1.degeneracies[0].apply(w0->gen(g.name));
      compare("s0 s0 = s1 s0", g.name, l2.degeneracies[0].apply(s), l2.degeneracies[1].apply(s));
    }
    // d_i s_j on W_1
    for (const auto& g : w1->algebra().generators()) {
      Polynomial p = w1->gen(g.name);
      for (int j = 0; j <= 1; ++j) {
        Polynomial s = l2.degeneracies[static_cast<std::size_t>(j)].apply(p);
        for (int i = 0; i <= 2; ++i) {
          Polynomial lhs = l2.faces[static_cast<std::size_t>(i)].apply(s);
          Polynomial rhs = p;
          std::string name = idx("d", i) + " " + idx("s", j) + " = ";
          if (i < j) {
            rhs = l1.degeneracies[static_cast<std::size_t>(j - 1)].apply(l1.faces[static_cast<std::size_t>(i)].apply(p));
            name += idx("s", j - 1) + " " + idx("d", i);
          } else if (i == j || i == j + 1) {
            name += "id";
          } else {
            rhs = l1.degeneracies[static_cast<std::size_t>(j)].apply(l1.faces[static_cast<std::size_t>(i - 1)].apply(p));
            name += idx("s", j) + " " + idx("d", i - 1);
          }
          compare(name, g.name, lhs, rhs);
        }
      }
    }
  }
  return report;
}

std::vector<std::string> check_latching(const TruncatedRealization& r) {
  std::vector<std::string> problems;
  for (int k = 0; k <= r.top_level(); ++k) {
    std::map<int, std::set<std::string>> copies;
    for (const auto& s : r.level(k).summands) {
      const int j = n_index(s);
      std::size_t letters = 0;
      for (char c : s.degeneracy) letters += c == 's' ? 1 : 0;
      if (static_cast<int>(letters) != k - j) {
        problems.push_back("level " + std::to_string(k) + ": summand " + s.label() + " has the wrong degeneracy length");
      }
      copies[j].insert(s.degeneracy);
    }
    for (int j = 0; j <= k; ++j) {
      const std::size_t want = TruncatedRealization::latching_count(k, j);
      const std::size_t got = copies.count(j) ? copies.at(j).size() : 0;
      if (got != want) {
        problems.push_back("level " + std::to_string(k) + ": " + std::to_string(got) + " copies of N" +
                           std::to_string(j) + ", expected " + std::to_string(want));
      }
    }
  }
  return problems;
}

// ---------------------------------------------------------------------------

bool MooreReport::passed() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const MooreDegree& d) { return d.passed; });
}

namespace {

/// Columns: images of the representative basis of `from` in `to`'s coordinates.
RationalMatrix induced_matrix(const CdgaMorphism& f, const CohomologyGroup& from, const CohomologyGroup& to) {
  RationalMatrix m(to.dimension(), from.dimension());
  for (std::size_t j = 0; j < from.dimension(); ++j) {
    auto coords = class_of(*f.target(), f.apply(from.representatives()[j]), to);
    m.set_column(j, to_sparse(coords));
  }
  return m;
}

std::size_t span_rank(const std::vector<SparseVector>& vectors) {
  ColumnReducer red;
  for (const auto& v : vectors) red.add(v);
  return red.rank();
}

/// Kernel of the stacked matrices, as vectors in the common domain.
std::vector<SparseVector> common_kernel(const std::vector<const RationalMatrix*>& ms, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto* m : ms) rows += m->rows();
  RationalMatrix stacked(rows, cols);
  std::size_t offset = 0;
  for (const auto* m : ms) {
    for (std::size_t j = 0; j < cols; ++j) {
      for (const auto& [i, v] : m->column(j)) stacked.set(offset + i, j, v);
    }
    offset += m->rows();
  }
  if (ms.empty()) {
    std::vector<SparseVector> all;
    for (std::size_t j = 0; j < cols; ++j) all.push_back({{j, Rational(1)}});
    return all;
  }
  return kernel_basis(stacked);
}

}  // namespace

MooreReport moore_verify(const TruncatedRealization& r) {
  MooreReport report;
  report.max_degree = r.cap() - 1;
  const int top = r.top_level();
  std::map<int, std::size_t> declared;
  for (const auto& [deg, dim] : r.gamma()) declared[deg] = static_cast<std::size_t>(dim);

  std::optional<CdgaMorphism> to_target;
  if (r.base_augmentation()) {
    // Collapse the contractible cone summands, then apply the augmentation.
    std::map<std::string, Polynomial> keep;
    for (const auto& g : r.basis(0)) keep.emplace(g.name, r.base(0)->gen(g.name));
    CdgaMorphism collapse(r.level(0).algebra, r.base(0), keep);
    to_target.emplace(r.base_augmentation()->after(collapse));
  }
  if (top < 2) report.notes.push_back("H_1 not decided: no simplicial dimension 2 data");
  report.notes.push_back("degrees above " + std::to_string(report.max_degree) + " are not decidable at cap " +
                         std::to_string(r.cap()));

  for (int e = 1; e <= report.max_degree; ++e) {
    MooreDegree row;
    row.degree = e;
    std::vector<CohomologyGroup> h;
    for (int k = 0; k <= top; ++k) {
      h.push_back(cohomology(*r.level(k).algebra, e));
      row.level_dims.push_back(h.back().dimension());
    }
    // faces[k][i] : H(W_k) -> H(W_{k-1})
    std::vector<std::vector<RationalMatrix>> faces(static_cast<std::size_t>(top + 1));
    for (int k = 1; k <= top; ++k) {
      for (const auto& f : r.level(k).faces) {
        faces[static_cast<std::size_t>(k)].push_back(
            induced_matrix(f, h[static_cast<std::size_t>(k)], h[static_cast<std::size_t>(k - 1)]));
      }
    }
    std::vector<std::vector<SparseVector>> chains(static_cast<std::size_t>(top + 1));
    for (int k = 0; k <= top; ++k) {
      std::vector<const RationalMatrix*> rest;
      for (int i = 1; i <= k; ++i) rest.push_back(&faces[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]);
      chains[static_cast<std::size_t>(k)] = common_kernel(rest, h[static_cast<std::size_t>(k)].dimension());
      row.normalized.push_back(chains[static_cast<std::size_t>(k)].size());
    }
    std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top + 2), 0);  // rank of ∂ out of N_k
    for (int k = 1; k <= top; ++k) {
      std::vector<SparseVector> images;
      for (const auto& v : chains[static_cast<std::size_t>(k)]) images.push_back(faces[static_cast<std::size_t>(k)][0].apply(v));
      boundary_rank[static_cast<std::size_t>(k)] = span_rank(images);
    }
    for (int k = 0; k <= top; ++k) {
      const std::size_t out = k == 0 ? 0 : boundary_rank[static_cast<std::size_t>(k)];
      row.cycles.push_back(row.normalized[static_cast<std::size_t>(k)] - out);
      row.boundaries.push_back(k + 1 <= top ? boundary_rank[static_cast<std::size_t>(k + 1)] : 0);
    }
    row.h0 = row.cycles[0] - row.boundaries[0];
    if (top >= 2) row.h1 = row.cycles[1] - row.boundaries[1];

    if (!r.gamma().empty()) {
      row.expected = declared.count(e) ? declared.at(e) : 0;
    } else if (r.target() && e + 1 <= r.target()->cap()) {
      row.expected = cohomology(*r.target(), e).dimension();
    }
    if (to_target && e + 1 <= r.target()->cap()) {
      CohomologyGroup ht = cohomology(*r.target(), e);
      RationalMatrix eps = induced_matrix(*to_target, h[0], ht);
      bool coequalizes = true;
      if (top >= 1) {
        for (std::size_t j = 0; j < h[1].dimension(); ++j) {
          SparseVector unit{{j, Rational(1)}};
          SparseVector diff = faces[1][0].apply(unit);
          axpy(diff, Rational(-1), faces[1][1].apply(unit));
          if (!eps.apply(diff).empty()) coequalizes = false;
        }
      }
      row.augmentation_iso = coequalizes && rank(eps) == ht.dimension() && ht.dimension() == row.h0;
    }
    if (row.expected && *row.expected != row.h0) row.passed = false;
    if (row.h1 && *row.h1 != 0) row.passed = false;
    if (row.augmentation_iso && !*row.augmentation_iso) row.passed = false;
    report.degrees.push_back(std::move(row));
  }
  return report;
}

// ---------------------------------------------------------------------------

std::vector<MinimalGenerator> minimal_generators_dim0(const FreeCdga& b, std::optional<int> max_degree) {
  const int top = max_degree.value_or(b.cap() - 1);
  std::map<int, CohomologyGroup> h;
  auto group = [&](int d) -> const CohomologyGroup& {
    auto it = h.find(d);
    if (it == h.end()) it = h.emplace(d, cohomology(b, d)).first;
    return it->second;
  };
  std::vector<MinimalGenerator> out;
  for (int d = 1; d <= top; ++d) {
    const CohomologyGroup& hd = group(d);
    if (hd.dimension() == 0) continue;
    ColumnReducer decomposable;
    for (int a = 1; a <= d / 2; ++a) {
      const auto& ha = group(a);
      const auto& hb = group(d - a);
      for (const auto& x : ha.representatives()) {
        for (const auto& y : hb.representatives()) decomposable.add(to_sparse(class_of(b, x * y, hd)));
      }
    }
    for (std::size_t i = 0; i < hd.dimension(); ++i) {
      if (decomposable.add(SparseVector{{i, Rational(1)}}).independent) {
        out.push_back({d, hd.representatives()[i]});
      }
    }
  }
  return out;
}

std::vector<MinimalGenerator> minimal_generators_dim1(const CdgaMorphism& theta, std::optional<int> max_degree) {
  const FreeCdga& v0 = *theta.source();
  const FreeCdga& target = *theta.target();
  for (std::size_t i = 0; i < v0.algebra().size(); ++i) {
    if (!v0.d(i).is_zero()) throw ResolutionError("minimal_generators_dim1 needs a source with zero differential");
  }
  const int top = max_degree.value_or(std::min(v0.cap(), target.cap()) - 1);
  std::vector<MinimalGenerator> out;
  for (int d = 1; d <= top; ++d) {
    DegreeBasis basis(v0.algebra_ptr(), d);
    if (basis.size() == 0) continue;
    CohomologyGroup ht = cohomology(target, d);
    RationalMatrix m(ht.dimension(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Polynomial image = theta.apply(Polynomial::monomial(v0.algebra_ptr(), basis.monomials()[j]));
      m.set_column(j, to_sparse(class_of(target, image, ht)));
    }
    ColumnReducer ideal;
    for (const auto& g : out) {
      for (const auto& mono : v0.algebra().basis(d - g.degree)) {
        ideal.add(basis.coordinates(g.representative * Polynomial::monomial(v0.algebra_ptr(), mono)));
      }
    }
    for (const auto& k : kernel_basis(m)) {
      if (ideal.add(k).independent) out.push_back({d, basis.polynomial(k)});
    }
  }
  return out;
}

}  // namespace cdgalab
