// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cdgalab/errors.hpp"
#include "cdgalab/expr.hpp"
#include "cdgalab/obstruction.hpp"
#include "cdgalab/polytope.hpp"
#include "fixtures.hpp"
#include "properties.hpp"

using namespace cdgalab;

namespace {

constexpr double kCohomologyBudget = 5.0;  // seconds, criteria 1 and 2
constexpr double kPropertyBudget = 60.0;   // seconds, criterion 6 in total

using Clock = std::chrono::steady_clock;

/// Collects mismatches for one criterion.
struct Check {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  template <class T, class U>
  void equal(const T& got, const U& want, const std::string& what) {
    if (got == want) return;
    std::ostringstream s;
    s << what << ": got " << got << ", want " << want;
    problems.push_back(s.str());
  }
};

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
  return out;
}

std::vector<std::string> reps(const CohomologyGroup& h) {
  std::vector<std::string> out;
  for (const auto& r : h.representatives()) out.push_back(r.to_string());
  return out;
}

CdgaMorphism by_name(const TruncatedRealization& y, const CdgaPtr& target) {
  std::map<std::string, Polynomial> m;
  for (const auto& g : y.basis(0)) m.emplace(g.name, target->gen(g.name));
  return CdgaMorphism(y.base(0), target, m);
}

void criterion1(Check& c) {
  auto a = load_fixture("A.cdga");
  const std::vector<std::size_t> dims{0, 0, 3, 0, 0, 1, 0, 1};
  for (int k = 1; k <= 8; ++k) {
    c.equal(cohomology(*a, k).dimension(), dims[static_cast<std::size_t>(k - 1)], "dim H^" + std::to_string(k));
  }
  c.equal(join(reps(cohomology(*a, 3))), std::string("x y z"), "H^3 basis");
  c.equal(join(reps(cohomology(*a, 6))), std::string("y*z"), "H^6 basis");
  c.equal(join(reps(cohomology(*a, 8))), std::string("z*u + y*v"), "H^8 basis");
}

void criterion2(Check& c) {
  auto b = load_fixture("B.cdga");
  auto h8 = cohomology(*b, 8);
  c.equal(h8.dimension(), 1u, "dim H^8(B)");
  c.equal(join(reps(h8)), std::string("w"), "H^8(B) basis");
  c.expect(is_zero_vector(class_of(*b, parse_polynomial("z*u + y*v", b->algebra_ptr()), h8)),
           "z*u + y*v is not exact in B");
}

void criterion3(Check& c) {
  auto a = load_fixture("A.cdga");
  auto ma = massey_triple(a, a->gen("y"), a->gen("x"), a->gen("z"));
  c.equal(ma.value.describe(), std::string("[z*u + y*v]"), "<y,x,z> in A");
  c.expect(!ma.value.vanishes(), "<y,x,z> vanishes in A");
  c.equal(ma.indeterminacy.size(), 0u, "indeterminacy in A");
  auto b = load_fixture("B.cdga");
  auto mb = massey_triple(b, b->gen("y"), b->gen("x"), b->gen("z"));
  c.expect(mb.value.vanishes(), "<y,x,z> is nonzero in B");
  c.equal(mb.indeterminacy.size(), 0u, "indeterminacy in B");
}

void criterion4(Check& c) {
  auto y = load_resolution(fixture("Y.res")).realization;
  StrandRun into_b = run_strand(y, by_name(y, load_fixture("B.cdga")));
  c.expect(into_b.failed_stage == std::optional<int>(2), "strand into B does not fail at stage 2");
  if (!into_b.failures.empty()) {
    const auto& o = into_b.failures[0].obstruction;
    c.equal(o.representative.to_string(), std::string("z*u + y*v - w"), "obstruction cocycle");
    c.expect(!o.vanishes(), "obstruction class vanishes");
  } else {
    c.expect(false, "no obstruction reported against B");
  }
  StrandRun into_a = run_strand(y, *y.base_augmentation());
  c.expect(!into_a.failed_stage, "strand into A fails");
  c.equal(into_a.last.stage(), 2, "stage reached in A");
}

void criterion5(Check& c) {
  auto f = load_resolution(fixture("fig5.res")).realization;
  auto theta = *f.base_augmentation();
  auto wh = map_obstruction(load_morphism(fixture("whitehead.morph")).morphism, f, theta);
  c.expect(!wh.vanishes(), "phi(u) = z has vanishing value");
  if (wh.value()) {
    c.equal(wh.value()->value.describe(), std::string("[z]"), "value of phi(u) = z");
    c.equal(wh.value()->value.degree, 5, "degree of the value");
  }
  auto zero = map_obstruction(load_morphism(fixture("zero.morph")).morphism, f, theta);
  c.expect(zero.vanishes(), "zero morphism has nonzero value");
}

void criterion6(Check& c) {
  const std::uint64_t seed = props::kDefaultSeed;
  const std::vector<std::pair<const char*, std::function<props::Outcome(std::uint64_t)>>> suites{
      {"koszul", [](std::uint64_t s) { return props::koszul(s); }},
      {"leibniz", [](std::uint64_t s) { return props::leibniz(s); }},
      {"d-squared", [](std::uint64_t s) { return props::d_squared(s); }},
      {"morphisms", [](std::uint64_t s) { return props::morphisms_commute(s); }},
      {"massey-shift", [](std::uint64_t s) { return props::massey_shift(s); }},
      {"linear", [](std::uint64_t s) { return props::linear_oracle(s); }},
  };
  std::uint64_t offset = 0;
  for (const auto& [name, run] : suites) {
    props::Outcome o = run(seed + offset++);
    c.expect(o.passed(), std::string(name) + ": " + o.failure);
    c.expect(o.cases >= props::kCases, std::string(name) + ": only " + std::to_string(o.cases) + " cases");
  }
}

void criterion7(Check& c) {
  auto y = load_resolution(fixture("Y.res")).realization;
  auto ids = verify_simplicial_identities(y);
  c.expect(ids.passed(), "simplicial identities fail");
  auto moore = moore_verify(y);
  c.expect(moore.passed(), "Moore check fails");
  std::map<int, std::size_t> want{{3, 3}, {6, 1}, {8, 1}};
  for (const auto& d : moore.degrees) {
    const std::size_t expect_h0 = want.count(d.degree) ? want[d.degree] : 0;
    c.equal(d.h0, expect_h0, "H_0 in degree " + std::to_string(d.degree));
    c.expect(d.h1 == std::optional<std::size_t>(0), "H_1 nonzero or missing in degree " + std::to_string(d.degree));
  }
  c.expect(moore.max_degree >= 8, "Moore range stops below degree 8");
  try {
    load_resolution(fixture("Y_uncorrected.res"));
    c.expect(false, "uncorrected attaching map accepted");
  } catch (const ResolutionError& e) {
    c.expect(std::string(e.what()).find("d1") != std::string::npos, std::string("unexpected rejection: ") + e.what());
  }
}

void criterion8(Check& c) {
  for (int n = 1; n <= 5; ++n) {
    const std::string tag = "n = " + std::to_string(n) + ": ";
    CubicalGluing p = build_folding_polytope(n);
    FacetCensus census = facet_census(p);
    c.equal(p.gluings.size(), static_cast<std::size_t>(n), tag + "gluings");
    c.equal(census.boundary_facets, static_cast<std::size_t>(2 * n * n), tag + "boundary facets");
    StructureReport s = check_structure(p);
    c.expect(s.dual_path, tag + "dual graph is not a path");
    c.expect(s.euler_one, tag + "Euler count is not 1");
    c.expect(s.passed(), tag + join(s.failures, "; "));
  }
  CubicalGluing p3 = build_folding_polytope(3);
  c.equal(p3.cubes.size(), 4u, "cubes for n = 3");
  if (p3.cubes.size() == 4) {
    const auto& c1 = p3.cubes[1].named;
    c.expect(c1.at("B0").opposite(c1.at("B1")), "B0, B1 not opposite in cube 1");
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto& ck = p3.cubes[k].named;
      c.expect(ck.at("C").adjacent(ck.at("B0")) && ck.at("C").adjacent(ck.at("B1")),
               "C not adjacent to both B0, B1 in cube " + std::to_string(k));
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    void (*run)(Check&);
    double budget;  // seconds; 0 means unbounded
  };
  const Criterion criteria[] = {
      {1, "cohomology of A in degrees 1..8", criterion1, kCohomologyBudget},
      {2, "cohomology of B in degree 8", criterion2, kCohomologyBudget},
      {3, "Massey product <y, x, z> in A and B", criterion3, 0},
      {4, "space obstruction against B and A", criterion4, 0},
      {5, "map obstruction for phi(u) = z and 0", criterion5, 0},
      {6, "seeded property suites", criterion6, kPropertyBudget},
      {7, "resolution verification", criterion7, 0},
      {8, "folding polytope census and structure", criterion8, 0},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = Clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (cr.budget > 0 && secs >= cr.budget) {
      std::ostringstream s;
      s << "took " << secs << " s, budget " << cr.budget << " s";
      c.expect(false, s.str());
    }
    const bool ok = c.problems.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " " << cr.id << " " << cr.title << " (" << std::fixed
              << std::setprecision(3) << secs << " s)";
    if (!ok) std::cout << ": " << join(c.problems, "; ");
    std::cout << "\n";
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
