#include <doctest.h>

#include "cdgalab/errors.hpp"
#include "cdgalab/expr.hpp"
#include "cdgalab/obstruction.hpp"
#include "fixtures.hpp"

using namespace cdgalab;

namespace {

Polynomial P(const CdgaPtr& a, const std::string& s) { return parse_polynomial(s, a->algebra_ptr()); }

CdgaMorphism by_name(const TruncatedRealization& y, const CdgaPtr& target) {
  std::map<std::string, Polynomial> m;
  for (const auto& g : y.basis(0)) m.emplace(g.name, target->gen(g.name));
  return CdgaMorphism(y.base(0), target, m);
}

}  // namespace

TEST_CASE("Massey product <y, x, z>") {
  auto a = load_fixture("A.cdga");
  auto m = massey_triple(a, a->gen("y"), a->gen("x"), a->gen("z"));
  CHECK(m.xi.to_string() == "-u");
  CHECK(m.eta.to_string() == "v");
  CHECK(m.value.representative.to_string() == "z*u + y*v");
  CHECK(m.value.degree == 8);
  CHECK_FALSE(m.value.vanishes());
  CHECK(m.value.describe() == "[z*u + y*v]");
  CHECK(m.indeterminacy.empty());

  auto b = load_fixture("B.cdga");
  auto mb = massey_triple(b, b->gen("y"), b->gen("x"), b->gen("z"));
  CHECK(mb.value.vanishes());
  CHECK(mb.indeterminacy.empty());
}

TEST_CASE("Massey product with a shifted defining system") {
  auto a = FreeCdga::make({{"x", 3}, {"y", 3}, {"e", 5}, {"u", 5}}, 9, {{"u", "x*y"}});
  auto m = massey_triple(a, a->gen("x"), a->gen("y"), a->gen("x"));
  // xi + e and eta - e are again defining systems
  auto shifted = massey_triple(a, a->gen("x"), a->gen("y"), a->gen("x"), m.xi + a->gen("e"), m.eta - a->gen("e"));
  CHECK_FALSE(shifted.value.representative == m.value.representative);
  std::vector<Rational> diff = shifted.value.coordinates;
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= m.value.coordinates[i];
  CHECK_FALSE(is_zero_vector(diff));
  CHECK(in_indeterminacy(m, diff));
  CHECK_THROWS_AS(massey_triple(a, a->gen("x"), a->gen("y"), a->gen("x"), a->gen("e"), m.eta), ObstructionError);
}

TEST_CASE("undefined Massey products") {
  auto a = load_fixture("A.cdga");
  CHECK_THROWS_AS(massey_triple(a, a->gen("y"), a->gen("z"), a->gen("x")), ObstructionError);
  CHECK_THROWS_AS(massey_triple(a, a->gen("u"), a->gen("x"), a->gen("z")), ObstructionError);
  CHECK_THROWS_AS(massey_triple(a, a->zero(), a->gen("x"), a->gen("z")), ObstructionError);
}

TEST_CASE("indeterminacy membership") {
  auto a = FreeCdga::make({{"x", 3}, {"y", 3}, {"z", 3}, {"u", 5}, {"e", 5}}, 9, {{"u", "x*y"}});
  // <x, y, x>: the indeterminacy contains [x e] since e is a cocycle
  auto m = massey_triple(a, a->gen("x"), a->gen("y"), a->gen("x"));
  CHECK_FALSE(m.indeterminacy.empty());
  auto h8 = cohomology(*a, 8);
  CHECK(in_indeterminacy(m, class_of(*a, P(a, "x*e"), h8)));
}

TEST_CASE("strand into the realization's own target") {
  auto y = load_resolution(fixture("Y.res")).realization;
  StrandRun run = run_strand(y, *y.base_augmentation());
  CHECK_FALSE(run.failed_stage);
  CHECK(run.last.stage() == 2);
  const auto& v = run.last.values();
  CHECK(v.at("u~").to_string() == "-u");
  CHECK(v.at("q~'").to_string() == "x*u");
  CHECK(v.at("q~~").to_string() == "-q");
  CHECK(v.at("p~'").is_zero());
  CHECK(v.at("p~~").is_zero());
  CHECK(coequalizer_failures(y, run.last).empty());
  CHECK_THROWS_AS(extend_strand(y, run.last), ObstructionError);
}

TEST_CASE("strand into the formal neighbour fails at stage 2") {
  auto y = load_resolution(fixture("Y.res")).realization;
  auto b = load_fixture("B.cdga");
  StrandRun run = run_strand(y, by_name(y, b));
  REQUIRE(run.failed_stage);
  CHECK(*run.failed_stage == 2);
  CHECK(run.last.stage() == 1);
  REQUIRE(run.failures.size() == 1);
  CHECK(run.failures[0].generator == "p~~");
  const auto& o = run.failures[0].obstruction;
  CHECK(o.representative.to_string() == "z*u + y*v - w");
  CHECK(o.degree == 8);
  CHECK_FALSE(o.vanishes());
  CHECK(o.describe() == "-[w]");
}

TEST_CASE("map obstruction of the Whitehead map") {
  auto f = load_resolution(fixture("fig5.res")).realization;
  auto a5 = f.target();
  auto bz = load_fixture("Bz.cdga");
  auto theta = *f.base_augmentation();

  CdgaMorphism wh(a5, bz, {{"u", bz->gen("z")}});
  MapObstruction mo = map_obstruction(wh, f, theta);
  CHECK_FALSE(mo.vanishes());
  REQUIRE(mo.value());
  CHECK(mo.value()->generator == "u");
  CHECK(mo.value()->value.representative.to_string() == "z");
  CHECK(mo.value()->value.degree == 5);
  CHECK(mo.value()->value.describe() == "[z]");

  CHECK(map_obstruction(CdgaMorphism(a5, bz, {}), f, theta).vanishes());
  CHECK(map_obstruction(CdgaMorphism::identity(a5), f, theta).vanishes());
}

TEST_CASE("map obstruction preconditions") {
  auto f = load_resolution(fixture("fig5.res")).realization;
  auto a5 = f.target();
  auto bz = load_fixture("Bz.cdga");
  CdgaMorphism wh(a5, bz, {{"u", bz->gen("z")}});
  // an augmentation into some other algebra than the source of phi
  auto a = load_fixture("A.cdga");
  CHECK_THROWS_AS(map_obstruction(wh, f, by_name(f, a)), ObstructionError);
  RealizationInput level0;
  level0.cap = 7;
  level0.basis[0] = {{"x", 3}, {"y", 3}};
  auto bare = TruncatedRealization::assemble(level0);
  CHECK_THROWS_AS(map_obstruction(wh, bare, by_name(bare, a5)), ObstructionError);
}
