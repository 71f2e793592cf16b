#include <doctest.h>

#include "cdgalab/errors.hpp"
#include "cdgalab/expr.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cdgalab;

namespace {

Polynomial P(const CdgaPtr& a, const std::string& s) { return parse_polynomial(s, a->algebra_ptr()); }

std::vector<std::string> reps(const CohomologyGroup& h) {
  std::vector<std::string> out;
  for (const auto& p : h.representatives()) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("cohomology of the n = 3 model through degree 8") {
  auto a = load_fixture("A.cdga");
  const std::vector<std::size_t> dims{0, 0, 3, 0, 0, 1, 0, 1};
  for (int d = 1; d <= 8; ++d) CHECK(cohomology(*a, d).dimension() == dims[d - 1]);
  CHECK(reps(cohomology(*a, 3)) == std::vector<std::string>{"x", "y", "z"});
  CHECK(reps(cohomology(*a, 6)) == std::vector<std::string>{"y*z"});
  CHECK(reps(cohomology(*a, 8)) == std::vector<std::string>{"z*u + y*v"});
  CHECK(cohomology(*a, 0).dimension() == 1);
  CHECK_THROWS_AS(cohomology(*a, 9), UndecidableDegree);
}

TEST_CASE("cohomology dimensions agree with the enumeration oracle") {
  for (const char* name : {"A.cdga", "B.cdga", "A5.cdga"}) {
    auto a = load_fixture(name);
    oracle::CohomologyOracle o{*a};
    for (int d = 0; d + 1 <= a->cap(); ++d) {
      INFO(name << " degree " << d);
      CHECK(cohomology(*a, d).dimension() == o.dim(d));
    }
  }
}

TEST_CASE("monomial space dimensions of the n = 3 model (oracle, frozen)") {
  auto a = load_fixture("A.cdga");
  oracle::CohomologyOracle o{*a};
  const std::vector<std::size_t> frozen{1, 0, 0, 3, 0, 2, 3, 4, 6, 1};
  for (int d = 0; d <= 9; ++d) {
    CHECK(o.space_dim(d) == frozen[static_cast<std::size_t>(d)]);
    CHECK(DegreeBasis(a->algebra_ptr(), d).size() == frozen[static_cast<std::size_t>(d)]);
  }
}

TEST_CASE("B kills the Massey representative and carries w") {
  auto b = load_fixture("B.cdga");
  auto h8 = cohomology(*b, 8);
  CHECK(reps(h8) == std::vector<std::string>{"w"});
  CHECK(is_zero_vector(class_of(*b, P(b, "z*u + y*v"), h8)));
  CHECK(class_of(*b, P(b, "z*u + y*v - w"), h8) == std::vector<Rational>{Rational(-1)});
}

TEST_CASE("class_of and solve_coboundary") {
  auto a = load_fixture("A.cdga");
  auto h3 = cohomology(*a, 3);
  CHECK(class_of(*a, P(a, "2*x - y"), h3) == std::vector<Rational>{Rational(2), Rational(-1), Rational(0)});
  auto sol = solve_coboundary(*a, P(a, "x*y"), 6);
  REQUIRE(sol);
  CHECK(a->differentiate(*sol) == P(a, "x*y"));
  CHECK_FALSE(solve_coboundary(*a, P(a, "y*z"), 6));
  CHECK_THROWS(class_of(*a, P(a, "u"), cohomology(*a, 5)));
  CHECK(P(a, "u*x").to_string() == "-x*u");
}

TEST_CASE("differential checks") {
  auto a = load_fixture("A.cdga");
  CHECK(check_d_squared(*a).passed());
  CHECK(check_leibniz(*a).passed());
  CHECK(a->differentiate(P(a, "x*u")) == P(a, "-x*x*y"));
  CHECK_THROWS_AS(a->differentiate(P(a, "x*y*z")), CapOverflow);
}

TEST_CASE("construction rejects bad differentials") {
  std::vector<Generator> g{{"a", 2}, {"b", 3}, {"c", 4}};
  CHECK_THROWS_AS(FreeCdga::make(g, 8, {{"b", "a"}}), DifferentialError);
  try {
    FreeCdga::make(g, 8, {{"b", "a^2"}, {"c", "a*b"}});
    FAIL("expected d^2 failure");
  } catch (const DifferentialError& e) {
    CHECK(e.generator() == "c");
  }
}

TEST_CASE("morphisms") {
  auto a5 = load_fixture("A5.cdga");
  auto bz = load_fixture("Bz.cdga");
  CdgaMorphism wh(a5, bz, {{"u", bz->gen("z")}});
  CHECK(wh.defaulted() == std::vector<std::string>{"x", "y"});
  CHECK(wh.apply(P(a5, "x*u")).is_zero());
  CHECK_THROWS_AS(CdgaMorphism(a5, a5, {{"x", a5->gen("x")}, {"y", a5->gen("y")}}), MorphismError);
  CHECK_THROWS_AS(CdgaMorphism(a5, bz, {{"x", bz->gen("z")}}), MorphismError);
  auto id = CdgaMorphism::identity(a5);
  CHECK(wh.after(id).image("u") == bz->gen("z"));
}

TEST_CASE("standard models") {
  auto gem = gem_model(std::vector<std::pair<int, int>>{{3, 2}, {6, 1}}, 9);
  CHECK(gem->algebra().size() == 3);
  CHECK(gem->algebra().generator(2).name == "e6_1");
  auto cone = cone_model({{"u", 6}}, 9);
  CHECK(cone->differentiate(cone->gen("u~")) == -cone->gen("u'"));
  CHECK(cohomology(*cone, 5).dimension() == 0);
  CHECK(cohomology(*cone, 6).dimension() == 0);
  CHECK_THROWS(cone_model({{"t", 1}}, 9));
  auto s = suspension_model({{"p", 9}}, 9);
  CHECK(s->algebra().generator(0).degree == 8);
  auto a5 = FreeCdga::make({{"x", 3}, {"y", 3}, {"u", 5}}, 7, {{"u", "x*y"}});
  CHECK_THROWS(coproduct(*a5, *a5));
  auto both = coproduct(*a5, *a5, true);
  CHECK(both.algebra->algebra().size() == 6);
  CHECK(both.renamed.at("x") == "x_1");
  CHECK(both.algebra->differentiate(both.algebra->gen("u_1")) == P(both.algebra, "x_1*y_1"));
}
