#include <doctest.h>

#include "cdgalab/errors.hpp"
#include "cdgalab/polytope.hpp"

using namespace cdgalab;

TEST_CASE("census for n = 1..5") {
  for (int n = 1; n <= 5; ++n) {
    CubicalGluing p = build_folding_polytope(n);
    FacetCensus c = facet_census(p);
    INFO("n = " << n);
    CHECK(c.cubes == static_cast<std::size_t>(n + 1));
    CHECK(p.gluings.size() == static_cast<std::size_t>(n));
    CHECK(c.interior_pairs == static_cast<std::size_t>(n));
    CHECK(c.boundary_facets == static_cast<std::size_t>(2 * n * n));
    StructureReport s = check_structure(p);
    CHECK(s.passed());
    CHECK(s.dual_path);
    CHECK(s.euler_one);
    std::vector<int> order;
    for (int k = 0; k <= n; ++k) order.push_back(k);
    CHECK(s.dual_order == order);
  }
  CHECK_THROWS_AS(build_folding_polytope(0), Error);
}

TEST_CASE("the four cubes for n = 3") {
  CubicalGluing p = build_folding_polytope(3);
  REQUIRE(p.cubes.size() == 4);
  for (int k = 0; k <= 3; ++k) {
    CHECK(p.cubes[static_cast<std::size_t>(k)].product_type() == std::pair<int, int>{k, 3 - k});
  }
  const auto& c1 = p.cubes[1];
  CHECK(c1.named.at("B0").opposite(c1.named.at("B1")));
  for (int k = 2; k <= 3; ++k) {
    const auto& c = p.cubes[static_cast<std::size_t>(k)];
    CHECK(c.named.at("B0").adjacent(c.named.at("B1")));
  }
  for (int k = 0; k < 3; ++k) {
    const auto& c = p.cubes[static_cast<std::size_t>(k)];
    if (k >= 1) {
      CHECK(c.named.at("C").adjacent(c.named.at("B0")));
      CHECK(c.named.at("C").adjacent(c.named.at("B1")));
    }
    CHECK_FALSE(c.named.count("C") == 0);
  }
  CHECK(p.cubes[3].named.count("C") == 0);
  for (const auto& g : p.gluings) {
    CHECK(g.cube_a == g.cube_b + 1);
    CHECK(g.label_a == "B1");
    CHECK(g.label_b == "C");
    CHECK(p.cubes[static_cast<std::size_t>(g.cube_a)].facet_type("B1") ==
          p.cubes[static_cast<std::size_t>(g.cube_b)].facet_type("C"));
  }
}
