#include "cdgalab/polytope.hpp"

#include <set>

#include "cdgalab/errors.hpp"

namespace cdgalab {

std::pair<int, int> LabeledCube::facet_type(const std::string& label) const {
  if (label == "B0" || label == "B1") return {index - 1, n - index};
  if (label == "C") return {index, n - index - 1};
  throw Error("unknown facet label '" + label + "'");
}

CubicalGluing build_folding_polytope(int n) {
  if (n < 1) throw Error("folding polytope needs n >= 1");
  CubicalGluing p;
  p.n = n;
  for (int k = 0; k <= n; ++k) {
    LabeledCube c;
    c.index = k;
    c.n = n;
    if (k >= 1) {
      c.named["B0"] = {1, 0};
      c.named["B1"] = k == 1 ? Facet{1, 1} : Facet{2, 0};
    }
    if (k < n) c.named["C"] = {k + 1, 0};
    p.cubes.push_back(std::move(c));
  }
  for (int k = 1; k <= n; ++k) p.gluings.push_back({k, "B1", k - 1, "C"});
  return p;
}

FacetCensus facet_census(const CubicalGluing& p) {
  FacetCensus c;
  c.cubes = p.cubes.size();
  c.interior_pairs = p.gluings.size();
  std::size_t total = 0;
  for (const auto& cube : p.cubes) total += static_cast<std::size_t>(cube.facet_count());
  c.boundary_facets = total - 2 * c.interior_pairs;
  return c;
}

StructureReport check_structure(const CubicalGluing& p) {
  StructureReport r;
  const int count = static_cast<int>(p.cubes.size());
  auto cube = [&](int k) -> const LabeledCube* {
    return k >= 0 && k < count ? &p.cubes[static_cast<std::size_t>(k)] : nullptr;
  };

  std::set<std::pair<int, std::string>> used;
  std::map<int, std::set<int>> adj;
  for (const auto& g : p.gluings) {
    const auto* a = cube(g.cube_a);
    const auto* b = cube(g.cube_b);
    const std::string what = "gluing " + std::to_string(g.cube_a) + ":" + g.label_a + " <-> " +
                             std::to_string(g.cube_b) + ":" + g.label_b;
    if (!a || !b || !a->named.count(g.label_a) || !b->named.count(g.label_b)) {
      r.product_types = false;
      r.failures.push_back(what + " names a missing facet");
      continue;
    }
    if (a->facet_type(g.label_a) != b->facet_type(g.label_b)) {
      r.product_types = false;
      r.failures.push_back(what + " joins facets of different product type");
    }
    for (const auto& key : {std::make_pair(g.cube_a, g.label_a), std::make_pair(g.cube_b, g.label_b)}) {
      if (!used.insert(key).second) {
        r.facets_used_once = false;
        r.failures.push_back("facet " + std::to_string(key.first) + ":" + key.second + " glued twice");
      }
    }
    if (g.cube_a == g.cube_b || !adj[g.cube_a].insert(g.cube_b).second) {
      r.dual_path = false;
    }
    adj[g.cube_b].insert(g.cube_a);
  }

  // Dual graph must be the path 0 - 1 - ... - n.
  for (int k = 0; k < count && r.dual_path; ++k) {
    std::set<int> want;
    if (k > 0) want.insert(k - 1);
    if (k + 1 < count) want.insert(k + 1);
    if (adj[k] != want) r.dual_path = false;
  }
  if (r.dual_path) {
    for (int k = 0; k < count; ++k) r.dual_order.push_back(k);
  } else {
    r.failures.push_back("dual graph is not the path 0-1-...-" + std::to_string(count - 1));
  }

  if (count - static_cast<int>(p.gluings.size()) != 1) {
    r.euler_one = false;
    r.failures.push_back("cubes - gluings = " + std::to_string(count - static_cast<int>(p.gluings.size())));
  }

  for (const auto& c : p.cubes) {
    const std::string at = "cube " + std::to_string(c.index) + ": ";
    auto b0 = c.named.find("B0");
    auto b1 = c.named.find("B1");
    auto cc = c.named.find("C");
    if (b0 != c.named.end() && b1 != c.named.end()) {
      const bool ok = c.index == 1 ? b0->second.opposite(b1->second) : b0->second.adjacent(b1->second);
      if (!ok) {
        r.adjacency = false;
        r.failures.push_back(at + (c.index == 1 ? "B0 and B1 are not opposite" : "B0 and B1 are not adjacent"));
      }
      if (cc != c.named.end() && !(cc->second.adjacent(b0->second) && cc->second.adjacent(b1->second))) {
        r.adjacency = false;
        r.failures.push_back(at + "C is not adjacent to both B facets");
      }
    }
  }
  return r;
}

}  // namespace cdgalab
