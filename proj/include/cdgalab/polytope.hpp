#pragma once

// Folding polytopes: n+1 labeled n-cubes glued in a chain along facets.
// Cube k is Δ^k × I^(n-k) with coordinates t_1..t_n; facet (j, s) is t_j = s.
//   B_k^0 = {t_1 = 0}               (k >= 1)
//   B_1^1 = {t_1 = 1}, B_k^1 = {t_2 = 0} (k >= 2)
//   C^k   = {t_(k+1) = 0}           (k < n)
// Gluings identify B_k^1 of cube k with C^(k-1) of cube k-1.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cdgalab {

struct Facet {
  int coordinate = 1;  // 1-based
  int side = 0;        // 0 or 1
  bool operator==(const Facet&) const = default;
  bool opposite(const Facet& o) const { return coordinate == o.coordinate && side != o.side; }
  bool adjacent(const Facet& o) const { return coordinate != o.coordinate; }
};

struct LabeledCube {
  int index = 0;
  int n = 0;
  /// Named facets: "B0", "B1" (k >= 1) and "C" (k < n).
  std::map<std::string, Facet> named;
  /// (simplex dimension, cube dimension) of the cube itself.
  std::pair<int, int> product_type() const { return {index, n - index}; }
  /// Product type of a named facet.
  std::pair<int, int> facet_type(const std::string& label) const;
  int facet_count() const { return 2 * n; }
};

struct Gluing {
  int cube_a = 0;
  std::string label_a;  // "B1"
  int cube_b = 0;
  std::string label_b;  // "C"
};

struct CubicalGluing {
  int n = 0;
  std::vector<LabeledCube> cubes;
  std::vector<Gluing> gluings;
};

/// Throws Error for n < 1.
CubicalGluing build_folding_polytope(int n);

struct FacetCensus {
  std::size_t cubes = 0;
  std::size_t interior_pairs = 0;
  std::size_t boundary_facets = 0;
};

FacetCensus facet_census(const CubicalGluing& p);

struct StructureReport {
  bool product_types = true;
  bool facets_used_once = true;
  bool dual_path = true;
  bool euler_one = true;
  bool adjacency = true;
  std::vector<int> dual_order;  // cube indices along the path when it is one
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

StructureReport check_structure(const CubicalGluing& p);

}  // namespace cdgalab
