#include <doctest.h>

#include "cdgalab/errors.hpp"
#include "cdgalab/linear.hpp"
#include "oracles.hpp"

using namespace cdgalab;

namespace {

std::vector<std::vector<Rational>> Q(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<Rational>> out;
  for (auto r : rows) {
    std::vector<Rational> row;
    for (int x : r) row.emplace_back(x);
    out.push_back(row);
  }
  return out;
}

}  // namespace

TEST_CASE("pivot is the smallest surviving row") {
  ColumnReducer red;
  CHECK(red.add({{2, 5}, {4, 1}}).independent);
  CHECK(red.add({{1, 1}, {2, 1}}).independent);
  REQUIRE(red.pivot_rows().size() == 2);
  CHECK(red.pivot_rows()[0] == 2);
  CHECK(red.pivot_rows()[1] == 1);
  auto dep = red.add({{1, 2}, {2, 7}, {4, 1}});
  CHECK_FALSE(dep.independent);
  // col2 = col0 + 2 col1
  CHECK(dep.relation.at(2) == 1);
  CHECK(dep.relation.at(0) == -1);
  CHECK(dep.relation.at(1) == -2);
}

TEST_CASE("solve returns a residue certificate") {
  auto m = RationalMatrix::from_dense(Q({{1, 0}, {0, 1}, {1, 1}}));
  std::vector<Rational> good{Rational(1), Rational(2), Rational(3)};
  std::vector<Rational> bad{Rational(1), Rational(2), Rational(4)};
  auto s = solve_in_image(m, std::span<const Rational>(good));
  REQUIRE(s.solution);
  CHECK(m.apply(*s.solution) == to_sparse(good));
  auto t = solve_in_image(m, std::span<const Rational>(bad));
  CHECK_FALSE(t.solution);
  REQUIRE(t.certificate.size() == 1);
  CHECK(t.certificate.begin()->first == 2);
  CHECK(t.certificate.begin()->second == 1);
  CHECK_THROWS_AS(solve_in_image(m, SparseVector{{7, Rational(1)}}), DimensionMismatch);
}

TEST_CASE("zero and empty matrices") {
  RationalMatrix z(3, 2);
  CHECK(rank(z) == 0);
  CHECK(kernel_basis(z).size() == 2);
  RationalMatrix e(0, 0);
  CHECK(rank(e) == 0);
}

TEST_CASE("rank, kernel and solve agree with Bareiss on random matrices") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.range(1, 6));
    const auto cols = static_cast<std::size_t>(rng.range(1, 6));
    auto dense = oracle::random_dense(rng, rows, cols);
    auto b = oracle::random_dense(rng, rows, 1);
    std::vector<mpq_class> target;
    for (auto& row : b) target.push_back(row[0]);
    INFO("trial " << trial);
    CHECK(oracle::check_linear(dense, target) == "");
  }
}
