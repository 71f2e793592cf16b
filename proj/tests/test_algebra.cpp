#include <doctest.h>

#include <set>

#include "cdgalab/algebra.hpp"
#include "cdgalab/cdga.hpp"
#include "cdgalab/errors.hpp"
#include "cdgalab/expr.hpp"
#include "cdgalab/rng.hpp"
#include "oracles.hpp"

using namespace cdgalab;

namespace {

AlgebraPtr mixed_algebra(int cap = 12) {
  return std::make_shared<const GradedAlgebra>(
      std::vector<Generator>{{"a", 2}, {"x", 3}, {"y", 3}, {"b", 4}, {"u", 5}}, cap);
}

Polynomial P(const std::string& s, const AlgebraPtr& a) { return parse_polynomial(s, a); }

}  // namespace

TEST_CASE("generators are ordered by degree then name") {
  GradedAlgebra alg({{"u", 5}, {"y", 3}, {"a", 2}, {"x", 3}}, 10);
  REQUIRE(alg.size() == 4);
  CHECK(alg.generator(0).name == "a");
  CHECK(alg.generator(1).name == "x");
  CHECK(alg.generator(2).name == "y");
  CHECK(alg.generator(3).name == "u");
  CHECK_THROWS_AS(alg.index_of("nope"), UnknownGenerator);
}

TEST_CASE("rationals print as p/q") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-3")) == "-3");
  CHECK(to_string(parse_rational("+0/5")) == "0");
}

TEST_CASE("unreduced coefficients are reduced on entry") {
  auto a = mixed_algebra();
  Polynomial p = Polynomial::monomial(a, a->generator_monomial(0), Rational(2, 6));
  CHECK(p == Polynomial::monomial(a, a->generator_monomial(0), Rational(1, 3)));
  CHECK(p.to_string() == "1/3*a");
  SplitMix64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Polynomial q = random_polynomial(a, 6, rng);
    for (const auto& [m, c] : q.terms()) CHECK(gcd(c.get_num(), c.get_den()) == 1);
  }
}

TEST_CASE("normalize agrees with the bubble-sort oracle") {
  auto alg = mixed_algebra();
  SplitMix64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t len = 1 + rng.below(4);
    std::vector<oracle::Letter> word;
    std::vector<Monomial::Factor> raw;
    int degree = 0;
    for (std::size_t i = 0; i < len; ++i) {
      auto idx = static_cast<std::uint32_t>(rng.below(alg->size()));
      word.push_back({idx, alg->generator(idx).degree});
      raw.emplace_back(idx, 1);
      degree += alg->generator(idx).degree;
    }
    if (degree > alg->cap()) continue;
    auto expect = oracle::bubble_sort(word);
    auto got = alg->normalize(raw);
    REQUIRE(got.has_value() == !expect.zero);
    if (!got) continue;
    CHECK(got->sign == expect.sign);
    std::vector<std::size_t> expanded;
    for (const auto& [idx, e] : got->monomial.factors()) expanded.insert(expanded.end(), e, idx);
    CHECK(expanded == expect.word);
  }
}

TEST_CASE("degree bases match exponent-vector enumeration") {
  auto alg = mixed_algebra();
  std::vector<int> degrees;
  for (const auto& g : alg->generators()) degrees.push_back(g.degree);
  for (int d = 0; d <= alg->cap(); ++d) {
    auto basis = alg->basis(d);
    auto expect = oracle::exponent_vectors(degrees, d);
    CHECK(basis.size() == expect.size());
    std::set<std::vector<unsigned>> seen;
    for (const auto& m : basis) {
      std::vector<unsigned> e(degrees.size(), 0);
      for (const auto& [idx, pow] : m.factors()) e[idx] = pow;
      seen.insert(e);
      CHECK(m.degree() == d);
    }
    CHECK(seen == std::set<std::vector<unsigned>>(expect.begin(), expect.end()));
  }
  CHECK_THROWS_AS(alg->basis(alg->cap() + 1), CapOverflow);
  CHECK(alg->basis(-1).empty());
}

TEST_CASE("odd generators anticommute and square to zero") {
  auto alg = mixed_algebra();
  Polynomial x = Polynomial::generator(alg, "x");
  Polynomial y = Polynomial::generator(alg, "y");
  Polynomial a = Polynomial::generator(alg, "a");
  CHECK((x * y + y * x).is_zero());
  CHECK((x * x).is_zero());
  CHECK(a * x == x * a);
  CHECK((a * a).to_string() == "a^2");
  CHECK((y * x).to_string() == "-x*y");
}

TEST_CASE("expression parser") {
  auto alg = mixed_algebra();
  CHECK(P("1/2*x*y - 3/4*a*x + 2", alg).to_string() == "2 - 3/4*a*x + 1/2*x*y");
  CHECK(P("(a + b)^2", alg) == P("a^2 + 2*a*b + b^2", alg));
  CHECK(P("-(x*y)", alg) == P("y*x", alg));
  CHECK(P("0", alg).is_zero());
  CHECK_THROWS_AS(P("x^2", alg), ParseError);
  CHECK_THROWS_AS(P("x*(y", alg), ParseError);
  CHECK_THROWS_AS(P("2/0", alg), ParseError);
  CHECK_THROWS_AS(P("q", alg), UnknownGenerator);
  CHECK_THROWS_AS(P("f(x)", alg), ParseError);
}

TEST_CASE("products past the cap are dropped and flagged") {
  auto alg = mixed_algebra(6);
  Polynomial a = Polynomial::generator(alg, "a");
  Polynomial x = Polynomial::generator(alg, "x");
  Polynomial p = a * a * a;
  CHECK_FALSE(p.truncated());
  Polynomial q = p * a;
  CHECK(q.is_zero());
  CHECK(q.truncated());
  CHECK((a * x).degree() == 5);
}

TEST_CASE("transport re-signs under renaming") {
  auto src = mixed_algebra();
  auto dst = std::make_shared<const GradedAlgebra>(std::vector<Generator>{{"x", 3}, {"y", 3}}, 12);
  Polynomial xy = P("x*y", src);
  CHECK(transport(xy, dst).to_string() == "x*y");
  CHECK(transport(xy, dst, {{"x", "y"}, {"y", "x"}}).to_string() == "-x*y");
  CHECK_THROWS_AS(transport(P("a", src), dst), UnknownGenerator);
}

TEST_CASE("mixing algebras is rejected") {
  auto a1 = mixed_algebra();
  auto a2 = mixed_algebra();
  auto other = std::make_shared<const GradedAlgebra>(std::vector<Generator>{{"x", 3}}, 12);
  CHECK_NOTHROW(Polynomial::generator(a1, "x") * Polynomial::generator(a2, "y"));
  CHECK_THROWS_AS(Polynomial::generator(a1, "x") * Polynomial::generator(other, "x"), MixedAlgebra);
}
