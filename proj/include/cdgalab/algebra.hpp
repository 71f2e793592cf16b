#pragma once

// Free graded-commutative algebras over Q: generators, monomial normal
// forms with Koszul signs, degreewise bases and polynomials.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdgalab/rational.hpp"

namespace cdgalab {

struct Generator {
  std::string name;
  int degree = 1;

  bool operator==(const Generator&) const = default;
};

class GradedAlgebra;

/// Normal-form monomial: factors sorted by generator index, odd generators
/// with exponent exactly 1. The empty factor list is the unit.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (generator index, exponent)

  Monomial() = default;

  const std::vector<Factor>& factors() const { return factors_; }
  int degree() const { return degree_; }
  bool is_unit() const { return factors_.empty(); }

  bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

 private:
  friend class GradedAlgebra;
  Monomial(std::vector<Factor> factors, int degree) : factors_(std::move(factors)), degree_(degree) {}

  std::vector<Factor> factors_;
  int degree_ = 0;
};

/// Colexicographic order: compare factor lists starting from the largest
/// generator. Fixes basis orderings and printing order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct SignedMonomial {
  int sign = 1;
  Monomial monomial;
};

/// Free graded-commutative algebra on finitely many generators, truncated
/// above a degree cap. Generators are ordered by (degree, name).
class GradedAlgebra {
 public:
  GradedAlgebra(std::vector<Generator> generators, int cap);

  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  int cap() const { return cap_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownGenerator.
  std::size_t index_of(std::string_view name) const;
  const Generator& generator(std::size_t index) const { return generators_.at(index); }
  bool is_odd(std::size_t index) const { return generators_[index].degree % 2 != 0; }

  /// Sorts an arbitrary product of generator powers into normal form.
  /// Returns nullopt when the product vanishes (an odd generator repeated).
  std::optional<SignedMonomial> normalize(std::span<const Monomial::Factor> raw) const;
  /// Name-based variant. Throws UnknownGenerator.
  std::optional<SignedMonomial> normalize(
      std::span<const std::pair<std::string, unsigned>> raw) const;

  Monomial unit() const { return Monomial{}; }
  Monomial generator_monomial(std::size_t index) const;

  /// All normal-form monomials of exactly `degree`, in MonomialOrder.
  /// Throws CapOverflow above the cap; empty for negative degrees.
  std::vector<Monomial> basis(int degree) const;

  std::string format(const Monomial& m) const;

  /// Same generators (names and degrees) and same cap.
  bool same_as(const GradedAlgebra& other) const;

 private:
  std::vector<Generator> generators_;
  std::unordered_map<std::string, std::size_t> index_;
  int cap_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Exact linear combination of monomials of one algebra. Zero coefficients
/// are never stored. Terms dropped by the degree cap set `truncated()`.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  explicit Polynomial(AlgebraPtr algebra);

  static Polynomial constant(AlgebraPtr algebra, const Rational& value);
  static Polynomial generator(AlgebraPtr algebra, std::string_view name);
  static Polynomial monomial(AlgebraPtr algebra, const Monomial& m, const Rational& coeff = 1);

  const GradedAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// True for the zero polynomial.
  bool is_homogeneous() const;
  /// Common degree of all terms; nullopt for zero or heterogeneous input.
  std::optional<int> degree() const;
  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& coeff);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial operator-() const;

  /// Coefficient-wise equality; the truncation flag is ignored.
  bool operator==(const Polynomial& other) const;

  std::string to_string() const;

 private:
  void require_same(const Polynomial& other) const;

  AlgebraPtr algebra_;
  Terms terms_;
  bool truncated_ = false;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& s);
Polynomial operator*(const Rational& s, Polynomial a);

/// Bilinear product with Koszul signs. Throws MixedAlgebra.
Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

/// Re-expresses `p` in another algebra by generator name, with an optional
/// renaming, re-normalizing signs. Throws UnknownGenerator.
Polynomial transport(const Polynomial& p, const AlgebraPtr& target,
                     const std::map<std::string, std::string>& rename = {});

}  // namespace cdgalab
