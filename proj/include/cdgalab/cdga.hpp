#pragma once

// Free commutative differential graded algebras Λ(V, d), their morphisms
// and degreewise cohomology.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cdgalab/algebra.hpp"
#include "cdgalab/linear.hpp"
#include "cdgalab/rng.hpp"

namespace cdgalab {

class FreeCdga;
using CdgaPtr = std::shared_ptr<const FreeCdga>;

/// Free graded-commutative algebra with a degree +1 derivation. The
/// constructor rejects differential values of the wrong degree and checks
/// d(d(g)) = 0 on every generator where the cap allows.
class FreeCdga {
 public:
  FreeCdga(AlgebraPtr algebra, const std::map<std::string, Polynomial>& differential);

  static CdgaPtr make(std::vector<Generator> generators, int cap,
                      const std::map<std::string, std::string>& differential_text = {});

  const GradedAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  int cap() const { return algebra_->cap(); }

  /// Value of d on generator `index` (possibly zero).
  const Polynomial& d(std::size_t index) const { return differential_.at(index); }

  Polynomial zero() const { return Polynomial(algebra_); }
  Polynomial one() const { return Polynomial::constant(algebra_, 1); }
  Polynomial gen(std::string_view name) const { return Polynomial::generator(algebra_, name); }

  /// Graded Leibniz extension. Throws CapOverflow when `p` has a term of
  /// degree >= cap and MixedAlgebra for foreign polynomials.
  Polynomial differentiate(const Polynomial& p) const;

 private:
  AlgebraPtr algebra_;
  std::vector<Polynomial> differential_;
};

struct DSquaredReport {
  std::size_t generators_checked = 0;
  std::size_t generators_skipped = 0;  // too close to the cap to test
  std::size_t products_checked = 0;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

/// Verifies d∘d = 0 on every generator and on `samples` random products.
DSquaredReport check_d_squared(const FreeCdga& a, std::uint64_t seed = 20240611,
                               std::size_t samples = 64);

struct LeibnizReport {
  std::size_t pairs_checked = 0;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

/// d(ab) = (da)b + (-1)^|a| a(db) on random homogeneous pairs below the cap.
LeibnizReport check_leibniz(const FreeCdga& a, std::uint64_t seed = 20240611,
                            std::size_t samples = 64);

/// Random homogeneous polynomial of the given degree with small rational
/// coefficients; zero when the degree has no monomials.
Polynomial random_polynomial(const AlgebraPtr& algebra, int degree, SplitMix64& rng);

// ---------------------------------------------------------------------------
// Degreewise linear algebra

/// Coordinates of homogeneous polynomials in the monomial basis of one degree.
class DegreeBasis {
 public:
  DegreeBasis(AlgebraPtr algebra, int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  /// Throws Error if `p` has terms outside this degree.
  SparseVector coordinates(const Polynomial& p) const;
  Polynomial polynomial(const SparseVector& v) const;

 private:
  AlgebraPtr algebra_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t, MonomialOrder> index_;
};

/// Matrix of d: A^degree -> A^(degree+1) in monomial bases.
RationalMatrix differential_matrix(const FreeCdga& a, const DegreeBasis& from,
                                   const DegreeBasis& to);

/// Finds X with dX = target (target homogeneous of degree k, so X lives in
/// degree k-1). Returns nullopt when target is not exact. Deterministic:
/// the first solution of the column elimination.
std::optional<Polynomial> solve_coboundary(const FreeCdga& a, const Polynomial& target,
                                           int degree);

/// H^degree(A) with representative cocycles and enough context to express
/// any cocycle of that degree in the representative basis.
class CohomologyGroup {
 public:
  int degree() const { return degree_; }
  std::size_t dimension() const { return representatives_.size(); }
  const std::vector<Polynomial>& representatives() const { return representatives_; }

 private:
  friend CohomologyGroup cohomology(const FreeCdga& a, int degree);
  friend std::vector<Rational> class_of(const FreeCdga& a, const Polynomial& cocycle,
                                        const CohomologyGroup& h);
  CohomologyGroup(int degree, DegreeBasis basis) : degree_(degree), basis_(std::move(basis)) {}

  int degree_;
  DegreeBasis basis_;
  std::vector<Polynomial> representatives_;
  ColumnReducer reducer_;  // image columns first, then representatives
  std::size_t image_columns_ = 0;
};

/// Requires 0 <= degree and degree + 1 <= cap (throws UndecidableDegree).
CohomologyGroup cohomology(const FreeCdga& a, int degree);

/// Coordinates of a cocycle in H's representative basis; zero iff exact.
/// Throws Error for non-cocycles or degree mismatch.
std::vector<Rational> class_of(const FreeCdga& a, const Polynomial& cocycle,
                               const CohomologyGroup& h);

bool is_zero_vector(const std::vector<Rational>& v);

// ---------------------------------------------------------------------------

/// Generator-wise map of free CDGAs. Unassigned source generators map to 0
/// and are listed in defaulted(). The constructor checks degrees and
/// φ∘d = d∘φ on every generator whose check fits below both caps.
class CdgaMorphism {
 public:
  CdgaMorphism(CdgaPtr source, CdgaPtr target,
               const std::map<std::string, Polynomial>& assignment);

  const CdgaPtr& source() const { return source_; }
  const CdgaPtr& target() const { return target_; }
  const Polynomial& image(std::size_t source_index) const { return images_.at(source_index); }
  const Polynomial& image(std::string_view source_name) const;
  const std::vector<std::string>& defaulted() const { return defaulted_; }

  /// Multiplicative, linear extension. Throws MixedAlgebra for foreign input.
  Polynomial apply(const Polynomial& p) const;

  /// this ∘ first
  CdgaMorphism after(const CdgaMorphism& first) const;

  static CdgaMorphism identity(const CdgaPtr& a);

 private:
  CdgaPtr source_;
  CdgaPtr target_;
  std::vector<Polynomial> images_;
  std::vector<std::string> defaulted_;
};

// ---------------------------------------------------------------------------
// Standard model constructions

/// Λ(V, 0) on the given generators.
CdgaPtr gem_model(const std::vector<Generator>& generators, int cap);
/// Λ(V, 0) with generators named e<degree>_<k>, one per basis slot.
CdgaPtr gem_model(const std::vector<std::pair<int, int>>& degree_dimensions, int cap);

/// Decoration of generator names in cone and suspension fragments.
std::string prime_name(const std::string& base);  // g'
std::string bar_name(const std::string& base);    // g~

/// Cone fragment: for each g of degree m, g' (degree m) and g~ (degree m-1)
/// with d(g~) = -g'. Rejects degree-1 generators.
CdgaPtr cone_model(const std::vector<Generator>& generators, int cap);

/// One generator g~ of degree m-1 per input generator, zero differential.
/// Rejects degree-1 generators.
CdgaPtr suspension_model(const std::vector<Generator>& generators, int cap);

struct CoproductResult {
  CdgaPtr algebra;
  /// Right-operand generators that were renamed: old name -> new name.
  std::map<std::string, std::string> renamed;
};

/// Free product A ⨿ B; cap = min of caps. On a name collision, renames the
/// right operand with a numeric suffix when allowed, otherwise throws.
CoproductResult coproduct(const FreeCdga& a, const FreeCdga& b, bool allow_rename = false);

}  // namespace cdgalab
