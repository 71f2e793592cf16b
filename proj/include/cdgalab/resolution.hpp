#pragma once

// Truncated simplicial CDGA realizations of a CW resolution, through
// simplicial dimension 2.
//
// Level k is the free product of the non-degenerate part N_k and degenerate
// copies of lower N_j:
//   N_0 = W̄_0 ⨿ C W̄_1 ⨿ C Σ W̄_2,  N_1 = W̄_1 ⨿ C W̄_2,  N_2 = W̄_2
//   W_0 = N_0,  W_1 = N_1 ⨿ s0 N_0,  W_2 = N_2 ⨿ s0 N_1 ⨿ s1 N_1 ⨿ s1s0 N_0
//
// Generator names: g' and g~ for the cone on g, g~' and g~~ for the cone on
// its suspension, and g@s0, g@s1, g@s1s0 for degenerate copies.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cdgalab/cdga.hpp"

namespace cdgalab {

/// Name = expression, with the source line for diagnostics (0 if none).
struct Assignment {
  std::string name;
  std::string expression;
  int line = 0;
};

struct RealizationInput {
  int cap = 0;
  int top_level = 0;  // 0, 1 or 2
  std::array<std::vector<Generator>, 3> basis;
  /// g -> attaching value; level-1 values live in W_0, level-2 values in W_1
  /// where s0(...) applies the degeneracy to a W_0 expression.
  std::vector<Assignment> attach;
  /// g~ -> d_0(g~) in W_0, for g in W̄_2. Missing entries are derived.
  std::vector<Assignment> null;
  CdgaPtr target;                 // optional
  std::vector<Assignment> augment;  // W̄_0 generator -> target expression
  std::vector<std::pair<int, int>> gamma;  // optional (degree, dimension)
};

struct AssembleOptions {
  /// Reject level-2 attaching maps with d_1∘attach != 0.
  bool require_corrected_attach = true;
};

enum class Fragment { Base, Cone, SuspensionCone };

struct Summand {
  Fragment fragment = Fragment::Base;
  int basis_level = 0;      // which W̄ the fragment is built on
  std::string degeneracy;   // "", "s0", "s1" or "s1s0"
  std::vector<std::string> generators;

  std::string label() const;  // e.g. "s0 C W1"
};

std::string copy_name(const std::string& name, const std::string& degeneracy);

struct SimplicialLevel {
  int dimension = 0;
  CdgaPtr algebra;
  std::vector<Summand> summands;
  std::vector<CdgaMorphism> faces;         // d_i : W_k -> W_{k-1}
  std::vector<CdgaMorphism> degeneracies;  // s_j : W_{k-1} -> W_k
};

class TruncatedRealization {
 public:
  /// Throws ResolutionError, ParseError (with the assignment's line) or
  /// UnknownGenerator on inconsistent input.
  static TruncatedRealization assemble(const RealizationInput& input,
                                       const AssembleOptions& options = {});

  int cap() const { return cap_; }
  int top_level() const { return static_cast<int>(levels_.size()) - 1; }
  const SimplicialLevel& level(int k) const { return levels_.at(static_cast<std::size_t>(k)); }
  const std::vector<Generator>& basis(int k) const { return basis_.at(static_cast<std::size_t>(k)); }
  /// W̄_k as a free algebra with zero differential.
  const CdgaPtr& base(int k) const { return base_.at(static_cast<std::size_t>(k)); }

  /// Attaching value of a W̄_1 or W̄_2 generator (in W_0 or W_1).
  const Polynomial& attach(const std::string& generator) const;
  /// d_0 of g~ for g in W̄_2, as a polynomial in W_0.
  const Polynomial& null(const std::string& generator) const;
  /// Generators of W̄_2 whose null value was derived by elimination.
  const std::vector<std::string>& derived_nulls() const { return derived_nulls_; }

  const CdgaPtr& target() const { return target_; }
  /// W̄_0 -> target; present when the input declared a target.
  const std::optional<CdgaMorphism>& base_augmentation() const { return augmentation_; }
  const std::vector<std::pair<int, int>>& gamma() const { return gamma_; }

  /// Expected number of degenerate copies of N_j inside W_r (r <= 2).
  static std::size_t latching_count(int r, int j);

 private:
  int cap_ = 0;
  std::vector<SimplicialLevel> levels_;
  std::vector<std::vector<Generator>> basis_;
  std::vector<CdgaPtr> base_;
  std::map<std::string, Polynomial> attach_;
  std::map<std::string, Polynomial> null_;
  std::vector<std::string> derived_nulls_;
  CdgaPtr target_;
  std::optional<CdgaMorphism> augmentation_;
  std::vector<std::pair<int, int>> gamma_;
};

struct IdentityFailure {
  std::string identity;   // e.g. "d1 d0 = d0 d2"
  std::string generator;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::size_t checks = 0;  // generator-level comparisons
  std::vector<IdentityFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Face-face, degeneracy-degeneracy and mixed identities on every generator.
IdentityReport verify_simplicial_identities(const TruncatedRealization& r);

/// Degeneracy summand census against latching_count; empty when consistent.
std::vector<std::string> check_latching(const TruncatedRealization& r);

struct MooreDegree {
  int degree = 0;
  std::vector<std::size_t> level_dims;   // dim H^e(W_k)
  std::vector<std::size_t> normalized;   // dim of Moore chains N_k
  std::vector<std::size_t> cycles;       // ker ∂ on N_k
  std::vector<std::size_t> boundaries;   // ∂(N_{k+1}) in N_k
  std::size_t h0 = 0;
  std::optional<std::size_t> h1;         // needs simplicial dimension 2
  std::optional<std::size_t> expected;   // Γ dimension, if declared
  std::optional<bool> augmentation_iso;  // π_0 -> H(target) bijective
  bool passed = true;
};

struct MooreReport {
  int max_degree = 0;  // decidability boundary: cap - 1
  std::vector<MooreDegree> degrees;
  std::vector<std::string> notes;
  bool passed() const;
};

/// Moore complex of the simplicial graded vector space k -> H^e(W_k) for
/// 1 <= e <= cap - 1. H_0 is compared with Γ (declared dims, otherwise the
/// target's cohomology) and H_1 is required to vanish when level 2 exists.
MooreReport moore_verify(const TruncatedRealization& r);

struct MinimalGenerator {
  int degree = 0;
  Polynomial representative;
};

/// Indecomposables of H*(B) in degrees 1..max_degree (default cap - 1).
std::vector<MinimalGenerator> minimal_generators_dim0(const FreeCdga& b,
                                                      std::optional<int> max_degree = {});

/// Minimal ideal generators of ker(V_0 -> H*(target)) in degrees 1..max_degree
/// (default min cap - 1), where V_0 is theta's (free, d = 0) source.
std::vector<MinimalGenerator> minimal_generators_dim1(const CdgaMorphism& theta,
                                                      std::optional<int> max_degree = {});

}  // namespace cdgalab
