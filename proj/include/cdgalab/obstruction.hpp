#pragma once

// Massey triple products, strand extension against a target CDGA and the
// one-stage map obstruction.
//
// Sign conventions (fixed by the cone differential d(g~) = -g'):
//   stage 1:  eps(g')  = eps(attach g),      d eps(g~)  = -eps(g')
//   stage 2:  eps(g~') = -eps(d_0 g~),       d eps(g~~) = -eps(g~')
// The second line comes from d_1(g~) = -(g~') on the cone C W̄_2.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cdgalab/resolution.hpp"

namespace cdgalab {

/// A cohomology class of the ambient CDGA in its representative basis.
struct ObstructionClass {
  CdgaPtr ambient;
  int degree = 0;
  Polynomial representative;
  std::vector<Rational> coordinates;
  std::vector<Polynomial> basis;  // representatives of H^degree
  bool vanishes() const { return is_zero_vector(coordinates); }
  /// e.g. "-1*[w]" or "0"
  std::string describe() const;
};

/// Asserts `cocycle` is closed, then expresses it in H^degree(ambient).
ObstructionClass classify(const CdgaPtr& ambient, const Polynomial& cocycle, int degree);

struct MasseyResult {
  ObstructionClass value;
  Polynomial xi;   // d xi = a b
  Polynomial eta;  // d eta = b c
  std::vector<std::vector<Rational>> indeterminacy;  // basis of the subspace
  bool defined = true;
};

/// <[a],[b],[c]> with m = xi c - (-1)^|a| a eta. Throws ObstructionError
/// when an argument is zero or a b, b c is not exact; UndecidableDegree past
/// the cap.
MasseyResult massey_triple(const CdgaPtr& b, const Polynomial& a, const Polynomial& bb,
                           const Polynomial& c);
/// Same with caller-chosen defining system; checks d xi = a b, d eta = b c.
MasseyResult massey_triple(const CdgaPtr& b, const Polynomial& a, const Polynomial& bb,
                           const Polynomial& c, const Polynomial& xi, const Polynomial& eta);

/// True iff `v` lies in the span of the indeterminacy basis.
bool in_indeterminacy(const MasseyResult& m, const std::vector<Rational>& v);

/// Assignment of W_0 generators to a target CDGA through some stage.
class Strand {
 public:
  int stage() const { return stage_; }
  const CdgaPtr& target() const { return target_; }
  /// Values on the W_0 generators assigned so far.
  const std::map<std::string, Polynomial>& values() const { return values_; }
  /// Level-0 morphism W_0 -> target; unassigned generators map to zero.
  CdgaMorphism morphism(const TruncatedRealization& r) const;

 private:
  friend Strand initial_strand(const TruncatedRealization&, const CdgaMorphism&);
  friend struct StrandExtender;
  int stage_ = 0;
  CdgaPtr target_;
  std::map<std::string, Polynomial> values_;
};

/// Stage 0: theta on W̄_0, a morphism from r.base(0) to the target.
Strand initial_strand(const TruncatedRealization& r, const CdgaMorphism& theta);

struct StrandFailure {
  std::string generator;  // the cone generator that could not be assigned
  ObstructionClass obstruction;
};

struct StrandExtension {
  std::optional<Strand> strand;           // on success
  std::vector<StrandFailure> failures;    // first entry is the reported value
  bool extended() const { return strand.has_value(); }
};

/// Extends `previous` by one stage (to at most 2). Throws ObstructionError
/// for stages above 2, a stage beyond the realization, or inconsistent input.
StrandExtension extend_strand(const TruncatedRealization& r, const Strand& previous);

/// Runs stages 1..r.top_level() starting from theta, stopping at the first
/// failure; `last` holds the strand reached.
struct StrandRun {
  Strand last;
  std::optional<int> failed_stage;
  std::vector<StrandFailure> failures;
};
StrandRun run_strand(const TruncatedRealization& r, const CdgaMorphism& theta);

/// ε d_0 = ε d_1 on every level-1 generator; returns the failing names.
std::vector<std::string> coequalizer_failures(const TruncatedRealization& r, const Strand& s);

struct MapObstructionTerm {
  std::string generator;  // W̄_1 generator g
  Polynomial beta;        // d beta = phi eps(g')
  ObstructionClass value;
};

struct MapObstruction {
  std::vector<MapObstructionTerm> terms;
  bool vanishes() const;
  /// First nonvanishing term, or the first term when all vanish.
  const MapObstructionTerm* value() const;
};

/// For phi: A -> B and a realization of A through dimension >= 1, extends
/// phi ∘ eps over the cone on the suspension of W̄_1. The residue for g is
/// c = -(phi eps(g~) + beta) with d beta = phi eps(g'), classified in
/// H^{|g|-1}(B). Throws ObstructionError if phi eps(g') is not exact or the
/// realization's stage-1 strand does not exist.
MapObstruction map_obstruction(const CdgaMorphism& phi, const TruncatedRealization& r,
                               const CdgaMorphism& theta);

}  // namespace cdgalab
