#pragma once

// Sparse exact linear algebra over Q.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cdgalab/rational.hpp"

namespace cdgalab {

/// index -> nonzero value
using SparseVector = std::map<std::size_t, Rational>;

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);  // y += a*x
SparseVector to_sparse(std::span<const Rational> dense);
std::vector<Rational> to_dense(const SparseVector& v, std::size_t size);

/// Column-major sparse rational matrix.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  const SparseVector& column(std::size_t c) const { return columns_.at(c); }
  void set_column(std::size_t c, SparseVector v);

  SparseVector apply(const SparseVector& x) const;

 private:
  std::size_t rows_;
  std::vector<SparseVector> columns_;
};

/// Incremental column echelon form. Columns are added one at a time; each
/// independent column becomes a basis vector normalized to 1 at its pivot
/// (the smallest row index surviving reduction), and every basis vector
/// remembers its expression in the original columns.
class ColumnReducer {
 public:
  struct Added {
    bool independent = false;
    /// For a dependent column j: coefficients c with sum_i c_i col_i = 0
    /// and c_j = 1. Empty for independent columns.
    SparseVector relation;
  };

  struct Reduction {
    /// target = sum_j combination_j * col_j + residue
    SparseVector combination;
    /// Zero on every pivot row; zero overall iff target lies in the span.
    SparseVector residue;
  };

  Added add(const SparseVector& column);
  Reduction reduce(const SparseVector& target) const;

  std::size_t columns_added() const { return added_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::size_t>& pivot_rows() const { return pivots_; }

 private:
  std::vector<SparseVector> basis_;
  std::vector<SparseVector> combos_;
  std::vector<std::size_t> pivots_;
  std::size_t added_ = 0;
};

std::size_t rank(const RationalMatrix& m);

/// Null-space basis; one vector per column that depends on earlier columns.
std::vector<SparseVector> kernel_basis(const RationalMatrix& m);

struct SolveResult {
  /// Some x with M x = target, if one exists.
  std::optional<SparseVector> solution;
  /// When unsolvable: the residue of target modulo the image, supported on
  /// the non-pivot rows (coordinates in the cokernel basis given by those
  /// rows' unit vectors).
  SparseVector certificate;
};

/// Throws DimensionMismatch when the target has an entry at row >= rows().
SolveResult solve_in_image(const RationalMatrix& m, const SparseVector& target);
/// Dense variant; requires target.size() == rows().
SolveResult solve_in_image(const RationalMatrix& m, std::span<const Rational> target);

}  // namespace cdgalab
