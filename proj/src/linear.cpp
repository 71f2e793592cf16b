#include "cdgalab/linear.hpp"

#include "cdgalab/errors.hpp"

namespace cdgalab {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a == 0) return;
  for (const auto& [i, v] : x) {
    auto [it, inserted] = y.try_emplace(i, 0);
    it->second += a * v;
    if (it->second == 0) y.erase(it);
  }
}

SparseVector to_sparse(std::span<const Rational> dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) v.emplace(i, dense[i]);
  }
  return v;
}

std::vector<Rational> to_dense(const SparseVector& v, std::size_t size) {
  std::vector<Rational> out(size, Rational(0));
  for (const auto& [i, x] : v) {
    if (i >= size) throw DimensionMismatch("sparse entry beyond dense size");
    out[i] = x;
  }
  return out;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), columns_(cols) {}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged dense matrix");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = col.find(r);
  return it == col.end() ? Rational(0) : it->second;
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_) throw DimensionMismatch("row index out of range");
  auto& col = columns_.at(c);
  if (value == 0) {
    col.erase(r);
  } else {
    col[r] = value;
  }
}

void RationalMatrix::set_column(std::size_t c, SparseVector v) {
  if (!v.empty() && v.rbegin()->first >= rows_) throw DimensionMismatch("column entry out of range");
  for (auto it = v.begin(); it != v.end();) {
    it = it->second == 0 ? v.erase(it) : std::next(it);
  }
  columns_.at(c) = std::move(v);
}

SparseVector RationalMatrix::apply(const SparseVector& x) const {
  SparseVector y;
  for (const auto& [j, xj] : x) {
    if (j >= cols()) throw DimensionMismatch("vector longer than column count");
    axpy(y, xj, columns_[j]);
  }
  return y;
}

// ---------------------------------------------------------------------------

ColumnReducer::Added ColumnReducer::add(const SparseVector& column) {
  const std::size_t id = added_++;
  Reduction red = reduce(column);
  // red.combination expresses column minus residue; flip to track the residue.
  SparseVector combo;
  combo.emplace(id, 1);
  axpy(combo, Rational(-1), red.combination);
  if (red.residue.empty()) return {false, std::move(combo)};

  const auto pivot = red.residue.begin();
  const std::size_t pivot_row = pivot->first;
  Rational inv = 1 / pivot->second;
  for (auto& [i, v] : red.residue) v *= inv;
  for (auto& [i, v] : combo) v *= inv;
  basis_.push_back(std::move(red.residue));
  combos_.push_back(std::move(combo));
  pivots_.push_back(pivot_row);
  return {true, {}};
}

ColumnReducer::Reduction ColumnReducer::reduce(const SparseVector& target) const {
  Reduction out;
  out.residue = target;
  // Basis vector k vanishes on the pivots of vectors added before it, so a
  // single pass in insertion order clears every pivot row.
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    auto it = out.residue.find(pivots_[k]);
    if (it == out.residue.end()) continue;
    Rational c = it->second;
    Rational neg = -c;
    axpy(out.residue, neg, basis_[k]);
    axpy(out.combination, c, combos_[k]);
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  ColumnReducer red;
  for (std::size_t j = 0; j < m.cols(); ++j) red.add(m.column(j));
  return red.rank();
}

std::vector<SparseVector> kernel_basis(const RationalMatrix& m) {
  ColumnReducer red;
  std::vector<SparseVector> out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto added = red.add(m.column(j));
    if (!added.independent) out.push_back(std::move(added.relation));
  }
  return out;
}

SolveResult solve_in_image(const RationalMatrix& m, const SparseVector& target) {
  if (!target.empty() && target.rbegin()->first >= m.rows()) {
    throw DimensionMismatch("target has " + std::to_string(target.rbegin()->first + 1) +
                            "+ entries but matrix has " + std::to_string(m.rows()) + " rows");
  }
  ColumnReducer red;
  for (std::size_t j = 0; j < m.cols(); ++j) red.add(m.column(j));
  auto r = red.reduce(target);
  SolveResult out;
  if (r.residue.empty()) {
    out.solution = std::move(r.combination);
  } else {
    out.certificate = std::move(r.residue);
  }
  return out;
}

SolveResult solve_in_image(const RationalMatrix& m, std::span<const Rational> target) {
  if (target.size() != m.rows()) {
    throw DimensionMismatch("target length " + std::to_string(target.size()) +
                            " != rows " + std::to_string(m.rows()));
  }
  return solve_in_image(m, to_sparse(target));
}

}  // namespace cdgalab
