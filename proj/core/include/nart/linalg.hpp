#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "nart/field.hpp"

namespace nart {

// Sorted by column, no zero entries.
using SparseEntries = std::vector<std::pair<std::size_t, Scalar>>;

void normalize(SparseEntries& v);
// a - factor * b
SparseEntries axpy(SparseEntries a, const Scalar& factor, const SparseEntries& b);

enum class PivotRule {
  // Minimal (r-1)(c-1) fill estimate; ties go to the lowest row, then column.
  markowitz,
  // Same cost, ties go to the highest row, then column.
  markowitz_reversed,
  // Lowest column first (canonical reduced echelon form for that order).
  ordered,
};

struct EliminationOptions {
  PivotRule rule = PivotRule::markowitz;
  // Columns of class k are only pivoted once no active row has an entry in
  // a column of lower class. Empty means every column is class 0.
  std::vector<std::uint8_t> column_class;
  // Rule used inside classes >= 1.
  PivotRule late_rule = PivotRule::ordered;
};

// Reduced row echelon form of A x = b produced by Gauss-Jordan elimination:
// every pivot row has coefficient 1 on its pivot and zeros on every other
// pivot column.
class Echelon {
 public:
  bool consistent() const noexcept { return consistent_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t columns() const noexcept { return columns_; }
  const std::vector<SparseEntries>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivot_cols_; }
  const std::vector<Scalar>& rhs() const noexcept { return rhs_; }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }
  // True when the column takes the same value in every solution: it is a
  // pivot whose reduced row has no free-column entries.
  bool determined(std::size_t col) const {
    return is_pivot(col) && rows_[static_cast<std::size_t>(pivot_row_[col])].size() == 1;
  }

  // Free columns set to zero.
  std::vector<Scalar> particular() const;
  // One vector per free column accepted by `keep` (all free columns when empty).
  std::vector<SparseEntries> nullspace(const std::function<bool(std::size_t)>& keep = {}) const;
  // Projection of the solution space of the homogeneous system onto the
  // columns accepted by `in_set`. Valid when the elimination used column
  // classes such that `in_set` is exactly the columns of class >= some k.
  std::vector<SparseEntries> projected_nullspace(const std::function<bool(std::size_t)>& in_set) const;
  // Reduces v against the pivot rows (row-space normal form).
  SparseEntries reduce(SparseEntries v) const;

 private:
  friend Echelon eliminate(const Field&, std::size_t, std::vector<SparseEntries>, std::vector<Scalar>,
                           const EliminationOptions&);
  Field field_ = Field::rationals();
  bool consistent_ = true;
  std::size_t columns_ = 0;
  std::vector<SparseEntries> rows_;
  std::vector<Scalar> rhs_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<long> pivot_row_;
};

// `rhs` may be empty for a homogeneous system.
Echelon eliminate(const Field& field, std::size_t columns, std::vector<SparseEntries> rows, std::vector<Scalar> rhs,
                  const EliminationOptions& options = {});

// Canonical basis (reduced echelon form, lowest column pivots) of the span.
std::vector<SparseEntries> row_space_basis(const Field& field, std::size_t columns, std::vector<SparseEntries> vectors);
std::size_t rank_of(const Field& field, std::size_t columns, std::vector<SparseEntries> vectors);

// Basis of the vectors in span(vectors) that vanish on every column of class
// 0. Computed by one class-ordered elimination: rows that pivot on a class-0
// column are discarded, the rest are in reduced echelon form.
std::vector<SparseEntries> class_zero_kernel(const Field& field, std::size_t columns, std::vector<SparseEntries> vectors,
                                             std::vector<std::uint8_t> column_class);

}  // namespace nart
