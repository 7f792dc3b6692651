#ifndef SUNVAC_EXACT_LINALG_HPP
#define SUNVAC_EXACT_LINALG_HPP

#include <map>
#include <vector>

#include "sunvac/scalar.hpp"

namespace sunvac::exactlin {

/// Sparse vector over Q; entries sorted by index, all nonzero.
struct SparseVec {
  std::vector<std::pair<int, Rational>> entries;

  bool is_zero() const { return entries.empty(); }
  void add(int i, const Rational& v);
  Rational at(int i) const;
  /// Scales to a primitive integer vector (clears denominators, removes content,
  /// first nonzero entry positive).
  void normalize();
};

/// Sparse matrix over Q assembled row by row; duplicate (r,c) adds accumulate.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  void add(int r, int c, const Rational& v);
  const std::map<int, Rational>& row(int r) const { return data_[r]; }
  /// Appends the rows of `other` (same column count) below this matrix.
  void stack(const SparseMatrix& other);
  /// Appends a column (grows cols by one) with the given entries.
  void append_column(const SparseVec& col);

  static SparseMatrix from_columns(const std::vector<SparseVec>& cols, int nrows);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::map<int, Rational>> data_;
};

/// Exact rank by fraction-free elimination: rows are scaled to primitive
/// integer vectors, pivots chosen by a minimum-fill heuristic, and every
/// update row (p*r - v*r_piv) is reduced by its integer content.
int rank(const SparseMatrix& m);

/// Basis of the right kernel {x : M x = 0}, as primitive integer vectors.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);

/// rank([cols]) where cols are column vectors of length nrows.
int rank_of_columns(const std::vector<SparseVec>& cols, int nrows);

/// True iff target lies in the column span of cols.
bool in_column_span(const std::vector<SparseVec>& cols, const SparseVec& target, int nrows);

}  // namespace sunvac::exactlin

#endif  // SUNVAC_EXACT_LINALG_HPP
