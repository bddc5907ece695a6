#pragma once

#include <map>
#include <utility>
#include <vector>

#include "folindex/rational.hpp"

namespace folindex {

/// Sparse integer row: (column, nonzero value) pairs sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

/// Integer row from rational entries, scaled by the lcm of the denominators
/// and divided by the content.  The row space is unchanged.
SparseRow make_row(const std::map<std::size_t, Rational>& entries);

class SparseMatrix {
public:
  explicit SparseMatrix(std::size_t cols = 0) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rows() const { return rows_.size(); }
  const std::vector<SparseRow>& row_list() const { return rows_; }

  void add_row(SparseRow r);
  void append(const SparseMatrix& other);

private:
  std::size_t cols_;
  std::vector<SparseRow> rows_;
};

/// Reference rank: rows are inserted one at a time into an echelon form kept
/// in a map from pivot column to row (fraction-free updates).
std::size_t rank_serial(const SparseMatrix& m);

/// Column sweep: rows are bucketed by leading column, and at each pivot the
/// rows sharing that leading column are eliminated concurrently with OpenMP.
std::size_t rank_parallel(const SparseMatrix& m);

/// Dispatches to the parallel kernel unless the matrix is tiny.
std::size_t rank(const SparseMatrix& m);

}  // namespace folindex
