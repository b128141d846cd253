#pragma once

#include <cstddef>
#include <vector>

#include "exlp/rational.hpp"

namespace exlp {

struct MatrixEntry {
  int row = 0;
  int col = 0;
  Rational value;

  bool operator==(const MatrixEntry&) const = default;
};

/// Sparse rational matrix in coordinate form. Entries are kept sorted by
/// (row, col) with no duplicates and no stored zeros.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);

  static RatMatrix identity(int n);
  static RatMatrix from_triplets(int rows, int cols, std::vector<MatrixEntry> triplets);
  static RatMatrix from_dense(const std::vector<std::vector<Rational>>& dense);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<MatrixEntry>& entries() const { return entries_; }
  std::size_t nonzero_count() const { return entries_.size(); }

  /// Inserts or overwrites one entry; a zero value erases it.
  void set(int row, int col, Rational value);
  /// Stored value or exact zero.
  Rational at(int row, int col) const;

  RatVector multiply(const RatVector& x) const;            // A x
  RatVector multiply_transpose(const RatVector& y) const;  // A^T y
  RatVector column(int col) const;
  /// Per-row sums of absolute values.
  RatVector row_abs_sums() const;
  RatMatrix select_columns(const std::vector<int>& cols) const;
  std::vector<std::vector<Rational>> to_dense() const;

  /// Start offsets of each row's entry range (size rows()+1).
  std::vector<std::size_t> row_starts() const;

  bool operator==(const RatMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

}  // namespace exlp
