#include "exlp/ratmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace exlp {

namespace {

bool key_less(const MatrixEntry& a, const MatrixEntry& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

}  // namespace

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative dimension");
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  m.entries_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m.entries_.push_back({i, i, Rational(1)});
  return m;
}

RatMatrix RatMatrix::from_triplets(int rows, int cols, std::vector<MatrixEntry> triplets) {
  RatMatrix m(rows, cols);
  for (const MatrixEntry& e : triplets) {
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols) {
      throw std::out_of_range("RatMatrix::from_triplets: index out of range");
    }
  }
  std::sort(triplets.begin(), triplets.end(), key_less);
  for (std::size_t i = 1; i < triplets.size(); ++i) {
    if (triplets[i - 1].row == triplets[i].row && triplets[i - 1].col == triplets[i].col) {
      throw std::invalid_argument("RatMatrix::from_triplets: duplicate entry");
    }
  }
  m.entries_ = std::move(triplets);
  std::erase_if(m.entries_, [](const MatrixEntry& e) { return sgn(e.value) == 0; });
  return m;
}

RatMatrix RatMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
  int rows = static_cast<int>(dense.size());
  int cols = rows == 0 ? 0 : static_cast<int>(dense[0].size());
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(dense[i].size()) != cols) {
      throw std::invalid_argument("RatMatrix::from_dense: ragged rows");
    }
    for (int j = 0; j < cols; ++j) {
      if (sgn(dense[i][j]) != 0) m.entries_.push_back({i, j, dense[i][j]});
    }
  }
  return m;
}

void RatMatrix::set(int row, int col, Rational value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw std::out_of_range("RatMatrix::set: index out of range");
  }
  MatrixEntry probe{row, col, Rational(0)};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), probe, key_less);
  bool present = it != entries_.end() && it->row == row && it->col == col;
  if (sgn(value) == 0) {
    if (present) entries_.erase(it);
    return;
  }
  if (present) {
    it->value = std::move(value);
  } else {
    entries_.insert(it, {row, col, std::move(value)});
  }
}

Rational RatMatrix::at(int row, int col) const {
  MatrixEntry probe{row, col, Rational(0)};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), probe, key_less);
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return Rational(0);
}

RatVector RatMatrix::multiply(const RatVector& x) const {
  if (static_cast<int>(x.size()) != cols_) {
    throw std::invalid_argument("RatMatrix::multiply: dimension mismatch");
  }
  RatVector y(static_cast<std::size_t>(rows_), Rational(0));
  for (const MatrixEntry& e : entries_) {
    y[static_cast<std::size_t>(e.row)] += e.value * x[static_cast<std::size_t>(e.col)];
  }
  return y;
}

RatVector RatMatrix::multiply_transpose(const RatVector& y) const {
  if (static_cast<int>(y.size()) != rows_) {
    throw std::invalid_argument("RatMatrix::multiply_transpose: dimension mismatch");
  }
  RatVector z(static_cast<std::size_t>(cols_), Rational(0));
  for (const MatrixEntry& e : entries_) {
    z[static_cast<std::size_t>(e.col)] += e.value * y[static_cast<std::size_t>(e.row)];
  }
  return z;
}

RatVector RatMatrix::column(int col) const {
  if (col < 0 || col >= cols_) throw std::out_of_range("RatMatrix::column");
  RatVector v(static_cast<std::size_t>(rows_), Rational(0));
  for (const MatrixEntry& e : entries_) {
    if (e.col == col) v[static_cast<std::size_t>(e.row)] = e.value;
  }
  return v;
}

RatVector RatMatrix::row_abs_sums() const {
  RatVector sums(static_cast<std::size_t>(rows_), Rational(0));
  for (const MatrixEntry& e : entries_) {
    sums[static_cast<std::size_t>(e.row)] += abs(e.value);
  }
  return sums;
}

RatMatrix RatMatrix::select_columns(const std::vector<int>& cols) const {
  RatMatrix out(rows_, static_cast<int>(cols.size()));
  std::vector<MatrixEntry> triplets;
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    RatVector col = column(cols[static_cast<std::size_t>(j)]);
    for (int i = 0; i < rows_; ++i) {
      if (sgn(col[static_cast<std::size_t>(i)]) != 0) {
        triplets.push_back({i, j, col[static_cast<std::size_t>(i)]});
      }
    }
  }
  return from_triplets(rows_, static_cast<int>(cols.size()), std::move(triplets));
}

std::vector<std::vector<Rational>> RatMatrix::to_dense() const {
  std::vector<std::vector<Rational>> dense(
      static_cast<std::size_t>(rows_),
      std::vector<Rational>(static_cast<std::size_t>(cols_), Rational(0)));
  for (const MatrixEntry& e : entries_) {
    dense[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] = e.value;
  }
  return dense;
}

std::vector<std::size_t> RatMatrix::row_starts() const {
  std::vector<std::size_t> starts(static_cast<std::size_t>(rows_) + 1, 0);
  for (const MatrixEntry& e : entries_) ++starts[static_cast<std::size_t>(e.row) + 1];
  for (std::size_t i = 1; i < starts.size(); ++i) starts[i] += starts[i - 1];
  return starts;
}

}  // namespace exlp
