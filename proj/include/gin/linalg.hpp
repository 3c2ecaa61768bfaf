#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gin/error.hpp"
#include "gin/field.hpp"

namespace gin {

/// Row-major dense matrix over F_p.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> data_;
};

/// Reduced row echelon form in place; returns pivot columns in increasing
/// order. Pivot columns are exactly the greedy left-to-right independent set.
/// Stops after `max_pivots` pivots when given.
inline std::vector<std::size_t> row_reduce(DenseMatrix& m, const PrimeField& k,
                                           std::size_t max_pivots = static_cast<std::size_t>(-1)) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows() && pivots.size() < max_pivots; ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const Coeff inv = k.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = k.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const Coeff f = m(r, col);
      if (f == 0) continue;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = k.sub(m(r, c), k.mul(f, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(DenseMatrix m, const PrimeField& k) { return row_reduce(m, k).size(); }

/// Greedy scan: a column is kept iff it raises the rank of the kept set.
/// Returns 0-based indices of the first `target_rank` kept columns.
inline std::vector<std::size_t> first_independent_columns(const DenseMatrix& m, std::size_t target_rank,
                                                          const PrimeField& k) {
  DenseMatrix work = m;
  auto pivots = row_reduce(work, k, target_rank);
  if (pivots.size() < target_rank) {
    throw RankDeficiency("first_independent_columns: achieved rank " + std::to_string(pivots.size()) +
                             " < target " + std::to_string(target_rank),
                         pivots.size());
  }
  return pivots;
}

}  // namespace gin
