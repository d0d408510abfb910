#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace gins {

/// Dense row-major matrix over the elements of a field type.
template <class Field>
class Matrix {
 public:
  using Element = typename Field::Element;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Element& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<Element>& row) {
    if (rows_ == 0) cols_ = row.size();
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  }

  void truncate_rows(std::size_t rows) {
    rows_ = rows;
    data_.resize(rows_ * cols_);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;  ///< ascending
};

/// Reduced row-echelon form in place, sweeping columns left to right; the
/// pivot columns depend only on the row space and the column order. Zero rows
/// are dropped so the matrix keeps exactly `rank` rows.
template <class Field>
Echelon row_reduce(const Field& field, Matrix<Field>& m) {
  Echelon result;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && field.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    const auto scale = field.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = field.mul(m(row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || field.is_zero(m(r, col))) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!field.is_zero(m(row, c))) m(r, c) = field.sub(m(r, c), field.mul(factor, m(row, c)));
      }
    }
    result.pivot_columns.push_back(col);
    ++row;
  }
  result.rank = row;
  m.truncate_rows(row);
  return result;
}

template <class Field>
std::size_t matrix_rank(const Field& field, Matrix<Field> m) {
  return row_reduce(field, m).rank;
}

}  // namespace gins
