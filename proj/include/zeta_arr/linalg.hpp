#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace zeta_arr {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// In-place reduced row echelon form. Returns the pivot columns; rows past
// the rank are zero afterwards.
template <class Ops>
std::vector<std::size_t> rref(const Ops& ops, Matrix<typename Ops::value_type>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && ops.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(row, sel);
    const auto pivot = m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = ops.div(m(row, c), pivot);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || ops.is_zero(m(r, col))) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = ops.sub(m(r, c), ops.mul(factor, m(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Ops>
std::size_t matrix_rank(const Ops& ops, Matrix<typename Ops::value_type> m) {
  return rref(ops, m).size();
}

// Basis of the right kernel {x : m x = 0}, one vector per free column, in
// the standard RREF parametrization.
template <class Ops>
std::vector<std::vector<typename Ops::value_type>> kernel_basis(
    const Ops& ops, Matrix<typename Ops::value_type> m) {
  using V = typename Ops::value_type;
  const auto pivots = rref(ops, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<V>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<V> v(m.cols(), ops.zero());
    v[free] = ops.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = ops.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace zeta_arr
