#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ocmf/error.hpp"

namespace ocmf {

/// Dense row-major matrix over an exact coefficient type.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  std::vector<T> apply(std::span<const T> x) const {
    if (x.size() != cols_) throw Error(ErrorKind::InvalidArgument, "matrix/vector size mismatch");
    std::vector<T> y;
    y.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      T s = (*this)(r, 0) * x[0];
      for (std::size_t c = 1; c < cols_; ++c) s += (*this)(r, c) * x[c];
      y.push_back(std::move(s));
    }
    return y;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix size mismatch");
    Matrix m(a.rows_, b.cols_, a.data_.front());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        T s = a(i, 0) * b(0, j);
        for (std::size_t k = 1; k < a.cols_; ++k) s += a(i, k) * b(k, j);
        m(i, j) = std::move(s);
      }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

}  // namespace ocmf
