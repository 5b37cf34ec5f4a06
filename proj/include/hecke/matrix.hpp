#pragma once

// Dense matrix arithmetic over an exact field. Representation dimensions
// stay small (the largest irreducible block for rank <= 8 has 90 rows), so a
// flat row-major vector is all that is needed.

#include <stdexcept>
#include <vector>

namespace hecke {

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative size");
    data_.assign(size_t(rows) * size_t(cols), F(0));
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Matrix diagonal(const std::vector<F>& entries) {
    Matrix m(int(entries.size()), int(entries.size()));
    for (int i = 0; i < m.rows(); ++i) m(i, i) = entries[size_t(i)];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  F& operator()(int r, int c) { return data_.at(index(r, c)); }
  const F& operator()(int r, int c) const { return data_.at(index(r, c)); }

  bool is_zero() const {
    for (const F& x : data_)
      if (!(x == F(0))) return false;
    return true;
  }

  F trace() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: trace of a non-square matrix");
    F t(0);
    for (int i = 0; i < rows_; ++i) t = t + (*this)(i, i);
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = r.data_[k] + b.data_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = r.data_[k] - b.data_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: size mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (aik == F(0)) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
      }
    return r;
  }

  friend Matrix operator*(const F& s, const Matrix& a) {
    Matrix r = a;
    for (F& x : r.data_) x = s * x;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("Matrix: index out of range");
    return size_t(r) * size_t(cols_) + size_t(c);
  }

  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix: size mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<F> data_;
};

}  // namespace hecke
