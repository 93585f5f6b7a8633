#ifndef METACOCYCLE_MATRIX_HPP
#define METACOCYCLE_MATRIX_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "metacocycle/error.hpp"
#include "metacocycle/quad_ext.hpp"
#include "metacocycle/rational.hpp"

namespace metacocycle {

/// Dense row-major matrix over an exact field (Rational or QuadExt).
///
/// Vectors are rows and matrices act on the right: v -> v * M. Products of
/// group elements therefore compose left to right.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw Error(ErrorKind::ShapeMismatch, "entry count does not match shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Transpose composed with the Galois conjugation (plain transpose over F).
  Matrix adjoint() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = conj((*this)(i, j));
    return t;
  }

  Matrix conjugate() const {
    Matrix t(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) t.data_[k] = conj(data_[k]);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::ShapeMismatch, "block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(ErrorKind::ShapeMismatch, "block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix row(std::size_t i) const { return block(i, 0, 1, cols_); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!metacocycle::is_zero(x)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::ShapeMismatch, "product of incompatible shapes");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (metacocycle::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (metacocycle::is_zero(b(k, j))) continue;
          c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
    }
    return os << ']';
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatrixF = Matrix<Rational>;
using MatrixE = Matrix<QuadExt>;

template <typename T>
Matrix<T> vstack(const Matrix<T>& top, const Matrix<T>& bottom) {
  if (top.empty() && top.cols() == 0) return bottom;
  if (top.cols() != bottom.cols()) throw Error(ErrorKind::ShapeMismatch, "vstack column mismatch");
  Matrix<T> m(top.rows() + bottom.rows(), top.cols());
  m.set_block(0, 0, top);
  m.set_block(top.rows(), 0, bottom);
  return m;
}

template <typename T>
Matrix<T> hstack(const Matrix<T>& left, const Matrix<T>& right) {
  if (left.rows() != right.rows()) throw Error(ErrorKind::ShapeMismatch, "hstack row mismatch");
  Matrix<T> m(left.rows(), left.cols() + right.cols());
  m.set_block(0, 0, left);
  m.set_block(0, left.cols(), right);
  return m;
}

template <typename T>
Matrix<T> block_diag(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

inline MatrixE to_e(const MatrixF& m) {
  std::vector<QuadExt> d;
  d.reserve(m.data().size());
  for (const auto& x : m.data()) d.emplace_back(x);
  return MatrixE(m.rows(), m.cols(), std::move(d));
}

}  // namespace metacocycle

#endif  // METACOCYCLE_MATRIX_HPP
