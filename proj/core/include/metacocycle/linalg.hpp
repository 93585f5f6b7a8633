#ifndef METACOCYCLE_LINALG_HPP
#define METACOCYCLE_LINALG_HPP

#include <cstddef>
#include <vector>

#include "metacocycle/matrix.hpp"

namespace metacocycle {

template <typename T>
struct Echelon {
  Matrix<T> reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination with exact pivoting.
template <typename T>
Echelon<T> rref(Matrix<T> m) {
  Echelon<T> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

template <typename T>
T det(Matrix<T> m) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  T d(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(m(piv, col))) ++piv;
    if (piv == n) return T(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      d = -d;
    }
    d *= m(col, col);
    T inv = T(1) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      T f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) {
        if (!is_zero(m(col, j))) m(i, j) -= f * m(col, j);
      }
    }
  }
  return d;
}

/// Solves A X = B; throws SingularMatrix if A is not invertible.
template <typename T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.is_square() || a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "solve: incompatible shapes");
  auto e = rref(hstack(a, b));
  const std::size_t n = a.rows();
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw Error(ErrorKind::SingularMatrix, "solve: singular system");
  return e.reduced.block(0, n, n, b.cols());
}

template <typename T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "inverse of a non-square matrix");
  return solve(a, Matrix<T>::identity(a.rows()));
}

/// Columns spanning { x : A x = 0 }.
template <typename T>
Matrix<T> kernel(const Matrix<T>& a) {
  auto e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix<T> k(a.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free[f]);
  }
  return k;
}

/// Rows spanning { y : y A = 0 }.
template <typename T>
Matrix<T> left_kernel(const Matrix<T>& a) {
  return kernel(a.transpose()).transpose();
}

/// Row space basis in reduced echelon form (zero rows dropped).
template <typename T>
Matrix<T> row_space(const Matrix<T>& a) {
  auto e = rref(a);
  return e.reduced.block(0, 0, e.pivots.size(), a.cols());
}

/// Extends the rows of `a` (assumed independent) by standard basis rows to a
/// basis of the whole space; returns only the added rows.
template <typename T>
Matrix<T> complement_rows(const Matrix<T>& a) {
  const std::size_t n = a.cols();
  auto e = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix<T> out(free.size(), n);
  for (std::size_t i = 0; i < free.size(); ++i) out(i, free[i]) = T(1);
  return out;
}

/// Ordering of the F-coordinates of one E-coordinate when restricting scalars.
enum class ScalarSide {
  Column,  // a+b*delta acts on column coordinates (1, delta): [[a, b*Delta], [b, a]]
  Row,     // acts on row coordinates from the right: the transpose of the above
};

/// Replaces each E-entry by its 2x2 F-block in the basis (1, delta).
/// Functorial: restrict(M N) = restrict(M) restrict(N).
MatrixF restrict_scalars(const MatrixE& m, ScalarSide side = ScalarSide::Row);

}  // namespace metacocycle

#endif  // METACOCYCLE_LINALG_HPP
