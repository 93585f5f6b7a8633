#ifndef METACOCYCLE_BRUHAT_HPP
#define METACOCYCLE_BRUHAT_HPP

#include <cstddef>
#include <type_traits>

#include "metacocycle/linalg.hpp"
#include "metacocycle/random.hpp"

namespace metacocycle {

// Bruhat decomposition relative to the Siegel parabolic, written once for any
// exact field with involution (Rational: trivial involution, symplectic case;
// QuadExt: Galois conjugation, skew-hermitian case).
//
// Conventions. The space has basis e_1..e_r, e*_1..e*_r with Gram
// J = [[0, 1], [-1, 0]] and form <x, y> = x J y^adjoint on row vectors.
// Group elements act on the right, so g is an isometry iff g J g^adj = J.
// Y = span(e*) and P_Y = { [[A, B], [0, D]] }; the block of g taking
// Y-coordinates to X-coordinates is the lower-left block C.

template <typename T>
Matrix<T> standard_form(std::size_t r) {
  Matrix<T> j(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    j(i, r + i) = T(1);
    j(r + i, i) = T(-1);
  }
  return j;
}

/// e_i -> -e*_i and e*_i -> e_i for i < j; identity elsewhere.
template <typename T>
Matrix<T> weyl_element(std::size_t r, std::size_t j) {
  if (j > r) throw Error(ErrorKind::IndexOutOfRange, "Weyl element index exceeds half-dimension");
  Matrix<T> t = Matrix<T>::identity(2 * r);
  for (std::size_t i = 0; i < j; ++i) {
    t(i, i) = T(0);
    t(r + i, r + i) = T(0);
    t(i, r + i) = T(-1);
    t(r + i, i) = T(1);
  }
  return t;
}

/// Similitude factor under the right action: g J g^adj = nu J. Returns
/// nothing-like zero when no such nu exists (callers raise their own error).
template <typename T>
bool form_scale(const Matrix<T>& g, const Matrix<T>& gram, T& nu) {
  if (!g.is_square() || g.rows() != gram.rows()) throw Error(ErrorKind::ShapeMismatch, "element/form size mismatch");
  Matrix<T> img = g * gram * g.adjoint();
  // first nonzero Gram entry fixes the candidate scale
  for (std::size_t k = 0; k < gram.data().size(); ++k) {
    if (!is_zero(gram.data()[k])) {
      nu = img.data()[k] / gram.data()[k];
      return img == gram * nu;
    }
  }
  return false;
}

template <typename T>
bool in_siegel_parabolic(const Matrix<T>& g) {
  const std::size_t r = g.rows() / 2;
  return g.block(r, 0, r, r).is_zero();
}

template <typename T>
Matrix<T> levi_y_block(const Matrix<T>& g) {
  const std::size_t r = g.rows() / 2;
  return g.block(r, r, r, r);
}

template <typename T>
struct BruhatParts {
  Matrix<T> p1;
  std::size_t j = 0;
  Matrix<T> p2;
  T x;  // det(p1|_Y * p2|_Y)
};

namespace detail {

template <typename T>
T random_scalar(Rng& rng, const T& like);

template <>
inline Rational random_scalar<Rational>(Rng& rng, const Rational&) {
  return draw_rational(rng, 3);
}

template <>
inline QuadExt random_scalar<QuadExt>(Rng& rng, const QuadExt& like) {
  if (sgn(like.delta()) == 0) return QuadExt(draw_rational(rng, 3));
  return draw_quad_ext(rng, like.delta(), 3);
}

template <typename T>
Matrix<T> random_matrix(Rng& rng, std::size_t rows, std::size_t cols, const T& like) {
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = random_scalar(rng, like);
  return m;
}

template <typename T>
Matrix<T> random_invertible(Rng& rng, std::size_t n, const T& like) {
  for (;;) {
    Matrix<T> m = random_matrix(rng, n, n, like);
    if (!is_zero(det(m))) return m;
  }
}

/// A scalar carrying the field's Delta tag (if any) from the matrix entries.
template <typename T>
T field_tag(const Matrix<T>& m) {
  for (const auto& x : m.data()) {
    if constexpr (std::is_same_v<T, QuadExt>) {
      if (sgn(x.delta()) != 0) return x;
    }
  }
  return T(0);
}

}  // namespace detail

/// Decomposes an isometry g = p1 * tau_j * p2 with p1, p2 in P_Y.
///
/// Builds p2 as the change of basis onto an adapted basis
/// {f_i, f*_i} with f* spanning Y and Y g = span(f_1..f_j, f*_{j+1}..f*_r);
/// then p1 = g p2^-1 tau_j^-1 stabilizes Y. When `rng` is given, every free
/// choice (kernel basis, complement, right inverse) is randomized, which
/// exercises the well-definedness of x modulo the appropriate subgroup.
template <typename T>
BruhatParts<T> bruhat_parts(const Matrix<T>& g, Rng* rng = nullptr) {
  if (!g.is_square() || g.rows() % 2 != 0) throw Error(ErrorKind::ShapeMismatch, "Bruhat: expected 2r x 2r");
  const std::size_t r = g.rows() / 2;
  const Matrix<T> form = standard_form<T>(r);
  if (!(g * form * g.adjoint() == form)) throw Error(ErrorKind::NotIsometry, "Bruhat: element is not an isometry");
  const T tag = detail::field_tag(g);
  auto pair = [&](const Matrix<T>& a, const Matrix<T>& b) { return a * form * b.adjoint(); };

  const Matrix<T> lower = g.block(r, 0, r, 2 * r);  // rows spanning Y g
  const Matrix<T> c = g.block(r, 0, r, r);
  Matrix<T> ker = left_kernel(c);                    // (r - j) x r
  const std::size_t j = r - ker.rows();
  Matrix<T> comp = complement_rows(ker);             // j x r
  if (rng != nullptr) {
    if (ker.rows()) ker = detail::random_invertible(*rng, ker.rows(), tag) * ker;
    if (j) {
      comp = detail::random_invertible(*rng, j, tag) * comp;
      if (ker.rows()) comp = comp + detail::random_matrix(*rng, j, ker.rows(), tag) * ker;
    }
  }

  const Matrix<T> f_low = comp * lower;  // f_1..f_j, inside Y g
  const Matrix<T> ker_y = (ker * lower).block(0, r, ker.rows(), r);  // Y-parts spanning Y g cap Y

  // Right inverse of comp * c through its pivot columns.
  const Matrix<T> sc = comp * c;
  Matrix<T> right_inv(r, j);
  if (j) {
    auto ech = rref(sc);
    Matrix<T> sq(j, j);
    for (std::size_t i = 0; i < j; ++i)
      for (std::size_t k = 0; k < j; ++k) sq(i, k) = sc(i, ech.pivots[k]);
    Matrix<T> sq_inv = inverse(sq);
    for (std::size_t k = 0; k < j; ++k)
      for (std::size_t i = 0; i < j; ++i) right_inv(ech.pivots[k], i) = sq_inv(k, i);
    if (rng != nullptr && j < r) right_inv = right_inv + kernel(sc) * detail::random_matrix(*rng, r - j, j, tag);
  }
  const Matrix<T> eta = right_inv.adjoint();  // j x r

  Matrix<T> ystar = vstack(eta, ker_y);  // Y-parts of f*_1..f*_r
  Matrix<T> fstar(r, 2 * r);
  fstar.set_block(0, r, ystar);

  // Complete f_{j+1}..f_r: dual vectors in X, then isotropy corrections.
  Matrix<T> f_high(r - j, 2 * r);
  if (j < r) {
    const Matrix<T> dual = inverse(ystar.adjoint());
    f_high.set_block(0, 0, dual.block(j, 0, r - j, r));
    if (j) f_high = f_high + pair(f_high, f_low) * fstar.block(0, 0, j, 2 * r);
    const Matrix<T> gstar = fstar.block(j, 0, r - j, 2 * r);
    Matrix<T> q = pair(f_high, f_high);
    f_high = f_high + (q * T(Rational(1, 2))) * gstar;
  }

  Matrix<T> p2(2 * r, 2 * r);
  p2.set_block(0, 0, f_low);
  p2.set_block(j, 0, f_high);
  p2.set_block(r, 0, fstar);
  if (!(p2 * form * p2.adjoint() == form) || !in_siegel_parabolic(p2)) {
    throw Error(ErrorKind::DegenerateForm, "Bruhat: adapted basis construction failed");
  }
  const Matrix<T> tau = weyl_element<T>(r, j);
  Matrix<T> p1 = g * inverse(p2) * inverse(tau);
  if (!in_siegel_parabolic(p1) || !(p1 * tau * p2 == g)) {
    throw Error(ErrorKind::DegenerateForm, "Bruhat: reconstruction left the parabolic");
  }
  T x = det(Matrix<T>(levi_y_block(p1) * levi_y_block(p2)));
  return {std::move(p1), j, std::move(p2), std::move(x)};
}

/// Cell index only: the rank of the Y-to-X block.
template <typename T>
std::size_t bruhat_cell(const Matrix<T>& g) {
  const std::size_t r = g.rows() / 2;
  return rank(g.block(r, 0, r, r));
}

}  // namespace metacocycle

#endif  // METACOCYCLE_BRUHAT_HPP
