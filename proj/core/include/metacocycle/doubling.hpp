#ifndef METACOCYCLE_DOUBLING_HPP
#define METACOCYCLE_DOUBLING_HPP

#include <cstddef>
#include <optional>

#include "metacocycle/hermitian.hpp"

namespace metacocycle {

// The doubled space BW = V (x)_E W, realised as m x 2r matrices Z over E
// (v (x) w = v w, column times row). iota(g, h) sends Z to g^-1 Z h, and the
// symplectic form is 1/2 Tr_{E/F} sum conj(Z_kl) S_kk' J_ll' Z'_k'l'.
//
// F-coordinates are row vectors. The raw basis lists the elementary matrices
// c E_kl in the order X-real, X-delta, Y-real, Y-delta (l < r is X, (k, l)
// lexicographic, c = 1 or delta). The adapted basis keeps the X vectors (after
// an optional change of basis) and replaces the Y vectors by the dual basis,
// so the Gram matrix becomes [[0, 1], [-1, 0]].

class DoubledSpace {
 public:
  /// x_change, if given, is an invertible 2mr x 2mr matrix over F whose rows
  /// express the adapted X basis in raw X coordinates.
  DoubledSpace(HermitianSpace v, SplitSkewHermitianSpace w, std::optional<MatrixF> x_change = std::nullopt);

  const HermitianSpace& v() const { return v_; }
  const SplitSkewHermitianSpace& w() const { return w_; }
  std::size_t m() const { return v_.m(); }
  std::size_t r() const { return w_.r(); }
  /// Half the F-dimension: m n with n = 2r.
  std::size_t mn() const { return 2 * m() * r(); }

  const MatrixF& raw_gram() const { return raw_gram_; }
  /// Rows are the adapted basis vectors in raw coordinates.
  const MatrixF& change() const { return change_; }
  const MatrixF& change_inverse() const { return change_inv_; }
  MatrixF gram() const { return standard_form<Rational>(mn()); }

  /// Raw F-coordinates of an m x 2r matrix and back.
  MatrixF raw_coords(const MatrixE& z) const;
  MatrixE from_raw_coords(const MatrixF& row) const;
  /// Adapted coordinates.
  MatrixF coords(const MatrixE& z) const { return raw_coords(z) * change_inv_; }
  MatrixE from_coords(const MatrixF& row) const { return from_raw_coords(row * change_); }

  /// The symplectic form evaluated directly from the trace formula.
  Rational pairing(const MatrixE& z1, const MatrixE& z2) const;

 private:
  HermitianSpace v_;
  SplitSkewHermitianSpace w_;
  MatrixF raw_gram_;
  MatrixF change_;
  MatrixF change_inv_;
};

struct GSpElement {
  MatrixF mat;
  Rational nu;

  friend GSpElement operator*(const GSpElement& a, const GSpElement& b) { return {a.mat * b.mat, a.nu * b.nu}; }
  friend bool operator==(const GSpElement& a, const GSpElement& b) { return a.mat == b.mat && a.nu == b.nu; }
};

GSpElement inverse(const GSpElement& s);
GSpElement identity_element(const DoubledSpace& d);

/// Throws NotSimilitude.
Rational similitude_factor(const MatrixF& s, const DoubledSpace& d);

/// iota(g, h): Z -> g^-1 Z h, with nu = nu(h) / nu(g).
GSpElement iota(const SimilitudeElement& g, const SimilitudeElement& h, const DoubledSpace& d);
GSpElement iota_V(const SimilitudeElement& h, const DoubledSpace& d);
GSpElement iota_W(const SimilitudeElement& g, const DoubledSpace& d);

/// d(y) = diag(1_mn, y 1_mn). Throws ZeroScale.
GSpElement d_big(const Rational& y, const DoubledSpace& d);
GSpElement tau_big(std::size_t j, const DoubledSpace& d);
/// s^y = d(y)^-1 s d(y).
GSpElement conj_by_d(const GSpElement& s, const Rational& y, const DoubledSpace& d);
/// s_1 = d(nu(s))^-1 s.
GSpElement project_isometry(const GSpElement& s, const DoubledSpace& d);

/// Random word in Levi elements diag(A, A^-T), unipotents [[1, B], [0, 1]]
/// with B symmetric, and Weyl elements.
GSpElement random_symplectic(const DoubledSpace& d, Rng& rng, std::size_t word_len = 4, long entry_bound = 3);

struct SpBruhatData {
  GSpElement p1;
  std::size_t j = 0;
  GSpElement p2;
  Rational x_class;  // det(p1 p2 |_Y); meaningful modulo squares
};

/// Throws NotIsometry when nu(s) != 1.
SpBruhatData bruhat_sp(const GSpElement& s, const DoubledSpace& d, Rng* randomize = nullptr);

bool is_rational_square(const Rational& x);

/// A Lagrangian subspace as the reduced row echelon basis of its row space.
class Lagrangian {
 public:
  /// Throws NotLagrangian.
  Lagrangian(const MatrixF& rows, const DoubledSpace& d);

  const MatrixF& basis() const { return basis_; }
  friend bool operator==(const Lagrangian& a, const Lagrangian& b) { return a.basis_ == b.basis_; }

  static Lagrangian bx(const DoubledSpace& d);
  static Lagrangian by(const DoubledSpace& d);

 private:
  MatrixF basis_;
};

Lagrangian lagrangian_image(const Lagrangian& l, const GSpElement& s, const DoubledSpace& d);

}  // namespace metacocycle

#endif  // METACOCYCLE_DOUBLING_HPP
