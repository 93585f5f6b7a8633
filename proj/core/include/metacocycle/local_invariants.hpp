#ifndef METACOCYCLE_LOCAL_INVARIANTS_HPP
#define METACOCYCLE_LOCAL_INVARIANTS_HPP

#include <cstddef>
#include <vector>

#include "metacocycle/matrix.hpp"
#include "metacocycle/mu8.hpp"
#include "metacocycle/quad_ext.hpp"
#include "metacocycle/rational.hpp"

namespace metacocycle {

/// Arithmetic environment at an odd prime p.
///
/// psi is psi_c(x) = exp(2 pi i frac_p(c x)) with c = psi_scale (conductor Z_p
/// when c is a unit); eta = psi/2, i.e. scale c/2. Construction validates p and
/// Delta and checks the closed-form Weil index against the Gauss-sum oracle on
/// all four square classes (throws CalibrationMismatch on disagreement).
class LocalContext {
 public:
  LocalContext(Integer p, Rational delta, Rational psi_scale = 1);

  const Integer& p() const { return p_; }
  const Rational& delta() const { return delta_; }
  const Rational& psi_scale() const { return psi_scale_; }
  Rational eta_scale() const { return psi_scale_ / 2; }

  /// E/F unramified: Delta is a unit (hence a unit non-residue).
  bool unramified() const { return unramified_; }

  /// Smallest positive integer that is a quadratic non-residue mod p.
  const Integer& nonresidue() const { return nonresidue_; }

  /// delta as an element of E.
  QuadExt delta_element() const { return QuadExt::generator(delta_); }
  QuadExt make(Rational a, Rational b = 0) const { return {std::move(a), std::move(b), delta_}; }

 private:
  Integer p_;
  Rational delta_;
  Rational psi_scale_;
  Integer nonresidue_;
  bool unramified_ = false;
};

/// Legendre symbol of a p-adic unit. Throws NotAUnit.
Mu8 legendre(const Rational& u, const LocalContext& ctx);

/// Hilbert symbol (a, b) over Q_p, p odd. Throws ZeroArgument.
Mu8 hilbert_symbol(const Rational& a, const Rational& b, const LocalContext& ctx);

/// epsilon_{E/F}(x) = (x, Delta); +1 exactly on norms from E.
Mu8 epsilon_EF(const Rational& x, const LocalContext& ctx);

bool is_square_at_p(const Rational& x, const LocalContext& ctx);
inline bool is_local_norm(const Rational& x, const LocalContext& ctx) { return epsilon_EF(x, ctx).is_one(); }

/// Diagonal nondegenerate quadratic space over F.
class QuadSpaceF {
 public:
  QuadSpaceF() = default;
  explicit QuadSpaceF(std::vector<Rational> diag);

  const std::vector<Rational>& diag() const { return diag_; }
  std::size_t rank() const { return diag_.size(); }
  Rational determinant() const;
  QuadSpaceF scaled(const Rational& s) const;
  QuadSpaceF operator+(const QuadSpaceF& o) const;  // orthogonal sum

 private:
  std::vector<Rational> diag_;
};

Mu8 hasse_invariant(const QuadSpaceF& q, const LocalContext& ctx);

struct Diagonalization {
  QuadSpaceF space;         // nonzero diagonal coefficients
  std::size_t radical_dim;  // number of zero coefficients
  MatrixF basis;            // basis * G * basis^T is diagonal (nonzero part first)
};

/// Congruence diagonalization of a symmetric matrix. Throws NotSymmetric.
Diagonalization diagonalize(const MatrixF& gram);

/// gamma_F(psi_c o a x^2): closed form in the square class of a*c.
Mu8 weil_index_scalar(const Rational& a, const LocalContext& ctx, const Rational& character_scale);

/// Smallest precision accepted by weil_index_gauss_oracle for a*c.
int min_oracle_precision(const Rational& a, const LocalContext& ctx, const Rational& character_scale);

/// Normalized truncated Gauss sum. With b = a*c and v = val_p(b), sums
/// exp(2 pi i frac_p(b y^2 / p^(2N))) over y mod p^(2N - v), i.e. integrates
/// psi_c(a x^2) over p^-N Z_p, and snaps to the nearest eighth root of unity
/// (tolerance 1e-6). Throws PrecisionTooLow or SnapFailure.
Mu8 weil_index_gauss_oracle(const Rational& a, const LocalContext& ctx, const Rational& character_scale,
                            int precision);

/// Runs the oracle at two consecutive precisions and requires agreement.
Mu8 weil_index_gauss_oracle_stationary(const Rational& a, const LocalContext& ctx,
                                       const Rational& character_scale);

/// gamma_F(y, eta) = gamma_F(y eta o x^2) / gamma_F(eta o x^2).
Mu8 gamma_eta(const Rational& y, const LocalContext& ctx);

/// gamma_F(eta o q) for diagonal q; multiplicative over orthogonal sums.
Mu8 weil_index_quadspace(const QuadSpaceF& q, const LocalContext& ctx);

}  // namespace metacocycle

#endif  // METACOCYCLE_LOCAL_INVARIANTS_HPP
