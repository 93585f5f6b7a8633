#ifndef METACOCYCLE_HERMITIAN_HPP
#define METACOCYCLE_HERMITIAN_HPP

#include <cstddef>
#include <vector>

#include "metacocycle/bruhat.hpp"
#include "metacocycle/linalg.hpp"
#include "metacocycle/local_invariants.hpp"
#include "metacocycle/random.hpp"

namespace metacocycle {

// Action conventions
// ------------------
// W (skew-hermitian, split): row vectors, h acts on the right, the form is
//   <x, y> = x J y^adj and h is a similitude iff h J h^adj = nu J.
// V (hermitian): column vectors, g acts on the left, the form is
//   (v, v') = v^adj S v' (conjugate-linear in the first slot) and g is a
//   similitude iff g^adj S g = nu S.
// With these choices (v (x) w) -> g^-1 v (x) w h is a homomorphism
// G x H -> GSp(V (x)_E W) and the trace form on the tensor product is
// well defined over E.

/// Nondegenerate hermitian space of dimension m over E.
class HermitianSpace {
 public:
  HermitianSpace(MatrixE gram, Rational delta);
  static HermitianSpace diagonal(const std::vector<Rational>& coeffs, const Rational& delta);

  std::size_t m() const { return gram_.rows(); }
  const MatrixE& gram() const { return gram_; }
  const Rational& delta() const { return delta_; }
  /// det of the Gram matrix; lies in F for hermitian matrices.
  Rational det() const;
  bool is_diagonal() const;

 private:
  MatrixE gram_;
  Rational delta_;
};

/// W = X + Y with basis e_1..e_r, e*_1..e*_r and <e_i, e*_j> = delta_ij.
class SplitSkewHermitianSpace {
 public:
  SplitSkewHermitianSpace(std::size_t r, Rational delta);

  std::size_t r() const { return r_; }
  std::size_t n() const { return 2 * r_; }
  const Rational& delta() const { return delta_; }
  MatrixE gram() const { return standard_form<QuadExt>(r_); }

 private:
  std::size_t r_;
  Rational delta_;
};

/// A matrix together with its similitude factor.
struct SimilitudeElement {
  MatrixE mat;
  Rational nu;

  friend SimilitudeElement operator*(const SimilitudeElement& a, const SimilitudeElement& b) {
    return {a.mat * b.mat, a.nu * b.nu};
  }
  friend bool operator==(const SimilitudeElement& a, const SimilitudeElement& b) {
    return a.mat == b.mat && a.nu == b.nu;
  }
};

SimilitudeElement inverse(const SimilitudeElement& g);

/// Throws NotSimilitude (or ShapeMismatch).
Rational similitude_factor(const MatrixE& h, const SplitSkewHermitianSpace& w);
Rational similitude_factor(const MatrixE& g, const HermitianSpace& v);

SimilitudeElement make_similitude(MatrixE h, const SplitSkewHermitianSpace& w);
SimilitudeElement make_similitude(MatrixE g, const HermitianSpace& v);

SimilitudeElement identity_element(const SplitSkewHermitianSpace& w);
SimilitudeElement identity_element(const HermitianSpace& v);

/// Weyl element tau_j of U(W). Throws IndexOutOfRange.
SimilitudeElement tau(const SplitSkewHermitianSpace& w, std::size_t j);

/// d(y) = diag(1_r, y 1_r), similitude factor y. Throws ZeroScale.
SimilitudeElement d_scale(const SplitSkewHermitianSpace& w, const Rational& y);

/// h = p1 tau_j p2 in U(W) with x(h) = det(p1 p2 |_Y) kept as a concrete
/// element of E^x (its class modulo norms is what matters).
struct BruhatData {
  SimilitudeElement p1;
  std::size_t j = 0;
  SimilitudeElement p2;
  QuadExt x_class;
};

/// Throws NotIsometry when nu(h) != 1.
BruhatData bruhat_decompose(const SimilitudeElement& h, const SplitSkewHermitianSpace& w, Rng* randomize = nullptr);

/// h^y = d(y)^-1 h d(y). Throws ZeroScale.
SimilitudeElement conj_by_d(const SimilitudeElement& h, const Rational& y, const SplitSkewHermitianSpace& w);

/// h_1 = d(nu(h))^-1 h in U(W).
SimilitudeElement project_isometry(const SimilitudeElement& h, const SplitSkewHermitianSpace& w);

/// Random word of the given length in Levi elements, unipotents of P_Y and
/// Weyl elements (entries bounded by 3).
SimilitudeElement random_unitary(const SplitSkewHermitianSpace& w, Rng& rng, std::size_t word_len = 6);

/// Cayley transform (1 - Z)(1 + Z)^-1 of Z = S^-1 K with K skew-hermitian.
SimilitudeElement cayley(const HermitianSpace& v, const MatrixE& skew);

/// Product of word_len random Cayley transforms. Throws RetryExhausted.
SimilitudeElement random_unitary(const HermitianSpace& v, Rng& rng, std::size_t word_len = 2);

/// d(y) on W.
SimilitudeElement similitude_with_factor(const SplitSkewHermitianSpace& w, const Rational& y);

/// A g in GU(V) with nu(g) = y: scalars z with N(z) = y, or (m even, diagonal
/// V) a block construction on pairs of coordinates. Searches numerators and
/// denominators up to search_bound; throws NotFound when the bound is
/// exhausted (never a proof of nonexistence).
SimilitudeElement similitude_with_factor(const HermitianSpace& v, const Rational& y, long search_bound);

/// Some z in E with N(z) = y and small coordinates, if the bounded search finds one.
bool find_norm_preimage(const Rational& y, const Rational& delta, long search_bound, QuadExt& out);

/// x1 / x2 lies in F and is a local norm: the test used for equality in
/// E^x / N(E^x) at the place p.
bool same_norm_class(const QuadExt& x1, const QuadExt& x2, const LocalContext& ctx);

/// epsilon((-1)^(m(m-1)/2) det V).
Mu8 epsilon_space(const HermitianSpace& v, const LocalContext& ctx);

/// nu(h) in nu(G): always for m even, iff nu(h) is a local norm for m odd.
bool in_H_plus(const SimilitudeElement& h, const HermitianSpace& v, const LocalContext& ctx);

}  // namespace metacocycle

#endif  // METACOCYCLE_HERMITIAN_HPP
