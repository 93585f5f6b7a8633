#include "metacocycle/local_invariants.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "metacocycle/error.hpp"

namespace metacocycle {

std::complex<double> Mu8::value() const { return std::polar(1.0, std::numbers::pi * e_ / 4.0); }

std::ostream& operator<<(std::ostream& os, Mu8 x) { return os << "zeta8^" << x.exponent(); }

namespace {

long p_mod4(const Integer& p) { return mpz_fdiv_ui(p.get_mpz_t(), 4); }

Integer find_nonresidue(const Integer& p) {
  for (Integer n = 2;; ++n) {
    if (mpz_legendre(n.get_mpz_t(), p.get_mpz_t()) == -1) return n;
  }
}

}  // namespace

LocalContext::LocalContext(Integer p, Rational delta, Rational psi_scale)
    : p_(std::move(p)), delta_(std::move(delta)), psi_scale_(std::move(psi_scale)) {
  if (p_ <= 2 || !is_probable_prime(p_)) {
    throw Error(ErrorKind::InvalidContext, "p = " + p_.get_str() + " is not an odd prime");
  }
  if (is_zero(delta_)) throw Error(ErrorKind::InvalidContext, "Delta must be nonzero");
  if (is_zero(psi_scale_)) throw Error(ErrorKind::InvalidContext, "psi scale must be nonzero");
  nonresidue_ = find_nonresidue(p_);
  if (is_square_at_p(delta_, *this)) {
    throw Error(ErrorKind::InvalidContext, "Delta = " + to_string(delta_) + " is a square in Q_" + p_.get_str());
  }
  unramified_ = valuation(delta_, p_) % 2 == 0;

  // The closed form must reproduce the Gauss-sum oracle on every square class.
  const Rational classes[] = {Rational(1), Rational(nonresidue_), Rational(p_), Rational(nonresidue_ * p_)};
  for (const Rational& scale : {psi_scale_, eta_scale()}) {
    for (const auto& a : classes) {
      Mu8 closed = weil_index_scalar(a, *this, scale);
      Mu8 oracle = weil_index_gauss_oracle_stationary(a, *this, scale);
      if (!(closed == oracle)) {
        std::ostringstream msg;
        msg << "Weil index closed form " << closed << " != oracle " << oracle << " at a = " << a << ", p = " << p_;
        throw Error(ErrorKind::CalibrationMismatch, msg.str());
      }
    }
  }
}

Mu8 legendre(const Rational& u, const LocalContext& ctx) {
  if (is_zero(u) || valuation(u, ctx.p()) != 0) {
    throw Error(ErrorKind::NotAUnit, to_string(u) + " is not a unit at " + ctx.p().get_str());
  }
  Integer r = reduce_unit(u, ctx.p(), 1);
  return Mu8::sign(mpz_legendre(r.get_mpz_t(), ctx.p().get_mpz_t()) == -1);
}

Mu8 hilbert_symbol(const Rational& a, const Rational& b, const LocalContext& ctx) {
  if (is_zero(a) || is_zero(b)) throw Error(ErrorKind::ZeroArgument, "Hilbert symbol of zero");
  const Integer& p = ctx.p();
  long alpha = valuation(a, p);
  long beta = valuation(b, p);
  Mu8 result = Mu8::one();
  // (-1)^(alpha beta (p-1)/2)
  if ((alpha & 1) && (beta & 1) && p_mod4(p) == 3) result *= Mu8::minus_one();
  if (beta & 1) result *= legendre(unit_part(a, p), ctx);
  if (alpha & 1) result *= legendre(unit_part(b, p), ctx);
  return result;
}

Mu8 epsilon_EF(const Rational& x, const LocalContext& ctx) {
  if (is_zero(x)) throw Error(ErrorKind::ZeroArgument, "epsilon_EF of zero");
  return hilbert_symbol(x, ctx.delta(), ctx);
}

bool is_square_at_p(const Rational& x, const LocalContext& ctx) {
  if (is_zero(x)) return true;
  if (valuation(x, ctx.p()) % 2 != 0) return false;
  return legendre(unit_part(x, ctx.p()), ctx).is_one();
}

QuadSpaceF::QuadSpaceF(std::vector<Rational> diag) : diag_(std::move(diag)) {
  for (const auto& a : diag_) {
    if (is_zero(a)) throw Error(ErrorKind::DegenerateForm, "quadratic space with a zero coefficient");
  }
}

Rational QuadSpaceF::determinant() const {
  Rational d(1);
  for (const auto& a : diag_) d *= a;
  return d;
}

QuadSpaceF QuadSpaceF::scaled(const Rational& s) const {
  std::vector<Rational> d = diag_;
  for (auto& a : d) a *= s;
  return QuadSpaceF(std::move(d));
}

QuadSpaceF QuadSpaceF::operator+(const QuadSpaceF& o) const {
  std::vector<Rational> d = diag_;
  d.insert(d.end(), o.diag_.begin(), o.diag_.end());
  return QuadSpaceF(std::move(d));
}

Mu8 hasse_invariant(const QuadSpaceF& q, const LocalContext& ctx) {
  Mu8 h = Mu8::one();
  const auto& d = q.diag();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) h *= hilbert_symbol(d[i], d[j], ctx);
  return h;
}

Diagonalization diagonalize(const MatrixF& gram) {
  if (!gram.is_square() || !(gram == gram.transpose())) {
    throw Error(ErrorKind::NotSymmetric, "diagonalize expects a symmetric matrix");
  }
  const std::size_t n = gram.rows();
  MatrixF g = gram;
  MatrixF basis = MatrixF::identity(n);

  // Congruence step: row i += s * row j on both g (rows and columns) and basis.
  auto add_multiple = [&](std::size_t i, std::size_t j, const Rational& s) {
    for (std::size_t c = 0; c < n; ++c) g(i, c) += s * g(j, c);
    for (std::size_t r = 0; r < n; ++r) g(r, i) += s * g(r, j);
    for (std::size_t c = 0; c < n; ++c) basis(i, c) += s * basis(j, c);
  };
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(g(i, c), g(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(g(r, i), g(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(basis(i, c), basis(j, c));
  };

  std::vector<Rational> diag;
  std::size_t k = 0;
  for (; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i)
      if (!is_zero(g(i, i))) piv = i;
    if (piv == n) {
      // All remaining diagonal entries vanish; use an off-diagonal entry.
      for (std::size_t i = k; i < n && piv == n; ++i)
        for (std::size_t j = i + 1; j < n && piv == n; ++j)
          if (!is_zero(g(i, j))) {
            add_multiple(i, j, Rational(1));
            piv = i;
          }
    }
    if (piv == n) break;  // remaining block is zero
    swap_index(k, piv);
    Rational inv = 1 / g(k, k);
    for (std::size_t l = k + 1; l < n; ++l) {
      if (is_zero(g(l, k))) continue;
      add_multiple(l, k, -g(l, k) * inv);
    }
    diag.push_back(g(k, k));
  }
  return {QuadSpaceF(std::move(diag)), n - k, std::move(basis)};
}

Mu8 weil_index_scalar(const Rational& a, const LocalContext& ctx, const Rational& character_scale) {
  if (is_zero(a)) throw Error(ErrorKind::ZeroArgument, "Weil index of a zero form");
  Rational b = a * character_scale;
  if (valuation(b, ctx.p()) % 2 == 0) return Mu8::one();
  // Odd valuation: (u/p) times the normalized Gauss sum of x -> x^2 / p, which
  // is 1 for p = 1 mod 4 and i for p = 3 mod 4.
  Mu8 gauss = p_mod4(ctx.p()) == 1 ? Mu8::one() : Mu8(2);
  return legendre(unit_part(b, ctx.p()), ctx) * gauss;
}

int min_oracle_precision(const Rational& a, const LocalContext& ctx, const Rational& character_scale) {
  int v = valuation(a * character_scale, ctx.p());
  // smallest N >= 1 with 2N - v >= 1
  return v <= 0 ? 1 : (v + 2) / 2;
}

Mu8 weil_index_gauss_oracle(const Rational& a, const LocalContext& ctx, const Rational& character_scale,
                            int precision) {
  if (is_zero(a)) throw Error(ErrorKind::ZeroArgument, "Weil index of a zero form");
  const Rational b = a * character_scale;
  const int v = valuation(b, ctx.p());
  const int e = 2 * precision - v;
  if (precision < 1 || e < 1) {
    throw Error(ErrorKind::PrecisionTooLow, "precision " + std::to_string(precision) + " too low for valuation " +
                                                std::to_string(v));
  }
  Integer modulus;
  mpz_pow_ui(modulus.get_mpz_t(), ctx.p().get_mpz_t(), static_cast<unsigned long>(e));
  if (modulus > 50'000'000) throw Error(ErrorKind::PrecisionTooLow, "Gauss sum modulus too large");
  const unsigned long m = modulus.get_ui();
  const unsigned long unit = reduce_unit(unit_part(b, ctx.p()), ctx.p(), static_cast<unsigned>(e)).get_ui();

  std::complex<double> sum = 0;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
  for (unsigned long y = 0; y < m; ++y) {
    unsigned long sq = static_cast<unsigned long>((static_cast<unsigned __int128>(y) * y) % m);
    unsigned long t = static_cast<unsigned long>((static_cast<unsigned __int128>(unit) * sq) % m);
    sum += std::polar(1.0, step * static_cast<double>(t));
  }
  const double mag = std::abs(sum);
  if (mag < 1e-9) throw Error(ErrorKind::SnapFailure, "Gauss sum vanished");
  const std::complex<double> unitval = sum / mag;
  for (int k = 0; k < 8; ++k) {
    if (std::abs(unitval - Mu8(k).value()) < 1e-6) return Mu8(k);
  }
  throw Error(ErrorKind::SnapFailure, "normalized Gauss sum is not an eighth root of unity");
}

Mu8 weil_index_gauss_oracle_stationary(const Rational& a, const LocalContext& ctx,
                                       const Rational& character_scale) {
  int n = min_oracle_precision(a, ctx, character_scale);
  Mu8 first = weil_index_gauss_oracle(a, ctx, character_scale, n);
  Mu8 second = weil_index_gauss_oracle(a, ctx, character_scale, n + 1);
  if (!(first == second)) throw Error(ErrorKind::SnapFailure, "Gauss sum not stationary in precision");
  return first;
}

Mu8 gamma_eta(const Rational& y, const LocalContext& ctx) {
  if (is_zero(y)) throw Error(ErrorKind::ZeroArgument, "gamma(0, eta)");
  return weil_index_scalar(y, ctx, ctx.eta_scale()) / weil_index_scalar(Rational(1), ctx, ctx.eta_scale());
}

Mu8 weil_index_quadspace(const QuadSpaceF& q, const LocalContext& ctx) {
  Mu8 g = Mu8::one();
  for (const auto& a : q.diag()) g *= weil_index_scalar(a, ctx, ctx.eta_scale());
  return g;
}

}  // namespace metacocycle
