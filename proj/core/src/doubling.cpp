#include "metacocycle/doubling.hpp"

#include "metacocycle/error.hpp"

namespace metacocycle {

namespace {

struct RawIndex {
  bool y_part;
  bool delta_part;
  std::size_t k;
  std::size_t l;
};

RawIndex decode(std::size_t t, std::size_t m, std::size_t r) {
  const std::size_t half = 2 * m * r, quarter = m * r;
  const std::size_t u = t % half, e = u % quarter;
  const bool y = t >= half;
  return {y, u >= quarter, e / r, e % r + (y ? r : 0)};
}

std::size_t encode(bool y_part, bool delta_part, std::size_t k, std::size_t l, std::size_t m, std::size_t r) {
  const std::size_t lp = y_part ? l - r : l;
  return (y_part ? 2 * m * r : 0) + (delta_part ? m * r : 0) + k * r + lp;
}

MatrixE basis_matrix(std::size_t t, std::size_t m, std::size_t r, const Rational& delta) {
  RawIndex ix = decode(t, m, r);
  MatrixE z(m, 2 * r);
  z(ix.k, ix.l) = ix.delta_part ? QuadExt::generator(delta) : QuadExt(1);
  return z;
}

}  // namespace

DoubledSpace::DoubledSpace(HermitianSpace v, SplitSkewHermitianSpace w, std::optional<MatrixF> x_change)
    : v_(std::move(v)), w_(std::move(w)) {
  if (v_.delta() != w_.delta()) throw Error(ErrorKind::InvalidContext, "V and W over different extensions");
  const std::size_t dim = 2 * mn(), half = mn();
  raw_gram_ = MatrixF(dim, dim);
  std::vector<MatrixE> basis;
  for (std::size_t t = 0; t < dim; ++t) basis.push_back(basis_matrix(t, m(), r(), v_.delta()));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) raw_gram_(a, b) = pairing(basis[a], basis[b]);
  if (!(raw_gram_.transpose() == -raw_gram_) || is_zero(det(raw_gram_))) {
    throw Error(ErrorKind::DegenerateForm, "trace form is not symplectic");
  }

  MatrixF cx = x_change ? *x_change : MatrixF::identity(half);
  if (cx.rows() != half || cx.cols() != half) throw Error(ErrorKind::ShapeMismatch, "X change of basis has wrong size");
  const MatrixF pairing_xy = cx * raw_gram_.block(0, half, half, half);
  const MatrixF q = inverse(pairing_xy).transpose();
  change_ = block_diag(cx, q);
  change_inv_ = inverse(change_);
  if (!(change_ * raw_gram_ * change_.transpose() == gram())) {
    throw Error(ErrorKind::DegenerateForm, "adapted basis is not symplectic");
  }
}

MatrixF DoubledSpace::raw_coords(const MatrixE& z) const {
  if (z.rows() != m() || z.cols() != 2 * r()) throw Error(ErrorKind::ShapeMismatch, "expected an m x 2r matrix");
  MatrixF out(1, 2 * mn());
  for (std::size_t k = 0; k < m(); ++k)
    for (std::size_t l = 0; l < 2 * r(); ++l) {
      const bool y = l >= r();
      out(0, encode(y, false, k, l, m(), r())) = z(k, l).re();
      out(0, encode(y, true, k, l, m(), r())) = z(k, l).im();
    }
  return out;
}

MatrixE DoubledSpace::from_raw_coords(const MatrixF& row) const {
  if (row.rows() != 1 || row.cols() != 2 * mn()) throw Error(ErrorKind::ShapeMismatch, "expected a coordinate row");
  MatrixE z(m(), 2 * r());
  for (std::size_t k = 0; k < m(); ++k)
    for (std::size_t l = 0; l < 2 * r(); ++l) {
      const bool y = l >= r();
      z(k, l) = QuadExt(row(0, encode(y, false, k, l, m(), r())), row(0, encode(y, true, k, l, m(), r())), v_.delta());
    }
  return z;
}

Rational DoubledSpace::pairing(const MatrixE& z1, const MatrixE& z2) const {
  const MatrixE inner = z1.adjoint() * v_.gram() * z2;  // 2r x 2r
  const MatrixE j = w_.gram();
  QuadExt sum(0);
  for (std::size_t l = 0; l < j.rows(); ++l)
    for (std::size_t lp = 0; lp < j.cols(); ++lp)
      if (!j(l, lp).is_zero()) sum = sum + inner(l, lp) * j(l, lp);
  return sum.trace() / 2;
}

GSpElement inverse(const GSpElement& s) { return {inverse(s.mat), 1 / s.nu}; }

GSpElement identity_element(const DoubledSpace& d) { return {MatrixF::identity(2 * d.mn()), 1}; }

Rational similitude_factor(const MatrixF& s, const DoubledSpace& d) {
  Rational nu;
  if (!form_scale(s, d.gram(), nu) || is_zero(nu)) throw Error(ErrorKind::NotSimilitude, "not a similitude of BW");
  return nu;
}

GSpElement iota(const SimilitudeElement& g, const SimilitudeElement& h, const DoubledSpace& d) {
  const std::size_t m = d.m(), r = d.r(), dim = 2 * d.mn();
  if (g.mat.rows() != m || h.mat.rows() != 2 * r) throw Error(ErrorKind::ShapeMismatch, "iota: element sizes");
  const MatrixE ginv = inverse(g.mat);
  const QuadExt delta = QuadExt::generator(d.v().delta());
  MatrixF raw(dim, dim);
  for (std::size_t t = 0; t < dim; ++t) {
    RawIndex ix = decode(t, m, r);
    const QuadExt c = ix.delta_part ? delta : QuadExt(1);
    MatrixE z(m, 2 * r);
    for (std::size_t k = 0; k < m; ++k) {
      const QuadExt a = ginv(k, ix.k) * c;
      if (a.is_zero()) continue;
      for (std::size_t l = 0; l < 2 * r; ++l) z(k, l) = z(k, l) + a * h.mat(ix.l, l);
    }
    raw.set_block(t, 0, d.raw_coords(z));
  }
  GSpElement out{d.change() * raw * d.change_inverse(), h.nu / g.nu};
  if (similitude_factor(out.mat, d) != out.nu) throw Error(ErrorKind::NotSimilitude, "iota: similitude factor mismatch");
  return out;
}

GSpElement iota_V(const SimilitudeElement& h, const DoubledSpace& d) { return iota(identity_element(d.v()), h, d); }

GSpElement iota_W(const SimilitudeElement& g, const DoubledSpace& d) { return iota(g, identity_element(d.w()), d); }

GSpElement d_big(const Rational& y, const DoubledSpace& d) {
  if (is_zero(y)) throw Error(ErrorKind::ZeroScale, "d(0)");
  MatrixF s = MatrixF::identity(2 * d.mn());
  for (std::size_t i = d.mn(); i < 2 * d.mn(); ++i) s(i, i) = y;
  return {std::move(s), y};
}

GSpElement tau_big(std::size_t j, const DoubledSpace& d) { return {weyl_element<Rational>(d.mn(), j), 1}; }

GSpElement conj_by_d(const GSpElement& s, const Rational& y, const DoubledSpace& d) {
  return inverse(d_big(y, d)) * s * d_big(y, d);
}

GSpElement project_isometry(const GSpElement& s, const DoubledSpace& d) {
  GSpElement out = inverse(d_big(s.nu, d)) * s;
  out.nu = 1;
  return out;
}

GSpElement random_symplectic(const DoubledSpace& d, Rng& rng, std::size_t word_len, long entry_bound) {
  const std::size_t n = d.mn();
  MatrixF s = MatrixF::identity(2 * n);
  for (std::size_t step = 0; step < word_len; ++step) {
    MatrixF letter = MatrixF::identity(2 * n);
    switch (draw_int(rng, 0, 2)) {
      case 0: {
        MatrixF a(n, n);
        do {
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) a(i, k) = draw_rational(rng, entry_bound);
        } while (is_zero(det(a)));
        letter.set_block(0, 0, a);
        letter.set_block(n, n, inverse(a.transpose()));
        break;
      }
      case 1: {
        MatrixF b(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t k = i; k < n; ++k) b(i, k) = b(k, i) = draw_rational(rng, entry_bound);
        letter.set_block(0, n, b);
        break;
      }
      default:
        letter = weyl_element<Rational>(n, static_cast<std::size_t>(draw_int(rng, 0, static_cast<long>(n))));
    }
    s = s * letter;
  }
  if (similitude_factor(s, d) != 1) throw Error(ErrorKind::NotIsometry, "random word left Sp(BW)");
  return {std::move(s), 1};
}

SpBruhatData bruhat_sp(const GSpElement& s, const DoubledSpace& d, Rng* randomize) {
  if (s.nu != 1) throw Error(ErrorKind::NotIsometry, "Bruhat decomposition needs nu(s) = 1");
  if (s.mat.rows() != 2 * d.mn()) throw Error(ErrorKind::ShapeMismatch, "element does not act on BW");
  auto parts = bruhat_parts(s.mat, randomize);
  return {{std::move(parts.p1), 1}, parts.j, {std::move(parts.p2), 1}, std::move(parts.x)};
}

bool is_rational_square(const Rational& x) {
  if (sgn(x) < 0) return false;
  return mpz_perfect_square_p(x.get_num().get_mpz_t()) && mpz_perfect_square_p(x.get_den().get_mpz_t());
}

Lagrangian::Lagrangian(const MatrixF& rows, const DoubledSpace& d) {
  if (rows.cols() != 2 * d.mn() || rank(rows) != d.mn() || !(rows * d.gram() * rows.transpose()).is_zero()) {
    throw Error(ErrorKind::NotLagrangian, "rows do not span a Lagrangian subspace");
  }
  basis_ = row_space(rows);
}

Lagrangian Lagrangian::bx(const DoubledSpace& d) {
  MatrixF rows(d.mn(), 2 * d.mn());
  rows.set_block(0, 0, MatrixF::identity(d.mn()));
  return Lagrangian(rows, d);
}

Lagrangian Lagrangian::by(const DoubledSpace& d) {
  MatrixF rows(d.mn(), 2 * d.mn());
  rows.set_block(0, d.mn(), MatrixF::identity(d.mn()));
  return Lagrangian(rows, d);
}

Lagrangian lagrangian_image(const Lagrangian& l, const GSpElement& s, const DoubledSpace& d) {
  return Lagrangian(l.basis() * s.mat, d);
}

}  // namespace metacocycle
