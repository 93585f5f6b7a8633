#include "metacocycle/hermitian.hpp"

#include <map>

#include "metacocycle/error.hpp"

namespace metacocycle {

namespace {

void require_delta(const MatrixE& m, const Rational& delta) {
  for (const auto& x : m.data()) {
    if (sgn(x.delta()) != 0 && x.delta() != delta) {
      throw Error(ErrorKind::InvalidContext, "matrix entry lives in a different quadratic extension");
    }
  }
}

Rational scale_to_base_field(const QuadExt& nu, const char* what) {
  if (!nu.in_base_field() || is_zero(nu.re())) {
    throw Error(ErrorKind::NotSimilitude, std::string(what) + ": similitude factor not in F^x");
  }
  return nu.re();
}

// All values n/d with |n| <= bound, 1 <= d <= bound, without repeats.
std::vector<Rational> small_rationals(long bound) {
  std::vector<Rational> out;
  for (long d = 1; d <= bound; ++d)
    for (long n = -bound; n <= bound; ++n) {
      Integer g;
      Integer nn(n), dd(d);
      mpz_gcd(g.get_mpz_t(), nn.get_mpz_t(), dd.get_mpz_t());
      if (g == 1 || (n == 0 && d == 1)) out.emplace_back(n, d);
    }
  return out;
}

std::map<Rational, QuadExt> norm_table(const Rational& delta, long bound) {
  std::map<Rational, QuadExt> table;
  const auto values = small_rationals(bound);
  for (const auto& a : values)
    for (const auto& b : values) {
      QuadExt z(a, b, delta);
      if (z.is_zero()) continue;
      table.emplace(z.norm(), z);
    }
  return table;
}

}  // namespace

HermitianSpace::HermitianSpace(MatrixE gram, Rational delta) : gram_(std::move(gram)), delta_(std::move(delta)) {
  if (!gram_.is_square() || gram_.rows() == 0) throw Error(ErrorKind::ShapeMismatch, "hermitian Gram must be square");
  require_delta(gram_, delta_);
  if (!(gram_.adjoint() == gram_)) throw Error(ErrorKind::NotSymmetric, "Gram matrix is not hermitian");
  if (is_zero(det())) throw Error(ErrorKind::DegenerateForm, "hermitian form is degenerate");
}

HermitianSpace HermitianSpace::diagonal(const std::vector<Rational>& coeffs, const Rational& delta) {
  std::vector<QuadExt> d;
  for (const auto& c : coeffs) d.emplace_back(c);
  return HermitianSpace(MatrixE::diagonal(d), delta);
}

Rational HermitianSpace::det() const {
  QuadExt d = metacocycle::det(gram_);
  if (!d.in_base_field()) throw Error(ErrorKind::InvalidContext, "hermitian determinant outside F");
  return d.re();
}

bool HermitianSpace::is_diagonal() const {
  for (std::size_t i = 0; i < m(); ++i)
    for (std::size_t j = 0; j < m(); ++j)
      if (i != j && !gram_(i, j).is_zero()) return false;
  return true;
}

SplitSkewHermitianSpace::SplitSkewHermitianSpace(std::size_t r, Rational delta) : r_(r), delta_(std::move(delta)) {
  if (r_ == 0) throw Error(ErrorKind::ShapeMismatch, "split skew-hermitian space needs r >= 1");
}

SimilitudeElement inverse(const SimilitudeElement& g) { return {inverse(g.mat), 1 / g.nu}; }

Rational similitude_factor(const MatrixE& h, const SplitSkewHermitianSpace& w) {
  if (!h.is_square() || h.rows() != w.n()) throw Error(ErrorKind::ShapeMismatch, "element does not act on W");
  require_delta(h, w.delta());
  QuadExt nu;
  if (!form_scale(h, w.gram(), nu)) throw Error(ErrorKind::NotSimilitude, "not a similitude of W");
  return scale_to_base_field(nu, "W");
}

Rational similitude_factor(const MatrixE& g, const HermitianSpace& v) {
  if (!g.is_square() || g.rows() != v.m()) throw Error(ErrorKind::ShapeMismatch, "element does not act on V");
  require_delta(g, v.delta());
  const MatrixE& s = v.gram();
  MatrixE img = g.adjoint() * s * g;
  for (std::size_t k = 0; k < s.data().size(); ++k) {
    if (s.data()[k].is_zero()) continue;
    QuadExt nu = img.data()[k] / s.data()[k];
    if (!(img == s * nu)) break;
    return scale_to_base_field(nu, "V");
  }
  throw Error(ErrorKind::NotSimilitude, "not a similitude of V");
}

SimilitudeElement make_similitude(MatrixE h, const SplitSkewHermitianSpace& w) {
  Rational nu = similitude_factor(h, w);
  return {std::move(h), std::move(nu)};
}

SimilitudeElement make_similitude(MatrixE g, const HermitianSpace& v) {
  Rational nu = similitude_factor(g, v);
  return {std::move(g), std::move(nu)};
}

SimilitudeElement identity_element(const SplitSkewHermitianSpace& w) { return {MatrixE::identity(w.n()), 1}; }
SimilitudeElement identity_element(const HermitianSpace& v) { return {MatrixE::identity(v.m()), 1}; }

SimilitudeElement tau(const SplitSkewHermitianSpace& w, std::size_t j) {
  return {weyl_element<QuadExt>(w.r(), j), 1};
}

SimilitudeElement d_scale(const SplitSkewHermitianSpace& w, const Rational& y) {
  if (is_zero(y)) throw Error(ErrorKind::ZeroScale, "d(0)");
  MatrixE d = MatrixE::identity(w.n());
  for (std::size_t i = 0; i < w.r(); ++i) d(w.r() + i, w.r() + i) = QuadExt(y);
  return {std::move(d), y};
}

BruhatData bruhat_decompose(const SimilitudeElement& h, const SplitSkewHermitianSpace& w, Rng* randomize) {
  if (h.nu != 1) throw Error(ErrorKind::NotIsometry, "Bruhat decomposition needs nu(h) = 1");
  if (h.mat.rows() != w.n()) throw Error(ErrorKind::ShapeMismatch, "element does not act on W");
  auto parts = bruhat_parts(h.mat, randomize);
  return {{std::move(parts.p1), 1}, parts.j, {std::move(parts.p2), 1}, std::move(parts.x)};
}

SimilitudeElement conj_by_d(const SimilitudeElement& h, const Rational& y, const SplitSkewHermitianSpace& w) {
  if (is_zero(y)) throw Error(ErrorKind::ZeroScale, "conjugation by d(0)");
  return inverse(d_scale(w, y)) * h * d_scale(w, y);
}

SimilitudeElement project_isometry(const SimilitudeElement& h, const SplitSkewHermitianSpace& w) {
  SimilitudeElement out = inverse(d_scale(w, h.nu)) * h;
  out.nu = 1;
  return out;
}

SimilitudeElement random_unitary(const SplitSkewHermitianSpace& w, Rng& rng, std::size_t word_len) {
  const std::size_t r = w.r();
  const QuadExt tag = QuadExt::generator(w.delta());
  SimilitudeElement h = identity_element(w);
  for (std::size_t step = 0; step < word_len; ++step) {
    MatrixE letter = MatrixE::identity(w.n());
    switch (draw_int(rng, 0, 2)) {
      case 0: {  // Levi diag(A, (A^adj)^-1)
        MatrixE a = detail::random_invertible(rng, r, tag);
        letter.set_block(0, 0, a);
        letter.set_block(r, r, inverse(a.adjoint()));
        break;
      }
      case 1: {  // unipotent [[1, B], [0, 1]] with B hermitian
        MatrixE b(r, r);
        for (std::size_t i = 0; i < r; ++i) {
          b(i, i) = QuadExt(draw_rational(rng, 3));
          for (std::size_t k = i + 1; k < r; ++k) {
            b(i, k) = draw_quad_ext(rng, w.delta(), 3);
            b(k, i) = b(i, k).conj();
          }
        }
        letter.set_block(0, r, b);
        break;
      }
      default:
        letter = weyl_element<QuadExt>(r, static_cast<std::size_t>(draw_int(rng, 0, static_cast<long>(r))));
    }
    h.mat = h.mat * letter;
  }
  if (similitude_factor(h.mat, w) != 1) throw Error(ErrorKind::NotIsometry, "random word left U(W)");
  return h;
}

SimilitudeElement cayley(const HermitianSpace& v, const MatrixE& skew) {
  const std::size_t m = v.m();
  if (!(skew.adjoint() == -skew)) throw Error(ErrorKind::NotSymmetric, "Cayley input must be skew-hermitian");
  MatrixE z = inverse(v.gram()) * skew;
  MatrixE one = MatrixE::identity(m);
  MatrixE g = (one - z) * inverse(one + z);
  return make_similitude(std::move(g), v);
}

SimilitudeElement random_unitary(const HermitianSpace& v, Rng& rng, std::size_t word_len) {
  const std::size_t m = v.m();
  SimilitudeElement g = identity_element(v);
  for (std::size_t step = 0; step < word_len; ++step) {
    bool done = false;
    for (int attempt = 0; attempt < 64 && !done; ++attempt) {
      MatrixE k(m, m);
      for (std::size_t i = 0; i < m; ++i) {
        k(i, i) = QuadExt(0, draw_rational(rng, 3), v.delta());
        for (std::size_t j = i + 1; j < m; ++j) {
          k(i, j) = draw_quad_ext(rng, v.delta(), 3);
          k(j, i) = -k(i, j).conj();
        }
      }
      try {
        g = g * cayley(v, k);
        done = true;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SingularMatrix) throw;
      }
    }
    if (!done) throw Error(ErrorKind::RetryExhausted, "Cayley transform kept hitting singular 1 + Z");
  }
  if (g.nu != 1) throw Error(ErrorKind::NotIsometry, "random Cayley word left U(V)");
  return g;
}

SimilitudeElement similitude_with_factor(const SplitSkewHermitianSpace& w, const Rational& y) {
  return d_scale(w, y);
}

bool find_norm_preimage(const Rational& y, const Rational& delta, long search_bound, QuadExt& out) {
  const auto values = small_rationals(search_bound);
  for (const auto& a : values)
    for (const auto& b : values) {
      QuadExt z(a, b, delta);
      if (!z.is_zero() && z.norm() == y) {
        out = z;
        return true;
      }
    }
  return false;
}

SimilitudeElement similitude_with_factor(const HermitianSpace& v, const Rational& y, long search_bound) {
  if (is_zero(y)) throw Error(ErrorKind::ZeroScale, "similitude factor 0");
  const std::size_t m = v.m();
  if (y == 1) return identity_element(v);
  QuadExt z;
  if (find_norm_preimage(y, v.delta(), search_bound, z)) {
    MatrixE g = MatrixE::identity(m) * z;
    return make_similitude(std::move(g), v);
  }
  if (m % 2 != 0 || !v.is_diagonal()) {
    throw Error(ErrorKind::NotFound, "no similitude with factor " + to_string(y) + " within the search bound");
  }
  // Pair up coordinates: columns w1 = (u, w), w2 = (b conj(w) / a, -conj(u))
  // satisfy (w1, w1) = y a, (w2, w2) = y b, (w1, w2) = 0 whenever
  // N(u) + (b/a) N(w) = y.
  const auto table = norm_table(v.delta(), search_bound);
  MatrixE g(m, m);
  for (std::size_t k = 0; k < m; k += 2) {
    const Rational a = v.gram()(k, k).re();
    const Rational b = v.gram()(k + 1, k + 1).re();
    bool found = false;
    for (const auto& [n1, u] : table) {
      Rational t = (y - n1) * a / b;
      auto it = table.find(t);
      if (it == table.end()) continue;
      const QuadExt& wv = it->second;
      g(k, k) = u;
      g(k + 1, k) = wv;
      g(k, k + 1) = wv.conj() * QuadExt(b / a);
      g(k + 1, k + 1) = -u.conj();
      found = true;
      break;
    }
    if (!found) {
      throw Error(ErrorKind::NotFound, "no block similitude with factor " + to_string(y) + " within the search bound");
    }
  }
  SimilitudeElement out = make_similitude(std::move(g), v);
  if (out.nu != y) throw Error(ErrorKind::NotSimilitude, "block construction produced the wrong factor");
  return out;
}

bool same_norm_class(const QuadExt& x1, const QuadExt& x2, const LocalContext& ctx) {
  if (x1.is_zero() || x2.is_zero()) throw Error(ErrorKind::ZeroArgument, "norm class of 0");
  QuadExt q = x1 / x2;
  return q.in_base_field() && epsilon_EF(q.re(), ctx).is_one();
}

Mu8 epsilon_space(const HermitianSpace& v, const LocalContext& ctx) {
  const std::size_t m = v.m();
  Rational sign = ((m * (m - 1) / 2) % 2 == 0) ? Rational(1) : Rational(-1);
  return epsilon_EF(sign * v.det(), ctx);
}

bool in_H_plus(const SimilitudeElement& h, const HermitianSpace& v, const LocalContext& ctx) {
  if (v.m() % 2 == 0) return true;
  return epsilon_EF(h.nu, ctx).is_one();
}

}  // namespace metacocycle
