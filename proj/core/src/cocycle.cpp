#include "metacocycle/cocycle.hpp"

#include "metacocycle/error.hpp"

namespace metacocycle {

namespace {

QuadSpaceF nondegenerate_part(const MatrixF& gram) {
  MatrixF sym = (gram + gram.transpose()) * Rational(1, 2);
  return diagonalize(sym).space;
}

void require_isometry(const GSpElement& s) {
  if (s.nu != 1) throw Error(ErrorKind::NotIsometry, "expected an element of Sp(BW)");
}

}  // namespace

std::string LerayConvention::name() const {
  return std::string(form == Form::Kernel ? "kernel" : "kashiwara") + "*" + std::to_string(scale);
}

std::vector<LerayConvention> leray_candidates() {
  std::vector<LerayConvention> out;
  for (auto f : {LerayConvention::Form::Kernel, LerayConvention::Form::Kashiwara})
    for (long s : {1L, -1L, 2L, -2L}) out.push_back({f, s});
  return out;
}

QuadSpaceF leray_kernel_form(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3, const DoubledSpace& d) {
  const std::size_t h = d.mn();
  const MatrixF k = left_kernel(vstack(vstack(l1.basis(), l2.basis()), l3.basis()));
  if (k.rows() == 0) return QuadSpaceF();
  const MatrixF x1 = k.block(0, 0, k.rows(), h) * l1.basis();
  const MatrixF x2 = k.block(0, h, k.rows(), h) * l2.basis();
  return nondegenerate_part(x1 * d.gram() * x2.transpose());
}

QuadSpaceF leray_kashiwara_form(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3,
                                const DoubledSpace& d) {
  const std::size_t h = d.mn();
  const MatrixF j = d.gram();
  const MatrixF* b[3] = {&l1.basis(), &l2.basis(), &l3.basis()};
  MatrixF k(3 * h, 3 * h);
  for (int i = 0; i < 3; ++i) {
    const int n = (i + 1) % 3;
    k.set_block(i * h, n * h, *b[i] * j * b[n]->transpose());
  }
  return nondegenerate_part(k);
}

QuadSpaceF leray_direct_form(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3, const DoubledSpace& d) {
  const std::size_t h = d.mn();
  const MatrixF both = vstack(l1.basis(), l3.basis());
  if (is_zero(det(both))) throw Error(ErrorKind::DegenerateForm, "L1 and L3 are not transverse");
  const MatrixF coeffs = l2.basis() * inverse(both);
  const MatrixF v1 = coeffs.block(0, 0, h, h) * l1.basis();
  const MatrixF v3 = coeffs.block(0, h, h, h) * l3.basis();
  return nondegenerate_part(v1 * d.gram() * v3.transpose());
}

QuadSpaceF leray_invariant(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3, const DoubledSpace& d,
                           const LerayConvention& conv) {
  QuadSpaceF q = conv.form == LerayConvention::Form::Kernel ? leray_kernel_form(l1, l2, l3, d)
                                                            : leray_kashiwara_form(l1, l2, l3, d);
  return q.scaled(Rational(conv.scale));
}

Mu8 rao_cocycle(const GSpElement& s1, const GSpElement& s2, const DoubledSpace& d, const LocalContext& ctx,
                const LerayConvention& conv) {
  require_isometry(s1);
  require_isometry(s2);
  const Lagrangian by = Lagrangian::by(d);
  const Lagrangian l2 = lagrangian_image(by, inverse(s2), d);
  const Lagrangian l3 = lagrangian_image(by, s1, d);
  return weil_index_quadspace(leray_invariant(by, l2, l3, d, conv), ctx);
}

Mu8 mu(const Rational& y, const GSpElement& s, const DoubledSpace& d, const LocalContext& ctx) {
  if (is_zero(y)) throw Error(ErrorKind::ZeroScale, "mu(0, s)");
  SpBruhatData b = bruhat_sp(s, d);
  return hilbert_symbol(b.x_class, y, ctx) * gamma_eta(y, ctx).pow(static_cast<long>(b.j));
}

Mu8 big_cocycle_C(const GSpElement& g, const GSpElement& g2, const DoubledSpace& d, const LocalContext& ctx,
                  const LerayConvention& conv) {
  const GSpElement g1 = project_isometry(g, d);
  const GSpElement g21 = project_isometry(g2, d);
  return rao_cocycle(conj_by_d(g1, g2.nu, d), g21, d, ctx, conv) * mu(g2.nu, g1, d, ctx);
}

QuadSpaceF rv_space(const HermitianSpace& v) {
  const std::size_t m = v.m();
  const QuadExt delta = QuadExt::generator(v.delta());
  MatrixF gram(2 * m, 2 * m);
  for (std::size_t a = 0; a < 2 * m; ++a)
    for (std::size_t b = 0; b < 2 * m; ++b) {
      const QuadExt ca = a < m ? QuadExt(1) : delta, cb = b < m ? QuadExt(1) : delta;
      gram(a, b) = (ca.conj() * v.gram()(a % m, b % m) * cb).trace() / 2;
    }
  Diagonalization dg = diagonalize(gram);
  if (dg.radical_dim != 0) throw Error(ErrorKind::DegenerateForm, "RV is degenerate");
  return dg.space;
}

QuadSpaceF rv_space_closed_form(const HermitianSpace& v) {
  if (!v.is_diagonal()) throw Error(ErrorKind::InvalidContext, "closed form needs a diagonal Gram matrix");
  std::vector<Rational> diag;
  for (std::size_t k = 0; k < v.m(); ++k) {
    const Rational a = v.gram()(k, k).re();
    diag.push_back(a);
    diag.push_back(-v.delta() * a);
  }
  return QuadSpaceF(std::move(diag));
}

CharacterChi::CharacterChi(std::size_t m, const LocalContext& ctx) : trivial_(m % 2 == 0), p_(ctx.p()) {
  if (!trivial_ && !ctx.unramified()) {
    throw Error(ErrorKind::ChiUnavailable, "no concrete chi for odd m over a ramified extension");
  }
}

Mu8 CharacterChi::operator()(const QuadExt& x) const {
  if (x.is_zero()) throw Error(ErrorKind::ZeroArgument, "chi(0)");
  if (trivial_) return Mu8::one();
  const long v = valuation(x.norm(), p_);
  return Mu8::sign((v / 2) % 2 != 0);
}

Mu8 beta_V_chi(const SimilitudeElement& h, const DoubledSpace& d, const CharacterChi& chi, const LocalContext& ctx,
               Rng* randomize) {
  BruhatData b = bruhat_decompose(h, d.w(), randomize);
  const Mu8 rv = weil_index_quadspace(rv_space(d.v()), ctx);
  return chi(b.x_class) * rv.inverse().pow(static_cast<long>(b.j));
}

Mu8 commutator_value(const SimilitudeElement& g, const SimilitudeElement& h, const DoubledSpace& d,
                     const LocalContext& ctx, const LerayConvention& conv) {
  const GSpElement a = iota_W(g, d), b = iota_V(h, d);
  return big_cocycle_C(a, b, d, ctx, conv) / big_cocycle_C(b, a, d, ctx, conv);
}

Mu8 commutator_formula(const SimilitudeElement& g, const SimilitudeElement& h, const DoubledSpace& d,
                       const LocalContext& ctx) {
  const long m = static_cast<long>(d.m()), r = static_cast<long>(d.r());
  const BruhatData b = bruhat_decompose(project_isometry(h, d.w()), d.w());
  const Rational nu_inv = 1 / g.nu;
  const Mu8 top = hilbert_symbol(g.nu, h.nu, ctx).pow(m * r);
  const Mu8 bottom = hilbert_symbol(b.x_class.norm(), nu_inv, ctx).pow(m) *
                     hilbert_symbol(ctx.delta(), nu_inv, ctx).pow(m * static_cast<long>(b.j));
  return top / bottom;
}

LerayCalibration calibrate_leray(std::uint64_t seed, int pairs, int triples_per_config) {
  LerayCalibration out;
  Rng rng(seed);
  {
    const LocalContext ctx(3, -1);
    const DoubledSpace d(HermitianSpace::diagonal({1}, -1), SplitSkewHermitianSpace(1, -1));
    const CharacterChi chi(1, ctx);
    std::vector<std::pair<SimilitudeElement, SimilitudeElement>> battery;
    for (int i = 0; i < pairs; ++i) {
      SimilitudeElement h = random_unitary(d.w(), rng);
      SimilitudeElement h2 = random_unitary(d.w(), rng);
      battery.emplace_back(std::move(h), std::move(h2));
    }
    for (const auto& conv : leray_candidates()) {
      bool ok = true;
      for (const auto& [h, h2] : battery) {
        const Mu8 lhs = rao_cocycle(iota_V(h, d), iota_V(h2, d), d, ctx, conv);
        const Mu8 rhs = beta_V_chi(h, d, chi, ctx).inverse() * beta_V_chi(h2, d, chi, ctx).inverse() *
                        beta_V_chi(h * h2, d, chi, ctx);
        if (!(lhs == rhs)) {
          ok = false;
          break;
        }
      }
      if (ok) out.relation_pass.push_back(conv);
    }
  }

  // Second stage: cocycle identity for C on generic triples.
  struct Triple {
    std::size_t config;
    GSpElement s[3];
  };
  const LocalContext ctxs[2] = {LocalContext(3, -1), LocalContext(5, 2)};
  const DoubledSpace spaces[2] = {
      DoubledSpace(HermitianSpace::diagonal({1}, -1), SplitSkewHermitianSpace(1, -1)),
      DoubledSpace(HermitianSpace::diagonal({1}, 2), SplitSkewHermitianSpace(1, 2))};
  std::vector<Triple> triples;
  for (std::size_t c = 0; c < 2; ++c)
    for (int i = 0; i < triples_per_config; ++i) {
      Triple t{c, {}};
      for (auto& s : t.s) {
        s = random_symplectic(spaces[c], rng, 4, 6);
        if (draw_bool(rng)) s = s * d_big(draw_nonzero_rational(rng, 6), spaces[c]);
      }
      triples.push_back(std::move(t));
    }
  auto values = [&](const LerayConvention& conv) {
    std::vector<Mu8> v;
    for (const auto& t : triples) {
      const DoubledSpace& d = spaces[t.config];
      const LocalContext& ctx = ctxs[t.config];
      v.push_back(big_cocycle_C(t.s[0], t.s[1], d, ctx, conv));
      v.push_back(big_cocycle_C(t.s[0] * t.s[1], t.s[2], d, ctx, conv));
      v.push_back(big_cocycle_C(t.s[0], t.s[1] * t.s[2], d, ctx, conv));
      v.push_back(big_cocycle_C(t.s[1], t.s[2], d, ctx, conv));
    }
    return v;
  };
  std::vector<std::vector<Mu8>> passing_values;
  for (const auto& conv : out.relation_pass) {
    std::vector<Mu8> v = values(conv);
    bool ok = true;
    for (std::size_t i = 0; i < v.size(); i += 4) ok = ok && v[i] * v[i + 1] == v[i + 2] * v[i + 3];
    if (ok) {
      out.passing.push_back(conv);
      passing_values.push_back(std::move(v));
    }
  }
  if (out.passing.empty()) throw Error(ErrorKind::CalibrationMismatch, "no Leray convention passes the battery");
  for (const auto& v : passing_values) {
    if (v != passing_values.front()) {
      throw Error(ErrorKind::CalibrationMismatch, "surviving Leray conventions disagree on the battery");
    }
  }
  out.selected = out.passing.front();
  return out;
}

}  // namespace metacocycle
