#include <gtest/gtest.h>

#include "metacocycle/error.hpp"
#include "metacocycle/hermitian.hpp"

using namespace metacocycle;

namespace {

std::vector<LocalContext> contexts() {
  return {LocalContext(3, -1), LocalContext(5, 2), LocalContext(7, -1), LocalContext(3, 3)};
}

SimilitudeElement random_similitude(const SplitSkewHermitianSpace& w, Rng& rng, std::size_t len = 4) {
  return d_scale(w, draw_nonzero_rational(rng, 5)) * random_unitary(w, rng, len);
}

MatrixE random_invertible_e(Rng& rng, std::size_t n, const Rational& delta) {
  return detail::random_invertible(rng, n, QuadExt::generator(delta));
}

}  // namespace

TEST(HermitianSpace, Validation) {
  const Rational d(-1);
  EXPECT_NO_THROW(HermitianSpace::diagonal({1, 2}, d));
  MatrixE bad(2, 2, {QuadExt(1), QuadExt(0, 1, d), QuadExt(0, 1, d), QuadExt(1)});
  EXPECT_THROW(HermitianSpace(bad, d), Error);
  EXPECT_THROW(HermitianSpace::diagonal({1, 0}, d), Error);
  MatrixE off(2, 2, {QuadExt(1), QuadExt(0, 1, d), QuadExt(0, -1, d), QuadExt(3)});
  EXPECT_EQ(HermitianSpace(off, d).det(), Rational(2));
}

TEST(SimilitudeFactor, Examples) {
  const Rational d(-1);
  SplitSkewHermitianSpace w(2, d);
  EXPECT_EQ(similitude_factor(MatrixE::identity(4), w), 1);
  EXPECT_EQ(similitude_factor(d_scale(w, Rational(5, 3)).mat, w), Rational(5, 3));
  HermitianSpace v = HermitianSpace::diagonal({1, 2, 5}, d);
  QuadExt z(2, 3, d);
  EXPECT_EQ(similitude_factor(MatrixE::identity(3) * z, v), z.norm());
  EXPECT_THROW(similitude_factor(MatrixE::identity(3), w), Error);
  MatrixE notsim = MatrixE::identity(4);
  notsim(0, 0) = QuadExt(2);
  EXPECT_THROW(similitude_factor(notsim, w), Error);
  // delta * 1 scales the skew-hermitian form by N(delta), which is fine; but
  // diag(delta, 1) on V is no similitude.
  MatrixE twisted = MatrixE::identity(3);
  twisted(0, 0) = QuadExt(2);
  EXPECT_THROW(similitude_factor(twisted, v), Error);
}

TEST(Tau, Examples) {
  SplitSkewHermitianSpace w(1, Rational(-1));
  EXPECT_EQ(tau(w, 0).mat, MatrixE::identity(2));
  MatrixE t = tau(w, 1).mat;
  // e_1 tau = -e*_1, e*_1 tau = e_1 (row 0 is the image of e_1)
  EXPECT_EQ(t, MatrixE(2, 2, {QuadExt(0), QuadExt(-1), QuadExt(1), QuadExt(0)}));
  SplitSkewHermitianSpace w3(3, Rational(-1));
  for (std::size_t j = 0; j <= 3; ++j) {
    EXPECT_EQ(similitude_factor(tau(w3, j).mat, w3), 1);
    MatrixE sq = tau(w3, j).mat * tau(w3, j).mat;
    for (std::size_t i = 0; i < 3; ++i) {
      QuadExt want = i < j ? QuadExt(-1) : QuadExt(1);
      EXPECT_EQ(sq(i, i), want);
      EXPECT_EQ(sq(3 + i, 3 + i), want);
    }
  }
  EXPECT_THROW(tau(w3, 4), Error);
}

TEST(Bruhat, ParabolicAndWeylExamples) {
  const Rational d(2);
  SplitSkewHermitianSpace w(2, d);
  Rng rng(21);
  MatrixE a = random_invertible_e(rng, 2, d);
  MatrixE levi = block_diag(a, inverse(a.adjoint()));
  BruhatData bd = bruhat_decompose(make_similitude(levi, w), w);
  EXPECT_EQ(bd.j, 0u);
  EXPECT_EQ(bd.x_class, det(inverse(a.adjoint())));
  for (std::size_t j = 0; j <= 2; ++j) {
    BruhatData t = bruhat_decompose(tau(w, j), w);
    EXPECT_EQ(t.j, j);
    EXPECT_TRUE(t.x_class.in_base_field());
    LocalContext ctx(5, d);
    EXPECT_TRUE(same_norm_class(t.x_class, QuadExt(1), ctx) || same_norm_class(t.x_class, QuadExt(-1), ctx));
  }
  EXPECT_THROW(bruhat_decompose(d_scale(w, 3), w), Error);
}

TEST(BruhatProperty, RoundTripAndWellDefined) {
  Rng rng(22);
  for (const auto& ctx : contexts()) {
    for (std::size_t r = 1; r <= 3; ++r) {
      SplitSkewHermitianSpace w(r, ctx.delta());
      for (int i = 0; i < 25; ++i) {
        SimilitudeElement h = random_unitary(w, rng);
        BruhatData a = bruhat_decompose(h, w);
        BruhatData b = bruhat_decompose(h, w, &rng);
        ASSERT_EQ(a.p1 * tau(w, a.j) * a.p2, h);
        ASSERT_EQ(b.p1 * tau(w, b.j) * b.p2, h);
        ASSERT_TRUE(in_siegel_parabolic(a.p1.mat) && in_siegel_parabolic(a.p2.mat));
        ASSERT_EQ(a.j, bruhat_cell(h.mat));
        ASSERT_EQ(a.j, b.j);
        ASSERT_TRUE(same_norm_class(a.x_class, b.x_class, ctx)) << a.x_class.str() << " vs " << b.x_class.str();
        SimilitudeElement rebuilt = a.p1 * tau(w, a.j) * a.p2;
        ASSERT_EQ(bruhat_decompose(rebuilt, w).j, a.j);
      }
    }
  }
}

TEST(BruhatProperty, RandomCellsAreAllReached) {
  Rng rng(23);
  SplitSkewHermitianSpace w(3, Rational(-1));
  std::vector<int> hits(4, 0);
  for (int i = 0; i < 200; ++i) ++hits[bruhat_decompose(random_unitary(w, rng), w).j];
  for (int c : hits) EXPECT_GT(c, 0);
}

TEST(ConjByD, Examples) {
  const Rational d(-1);
  LocalContext ctx(3, d);
  SplitSkewHermitianSpace w(1, d);
  Rng rng(24);
  SimilitudeElement h = random_unitary(w, rng);
  EXPECT_EQ(conj_by_d(h, 1, w), h);
  EXPECT_THROW(conj_by_d(h, 0, w), Error);
  for (Rational y : {Rational(3), Rational(-1), Rational(2, 3), Rational(6)}) {
    BruhatData t = bruhat_decompose(tau(w, 1), w);
    BruhatData ty = bruhat_decompose(conj_by_d(tau(w, 1), y, w), w);
    EXPECT_TRUE(same_norm_class(ty.x_class, t.x_class * QuadExt(y), ctx));
  }
}

TEST(ConjByDProperty, ScalingOfX) {
  Rng rng(25);
  int count = 0;
  for (const auto& ctx : contexts()) {
    for (std::size_t r = 1; r <= 3; ++r) {
      SplitSkewHermitianSpace w(r, ctx.delta());
      for (int i = 0; i < 25; ++i, ++count) {
        SimilitudeElement h = random_unitary(w, rng);
        Rational y = draw_nonzero_rational(rng, 9);
        SimilitudeElement hy = conj_by_d(h, y, w);
        ASSERT_EQ(similitude_factor(hy.mat, w), 1);
        BruhatData a = bruhat_decompose(h, w), b = bruhat_decompose(hy, w, &rng);
        ASSERT_EQ(a.j, b.j);
        QuadExt scaled = a.x_class * QuadExt(pow(y, static_cast<long>(a.j)));
        ASSERT_TRUE(same_norm_class(b.x_class, scaled, ctx));
      }
    }
  }
  EXPECT_GE(count, 300);
}

TEST(ProjectIsometry, Examples) {
  SplitSkewHermitianSpace w(2, Rational(2));
  Rng rng(26);
  SimilitudeElement h = random_unitary(w, rng);
  EXPECT_EQ(project_isometry(h, w), h);
  EXPECT_EQ(project_isometry(d_scale(w, 7), w), identity_element(w));
  SimilitudeElement g = random_similitude(w, rng);
  SimilitudeElement g1 = project_isometry(g, w);
  EXPECT_EQ(similitude_factor(g1.mat, w), 1);
  EXPECT_EQ(d_scale(w, g.nu) * g1, g);
}

TEST(ProjectIsometryProperty, ProductRule) {
  Rng rng(27);
  for (std::size_t r = 1; r <= 3; ++r) {
    SplitSkewHermitianSpace w(r, Rational(-1));
    for (int i = 0; i < 50; ++i) {
      SimilitudeElement h = random_similitude(w, rng), h2 = random_similitude(w, rng);
      SimilitudeElement lhs = project_isometry(h * h2, w);
      SimilitudeElement rhs = conj_by_d(project_isometry(h, w), h2.nu, w) * project_isometry(h2, w);
      ASSERT_EQ(lhs, rhs);
    }
  }
}

TEST(SimilitudeProperty, NuIsMultiplicative) {
  Rng rng(28);
  SplitSkewHermitianSpace w(2, Rational(-1));
  HermitianSpace v = HermitianSpace::diagonal({1, 2, -3}, Rational(-1));
  for (int i = 0; i < 500; ++i) {
    SimilitudeElement a = random_similitude(w, rng, 2), b = random_similitude(w, rng, 2);
    ASSERT_EQ(similitude_factor((a * b).mat, w), a.nu * b.nu);
    QuadExt z1 = draw_nonzero_quad_ext(rng, Rational(-1), 4), z2 = draw_nonzero_quad_ext(rng, Rational(-1), 4);
    SimilitudeElement g = random_unitary(v, rng, 1) * make_similitude(MatrixE::identity(3) * z1, v);
    SimilitudeElement g2 = make_similitude(MatrixE::identity(3) * z2, v) * random_unitary(v, rng, 1);
    ASSERT_EQ(similitude_factor((g * g2).mat, v), g.nu * g2.nu);
  }
}

TEST(RandomUnitary, Examples) {
  Rng rng(29);
  SplitSkewHermitianSpace w(2, Rational(-1));
  HermitianSpace v = HermitianSpace::diagonal({1, 1, 3}, Rational(-1));
  EXPECT_EQ(random_unitary(w, rng, 0), identity_element(w));
  EXPECT_EQ(random_unitary(v, rng, 0), identity_element(v));
  EXPECT_EQ(cayley(v, MatrixE(3, 3)), identity_element(v));
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(similitude_factor(random_unitary(w, rng).mat, w), 1);
    EXPECT_EQ(similitude_factor(random_unitary(v, rng).mat, v), 1);
  }
  EXPECT_THROW(cayley(v, MatrixE::identity(3)), Error);
}

TEST(SimilitudeWithFactor, Examples) {
  const Rational d(-1);
  HermitianSpace v = HermitianSpace::diagonal({1, 1}, d);
  EXPECT_EQ(similitude_with_factor(v, 1, 6), identity_element(v));
  SplitSkewHermitianSpace w(2, d);
  EXPECT_EQ(similitude_with_factor(w, 5), d_scale(w, 5));
  Rng rng(30);
  for (int i = 0; i < 20; ++i) {
    QuadExt z = draw_nonzero_quad_ext(rng, d, 3);
    SimilitudeElement g = similitude_with_factor(v, z.norm(), 6);
    EXPECT_EQ(g.nu, z.norm());
  }
  // 3 is not a sum of two rational squares, so no scalar works; the block
  // construction finds one since 3 is a sum of four.
  QuadExt dummy;
  EXPECT_FALSE(find_norm_preimage(3, d, 6, dummy));
  SimilitudeElement g3 = similitude_with_factor(v, 3, 6);
  EXPECT_EQ(similitude_factor(g3.mat, v), 3);
  HermitianSpace v2 = HermitianSpace::diagonal({1, 1}, Rational(2));
  EXPECT_EQ(similitude_with_factor(v2, -1, 6).nu, -1);
  HermitianSpace odd = HermitianSpace::diagonal({1}, d);
  EXPECT_THROW(similitude_with_factor(odd, 3, 6), Error);
  EXPECT_THROW(similitude_with_factor(v, 0, 6), Error);
}

TEST(SimilitudeWithFactorProperty, EvenDimensionReachesAllClasses) {
  for (const auto& ctx : contexts()) {
    HermitianSpace v = HermitianSpace::diagonal({1, -ctx.delta(), 1, 2}, ctx.delta());
    const Rational p(ctx.p());
    const Rational u(ctx.nonresidue());
    std::vector<Rational> ys{1, u, p, u * p};
    // Over Q a negative factor is impossible when every norm is positive.
    if (sgn(ctx.delta()) > 0) ys.insert(ys.end(), {Rational(-1), -p});
    for (const Rational& y : ys) {
      SimilitudeElement g = similitude_with_factor(v, y, 8);
      ASSERT_EQ(similitude_factor(g.mat, v), y);
    }
  }
}

TEST(EpsilonSpace, Examples) {
  LocalContext ctx(3, -1);
  EXPECT_TRUE(epsilon_space(HermitianSpace::diagonal({1}, -1), ctx).is_one());
  EXPECT_EQ(epsilon_space(HermitianSpace::diagonal({3}, -1), ctx), Mu8::minus_one());
  // m = 2 brings the sign -1: det(-1 * diag(1, 1)) = -1 is a norm locally.
  EXPECT_TRUE(epsilon_space(HermitianSpace::diagonal({1, 1}, -1), ctx).is_one());
  EXPECT_EQ(epsilon_space(HermitianSpace::diagonal({1, 3}, -1), ctx), Mu8::minus_one());
}

TEST(EpsilonSpaceProperty, CongruenceInvariant) {
  Rng rng(31);
  for (const auto& ctx : contexts()) {
    for (int i = 0; i < 40; ++i) {
      std::size_t m = static_cast<std::size_t>(draw_int(rng, 1, 3));
      std::vector<Rational> coeffs;
      for (std::size_t k = 0; k < m; ++k) coeffs.push_back(draw_nonzero_rational(rng, 9));
      HermitianSpace v = HermitianSpace::diagonal(coeffs, ctx.delta());
      MatrixE c = random_invertible_e(rng, m, ctx.delta());
      HermitianSpace v2(c.adjoint() * v.gram() * c, ctx.delta());
      ASSERT_EQ(epsilon_space(v, ctx), epsilon_space(v2, ctx));
    }
  }
}

TEST(HPlus, Examples) {
  LocalContext ctx(3, -1);
  SplitSkewHermitianSpace w(1, -1);
  HermitianSpace even = HermitianSpace::diagonal({1, 1}, -1);
  HermitianSpace odd = HermitianSpace::diagonal({1}, -1);
  EXPECT_TRUE(in_H_plus(d_scale(w, 3), even, ctx));
  EXPECT_TRUE(in_H_plus(d_scale(w, QuadExt(2, 5, -1).norm()), odd, ctx));
  EXPECT_FALSE(in_H_plus(d_scale(w, 3), odd, ctx));
}

TEST(HPlusProperty, HalfOfSquareClassesForOddM) {
  for (const auto& ctx : contexts()) {
    SplitSkewHermitianSpace w(2, ctx.delta());
    HermitianSpace odd = HermitianSpace::diagonal({1, 2, 5}, ctx.delta());
    HermitianSpace even = HermitianSpace::diagonal({1, 2}, ctx.delta());
    const Rational p(ctx.p()), u(ctx.nonresidue());
    int passed = 0;
    for (const Rational& y : std::vector<Rational>{1, u, p, u * p}) {
      SimilitudeElement h = d_scale(w, y);
      bool in = in_H_plus(h, odd, ctx);
      ASSERT_EQ(in, epsilon_EF(y, ctx).is_one());
      ASSERT_TRUE(in_H_plus(h, even, ctx));
      passed += in ? 1 : 0;
    }
    EXPECT_EQ(passed, 2);
  }
}
