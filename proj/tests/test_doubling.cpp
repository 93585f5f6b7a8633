#include <gtest/gtest.h>

#include "metacocycle/doubling.hpp"
#include "metacocycle/error.hpp"

using namespace metacocycle;

namespace {

struct Config {
  std::vector<Rational> v;
  std::size_t r;
  Rational delta;
};

std::vector<Config> configs() {
  return {{{1}, 1, -1}, {{1, 2}, 1, 2}, {{3}, 2, -1}, {{1, -2, 5}, 1, 2}, {{1, 3}, 2, -1}};
}

DoubledSpace make(const Config& c) {
  return DoubledSpace(HermitianSpace::diagonal(c.v, c.delta), SplitSkewHermitianSpace(c.r, c.delta));
}

SimilitudeElement random_g(const DoubledSpace& d, Rng& rng) {
  QuadExt z = draw_nonzero_quad_ext(rng, d.v().delta(), 3);
  return random_unitary(d.v(), rng, 1) * make_similitude(MatrixE::identity(d.m()) * z, d.v());
}

SimilitudeElement random_h(const DoubledSpace& d, Rng& rng, std::size_t len = 3) {
  return d_scale(d.w(), draw_nonzero_rational(rng, 4)) * random_unitary(d.w(), rng, len);
}

MatrixE random_z(const DoubledSpace& d, Rng& rng) {
  MatrixE z(d.m(), 2 * d.r());
  for (std::size_t k = 0; k < z.rows(); ++k)
    for (std::size_t l = 0; l < z.cols(); ++l) z(k, l) = draw_quad_ext(rng, d.v().delta(), 4);
  return z;
}

}  // namespace

TEST(DoubledSpace, SmallestExample) {
  DoubledSpace d(HermitianSpace::diagonal({1}, -1), SplitSkewHermitianSpace(1, -1));
  EXPECT_EQ(d.mn(), 2u);
  EXPECT_EQ(d.gram(), standard_form<Rational>(2));
  // raw pairings: <E_00, E_01> = 1, <delta E_00, delta E_01> = -Delta.
  EXPECT_EQ(d.raw_gram()(0, 2), 1);
  EXPECT_EQ(d.raw_gram()(1, 3), 1);
  EXPECT_EQ(d.raw_gram()(0, 3), 0);
  EXPECT_EQ(d.change() * d.raw_gram() * d.change().transpose(), d.gram());
}

TEST(DoubledSpaceProperty, AlternatingAndCompatible) {
  Rng rng(41);
  for (const auto& c : configs()) {
    DoubledSpace d = make(c);
    for (int i = 0; i < 30; ++i) {
      MatrixE a = random_z(d, rng), b = random_z(d, rng);
      ASSERT_EQ(d.pairing(a, b), -d.pairing(b, a));
      ASSERT_EQ((d.coords(a) * d.gram() * d.coords(b).transpose())(0, 0), d.pairing(a, b));
      ASSERT_EQ(d.from_coords(d.coords(a)), a);
    }
    const std::size_t h = d.mn();
    EXPECT_TRUE(d.raw_gram().block(0, 0, h, h).is_zero());
    EXPECT_TRUE(d.raw_gram().block(h, h, h, h).is_zero());
  }
}

TEST(Iota, Examples) {
  Rng rng(42);
  DoubledSpace d = make(configs()[1]);
  EXPECT_EQ(iota(identity_element(d.v()), identity_element(d.w()), d), identity_element(d));
  SimilitudeElement g = random_g(d, rng);
  SimilitudeElement h = random_h(d, rng);
  EXPECT_EQ(iota_W(g, d).nu, 1 / g.nu);
  EXPECT_EQ(iota_V(h, d).nu, h.nu);
  EXPECT_EQ(iota(g, h, d).nu, h.nu / g.nu);
  // action on an explicit tensor
  MatrixE z = random_z(d, rng);
  MatrixE image = inverse(g.mat) * z * h.mat;
  EXPECT_EQ(d.coords(z) * iota(g, h, d).mat, d.coords(image));
}

TEST(IotaProperty, Homomorphism) {
  Rng rng(43);
  int count = 0;
  for (const auto& c : configs()) {
    DoubledSpace d = make(c);
    for (int i = 0; i < 60; ++i, ++count) {
      SimilitudeElement g = random_g(d, rng), g2 = random_g(d, rng);
      SimilitudeElement h = random_h(d, rng, 2), h2 = random_h(d, rng, 2);
      ASSERT_EQ(iota(g * g2, h * h2, d), iota(g, h, d) * iota(g2, h2, d));
      ASSERT_EQ(iota_V(h, d) * iota_W(g, d), iota_W(g, d) * iota_V(h, d));
    }
  }
  EXPECT_GE(count, 300);
}

TEST(IotaProperty, IsometryProjections) {
  Rng rng(44);
  for (const auto& c : configs()) {
    DoubledSpace d = make(c);
    for (int i = 0; i < 20; ++i) {
      SimilitudeElement h = random_h(d, rng);
      ASSERT_EQ(project_isometry(iota_V(h, d), d), iota_V(project_isometry(h, d.w()), d));
      SimilitudeElement g = random_g(d, rng);
      GSpElement s1 = project_isometry(iota_W(g, d), d);
      ASSERT_TRUE(in_siegel_parabolic(s1.mat));
      SpBruhatData b = bruhat_sp(s1, d);
      ASSERT_EQ(b.j, 0u);
      Rational want = pow(det(g.mat).norm(), static_cast<long>(d.r()));
      ASSERT_TRUE(is_rational_square(b.x_class / want)) << to_string(b.x_class) << " vs " << to_string(want);
    }
  }
}

TEST(DBig, Examples) {
  Rng rng(45);
  DoubledSpace d = make(configs()[0]);
  EXPECT_EQ(d_big(1, d), identity_element(d));
  EXPECT_EQ(similitude_factor(d_big(Rational(7, 2), d).mat, d), Rational(7, 2));
  EXPECT_THROW(d_big(0, d), Error);
  GSpElement s = iota(random_g(d, rng), random_h(d, rng), d);
  EXPECT_EQ(similitude_factor(project_isometry(s, d).mat, d), 1);
  EXPECT_EQ(similitude_factor(conj_by_d(project_isometry(s, d), 5, d).mat, d), 1);
}

TEST(BruhatSp, Examples) {
  Rng rng(46);
  DoubledSpace d = make(configs()[1]);
  SpBruhatData b = bruhat_sp(conj_by_d(project_isometry(iota_W(random_g(d, rng), d), d), 3, d), d);
  EXPECT_EQ(b.j, 0u);
  EXPECT_THROW(bruhat_sp(d_big(3, d), d), Error);
  EXPECT_TRUE(is_rational_square(Rational(9, 4)));
  EXPECT_FALSE(is_rational_square(Rational(-1)));
  EXPECT_FALSE(is_rational_square(Rational(2)));
}

TEST(BruhatSpProperty, RoundTripAndIotaVCell) {
  Rng rng(47);
  for (const auto& c : configs()) {
    DoubledSpace d = make(c);
    const Rational m(static_cast<long>(d.m()));
    for (int i = 0; i < 20; ++i) {
      SimilitudeElement h = random_unitary(d.w(), rng);
      BruhatData bh = bruhat_decompose(h, d.w());
      GSpElement s = iota_V(h, d);
      SpBruhatData a = bruhat_sp(s, d), b = bruhat_sp(s, d, &rng);
      ASSERT_EQ(a.p1 * tau_big(a.j, d) * a.p2, s);
      ASSERT_EQ(b.p1 * tau_big(b.j, d) * b.p2, s);
      ASSERT_EQ(a.j, b.j);
      ASSERT_TRUE(is_rational_square(a.x_class / b.x_class));
      ASSERT_EQ(a.j, 2 * d.m() * bh.j);
      const long mm = static_cast<long>(d.m()), jj = static_cast<long>(bh.j);
      Rational want = pow(bh.x_class.norm(), mm) * pow(-d.v().delta(), mm * jj);
      ASSERT_TRUE(is_rational_square(a.x_class / want)) << to_string(a.x_class) << " vs " << to_string(want);
    }
  }
}

TEST(BruhatSpProperty, CellStableUnderBasisChange) {
  Rng rng(48);
  for (const auto& c : configs()) {
    DoubledSpace d = make(c);
    MatrixF x_change = detail::random_invertible(rng, d.mn(), Rational(0));
    DoubledSpace e(d.v(), d.w(), x_change);
    for (int i = 0; i < 10; ++i) {
      SimilitudeElement h = random_unitary(d.w(), rng);
      ASSERT_EQ(bruhat_sp(iota_V(h, d), d).j, bruhat_sp(iota_V(h, e), e).j);
    }
  }
}

TEST(Lagrangian, Examples) {
  Rng rng(49);
  DoubledSpace d = make(configs()[2]);
  Lagrangian by = Lagrangian::by(d), bx = Lagrangian::bx(d);
  EXPECT_EQ(lagrangian_image(by, identity_element(d), d), by);
  EXPECT_EQ(lagrangian_image(by, tau_big(d.mn(), d), d), bx);
  SimilitudeElement g = random_g(d, rng);
  EXPECT_EQ(lagrangian_image(by, project_isometry(iota_W(g, d), d), d), by);
  EXPECT_EQ(lagrangian_image(by, d_big(5, d), d), by);
  EXPECT_THROW(Lagrangian(MatrixF::identity(2 * d.mn()).block(0, 0, d.mn() - 1, 2 * d.mn()), d), Error);
  MatrixF mixed(d.mn(), 2 * d.mn());
  for (std::size_t i = 0; i < d.mn(); ++i) mixed(i, i) = mixed(i, d.mn() + i) = 1;
  mixed(0, d.mn() + 1) = 1;
  EXPECT_THROW(Lagrangian(mixed, d), Error);
}
