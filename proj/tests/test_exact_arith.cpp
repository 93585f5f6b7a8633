#include <gtest/gtest.h>

#include "metacocycle/error.hpp"
#include "metacocycle/linalg.hpp"
#include "metacocycle/random.hpp"

using namespace metacocycle;

namespace {

const Rational kDelta2(2);

MatrixE random_matrix_e(Rng& rng, std::size_t r, std::size_t c, const Rational& delta) {
  MatrixE m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = draw_quad_ext(rng, delta, 4);
  return m;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational(" -7 "), Rational(-7));
  EXPECT_EQ(to_string(parse_rational("10/-4")), "-5/2");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}

TEST(Rational, Valuation) {
  EXPECT_EQ(valuation(Rational(18), Integer(3)), 2);
  EXPECT_EQ(valuation(Rational(5, 27), Integer(3)), -3);
  EXPECT_EQ(unit_part(Rational(5, 27), Integer(3)), Rational(5));
  EXPECT_THROW(valuation(Rational(0), Integer(3)), Error);
}

TEST(QuadExt, Conjugation) {
  EXPECT_EQ(QuadExt(1, 0, kDelta2).conj(), QuadExt(1, 0, kDelta2));
  EXPECT_EQ(QuadExt(0, 1, kDelta2).conj(), QuadExt(0, -1, kDelta2));
  EXPECT_EQ(QuadExt(2, 3, kDelta2).conj(), QuadExt(2, -3, kDelta2));
}

TEST(QuadExt, Norm) {
  EXPECT_EQ(QuadExt(1, 0, kDelta2).norm(), 1);
  EXPECT_EQ(QuadExt(0, 1, kDelta2).norm(), -2);
  EXPECT_EQ(QuadExt(3, 1, kDelta2).norm(), 7);
  EXPECT_EQ(QuadExt(2, 3, kDelta2).trace(), 4);
}

TEST(QuadExt, MixingDeltasThrows) {
  EXPECT_THROW(QuadExt(0, 1, Rational(2)) + QuadExt(0, 1, Rational(3)), Error);
  // Untagged base-field elements combine with anything.
  EXPECT_EQ(QuadExt(Rational(2)) * QuadExt(0, 1, kDelta2), QuadExt(0, 2, kDelta2));
}

TEST(QuadExtProperty, FieldAxioms) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    Rational delta = draw_nonzero_rational(rng, 7);
    if (mpz_perfect_square_p(delta.get_num().get_mpz_t()) && mpz_perfect_square_p(delta.get_den().get_mpz_t()) &&
        sgn(delta) > 0)
      continue;
    QuadExt x = draw_quad_ext(rng, delta, 5), y = draw_quad_ext(rng, delta, 5), z = draw_quad_ext(rng, delta, 5);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ(x.conj().conj(), x);
    ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
    if (!x.is_zero()) ASSERT_EQ(x * x.inverse(), QuadExt(1));
    ASSERT_EQ(QuadExt(x.norm()), x * x.conj());
  }
}

TEST(QuadExtProperty, NormIsMultiplicative) {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    QuadExt x = draw_quad_ext(rng, Rational(-3), 9), y = draw_quad_ext(rng, Rational(-3), 9);
    ASSERT_EQ((x * y).norm(), x.norm() * y.norm());
  }
}

TEST(Linalg, Examples) {
  EXPECT_EQ(det(MatrixE::identity(3)), QuadExt(1));
  EXPECT_EQ(rank(MatrixF(2, 4)), 0u);
  QuadExt d = QuadExt::generator(kDelta2);
  EXPECT_EQ(det(MatrixE::diagonal({d, d})), QuadExt(2));
}

TEST(Linalg, Errors) {
  MatrixF singular(2, 2, {1, 2, 2, 4});
  EXPECT_THROW(inverse(singular), Error);
  EXPECT_THROW(MatrixF(2, 3) * MatrixF(2, 3), Error);
  try {
    inverse(singular);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularMatrix);
  }
}

TEST(Linalg, KernelsAndSolve) {
  MatrixF a(2, 3, {1, 2, 3, 2, 4, 6});
  MatrixF k = kernel(a);
  EXPECT_EQ(k.cols(), 2u);
  EXPECT_TRUE((a * k).is_zero());
  MatrixF lk = left_kernel(a);
  EXPECT_EQ(lk.rows(), 1u);
  EXPECT_TRUE((lk * a).is_zero());
  MatrixF b(2, 2, {2, 1, 1, 1});
  MatrixF rhs(2, 1, {3, 2});
  EXPECT_EQ(b * solve(b, rhs), rhs);
  MatrixF comp = complement_rows(MatrixF(1, 3, {0, 1, 1}));
  EXPECT_EQ(rank(vstack(MatrixF(1, 3, {0, 1, 1}), comp)), 3u);
}

TEST(LinalgProperty, InverseIsExact) {
  Rng rng(13);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    MatrixE m = random_matrix_e(rng, 3, 3, Rational(5));
    if (det(m).is_zero()) continue;
    ASSERT_EQ(m * inverse(m), MatrixE::identity(3));
    ASSERT_EQ(det(m) * det(inverse(m)), QuadExt(1));
    ++checked;
  }
  EXPECT_GT(checked, 150);
}

TEST(RestrictScalars, Examples) {
  EXPECT_EQ(restrict_scalars(MatrixE(1, 1, {QuadExt(1)}), ScalarSide::Column), MatrixF::identity(2));
  MatrixE d(1, 1, {QuadExt::generator(kDelta2)});
  EXPECT_EQ(restrict_scalars(d, ScalarSide::Column), MatrixF(2, 2, {0, 2, 1, 0}));
  EXPECT_EQ(restrict_scalars(d, ScalarSide::Row), MatrixF(2, 2, {0, 1, 2, 0}));
}

TEST(RestrictScalarsProperty, RingHomomorphism) {
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    QuadExt x = draw_quad_ext(rng, kDelta2, 6), y = draw_quad_ext(rng, kDelta2, 6);
    for (auto side : {ScalarSide::Row, ScalarSide::Column}) {
      ASSERT_EQ(restrict_scalars(MatrixE(1, 1, {x}), side) * restrict_scalars(MatrixE(1, 1, {y}), side),
                restrict_scalars(MatrixE(1, 1, {x * y}), side));
    }
    MatrixE m = random_matrix_e(rng, 2, 3, kDelta2), n = random_matrix_e(rng, 3, 2, kDelta2);
    ASSERT_EQ(restrict_scalars(m * n), restrict_scalars(m) * restrict_scalars(n));
    ASSERT_EQ(restrict_scalars(m + m), restrict_scalars(m) + restrict_scalars(m));
  }
}

TEST(RestrictScalarsProperty, RowVectorAction) {
  // Row convention: coordinates (u, v) of u + v*delta times the block of c
  // give the coordinates of (u + v*delta) * c.
  Rng rng(15);
  for (int i = 0; i < 100; ++i) {
    QuadExt x = draw_quad_ext(rng, kDelta2, 6), c = draw_quad_ext(rng, kDelta2, 6);
    MatrixF coords(1, 2, {x.re(), x.im()});
    MatrixF out = coords * restrict_scalars(MatrixE(1, 1, {c}), ScalarSide::Row);
    QuadExt prod = x * c;
    ASSERT_EQ(out, MatrixF(1, 2, {prod.re(), prod.im()}));
  }
}
