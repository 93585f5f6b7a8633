#include "metacocycle/linalg.hpp"

namespace metacocycle {

MatrixF restrict_scalars(const MatrixE& m, ScalarSide side) {
  MatrixF out(2 * m.rows(), 2 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const QuadExt& x = m(i, j);
      Rational bd = x.im() * x.delta();
      out(2 * i, 2 * j) = x.re();
      out(2 * i + 1, 2 * j + 1) = x.re();
      if (side == ScalarSide::Column) {
        out(2 * i, 2 * j + 1) = bd;
        out(2 * i + 1, 2 * j) = x.im();
      } else {
        out(2 * i, 2 * j + 1) = x.im();
        out(2 * i + 1, 2 * j) = bd;
      }
    }
  }
  return out;
}

}  // namespace metacocycle
