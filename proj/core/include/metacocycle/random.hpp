#ifndef METACOCYCLE_RANDOM_HPP
#define METACOCYCLE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "metacocycle/quad_ext.hpp"
#include "metacocycle/rational.hpp"

namespace metacocycle {

/// All randomized generation goes through an explicitly passed engine.
/// mt19937_64 output is specified by the standard, and the draws below avoid
/// the implementation-defined std distributions, so a seed reproduces the
/// same instances on every platform.
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
inline long draw_int(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

inline bool draw_bool(Rng& rng) { return (rng() & 1U) != 0; }

/// n/d with |n| <= bound, 1 <= d <= bound.
inline Rational draw_rational(Rng& rng, long bound) {
  Rational r(draw_int(rng, -bound, bound), draw_int(rng, 1, bound));
  r.canonicalize();
  return r;
}

inline Rational draw_nonzero_rational(Rng& rng, long bound) {
  for (;;) {
    Rational r = draw_rational(rng, bound);
    if (sgn(r) != 0) return r;
  }
}

inline QuadExt draw_quad_ext(Rng& rng, const Rational& delta, long bound) {
  return {draw_rational(rng, bound), draw_rational(rng, bound), delta};
}

inline QuadExt draw_nonzero_quad_ext(Rng& rng, const Rational& delta, long bound) {
  for (;;) {
    QuadExt x = draw_quad_ext(rng, delta, bound);
    if (!x.is_zero()) return x;
  }
}

}  // namespace metacocycle

#endif  // METACOCYCLE_RANDOM_HPP
