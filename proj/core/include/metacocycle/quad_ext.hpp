#ifndef METACOCYCLE_QUAD_EXT_HPP
#define METACOCYCLE_QUAD_EXT_HPP

#include <ostream>
#include <string>

#include "metacocycle/rational.hpp"

namespace metacocycle {

/// An element a + b*delta of E = F(delta), delta^2 = Delta.
///
/// Delta travels with the value. Elements built from a bare Rational carry
/// Delta = 0 ("untagged"); they lie in F and combine with any tagged element.
/// Mixing two different nonzero Deltas is a programming error and throws.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(int a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, Rational delta);

  /// delta itself for a given Delta.
  static QuadExt generator(const Rational& delta) { return {0, 1, delta}; }

  const Rational& re() const { return a_; }
  const Rational& im() const { return b_; }
  const Rational& delta() const { return delta_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool in_base_field() const { return sgn(b_) == 0; }

  QuadExt conj() const;
  Rational norm() const;
  Rational trace() const { return 2 * a_; }
  QuadExt inverse() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  QuadExt operator-() const;

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string str() const;

 private:
  void adopt_delta(const QuadExt& o);

  Rational a_{0};
  Rational b_{0};
  Rational delta_{0};
};

inline QuadExt conj(const QuadExt& x) { return x.conj(); }
inline Rational norm(const QuadExt& x) { return x.norm(); }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

/// conj on the base field is the identity; lets matrix code be written once.
inline const Rational& conj(const Rational& x) { return x; }

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace metacocycle

#endif  // METACOCYCLE_QUAD_EXT_HPP
