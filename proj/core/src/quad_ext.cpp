#include "metacocycle/quad_ext.hpp"

#include "metacocycle/error.hpp"

namespace metacocycle {

QuadExt::QuadExt(Rational a, Rational b, Rational delta)
    : a_(std::move(a)), b_(std::move(b)), delta_(std::move(delta)) {
  if (sgn(b_) != 0 && sgn(delta_) == 0) {
    throw Error(ErrorKind::InvalidContext, "element with delta-part needs a nonzero Delta");
  }
}

void QuadExt::adopt_delta(const QuadExt& o) {
  if (sgn(o.delta_) == 0) return;
  if (sgn(delta_) == 0) {
    delta_ = o.delta_;
  } else if (delta_ != o.delta_) {
    throw Error(ErrorKind::InvalidContext, "mixing elements of different quadratic extensions");
  }
}

QuadExt QuadExt::conj() const {
  QuadExt r = *this;
  r.b_ = -b_;
  return r;
}

Rational QuadExt::norm() const { return a_ * a_ - delta_ * b_ * b_; }

QuadExt QuadExt::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw Error(ErrorKind::ZeroArgument, "inverse of zero in E");
  QuadExt r = conj();
  r.a_ /= n;
  r.b_ /= n;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  adopt_delta(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  adopt_delta(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  adopt_delta(o);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + delta_ * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

std::string QuadExt::str() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string s;
  if (sgn(a_) != 0) s = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
  return s + b_.get_str() + "*d";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

}  // namespace metacocycle
