#ifndef METACOCYCLE_MU8_HPP
#define METACOCYCLE_MU8_HPP

#include <complex>
#include <ostream>

namespace metacocycle {

/// zeta_8^exponent with zeta_8 = exp(2 pi i / 8). The group law is addition
/// of exponents mod 8; {0, 4} is the subgroup {+1, -1}.
class Mu8 {
 public:
  constexpr Mu8() = default;
  constexpr explicit Mu8(int exponent) : e_(((exponent % 8) + 8) % 8) {}

  static constexpr Mu8 one() { return Mu8(0); }
  static constexpr Mu8 minus_one() { return Mu8(4); }
  static constexpr Mu8 sign(bool negative) { return Mu8(negative ? 4 : 0); }

  constexpr int exponent() const { return e_; }
  constexpr bool is_one() const { return e_ == 0; }
  constexpr bool is_sign() const { return e_ == 0 || e_ == 4; }

  constexpr Mu8 inverse() const { return Mu8(-e_); }
  constexpr Mu8 pow(long k) const { return Mu8(static_cast<int>((static_cast<long>(e_) * (k % 8)) % 8)); }

  friend constexpr Mu8 operator*(Mu8 a, Mu8 b) { return Mu8(a.e_ + b.e_); }
  friend constexpr Mu8 operator/(Mu8 a, Mu8 b) { return Mu8(a.e_ - b.e_); }
  constexpr Mu8& operator*=(Mu8 o) { return *this = *this * o; }
  friend constexpr bool operator==(Mu8 a, Mu8 b) { return a.e_ == b.e_; }

  std::complex<double> value() const;

 private:
  int e_ = 0;
};

std::ostream& operator<<(std::ostream& os, Mu8 x);

}  // namespace metacocycle

#endif  // METACOCYCLE_MU8_HPP
