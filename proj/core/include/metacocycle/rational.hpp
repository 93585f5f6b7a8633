#ifndef METACOCYCLE_RATIONAL_HPP
#define METACOCYCLE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace metacocycle {

/// Elements of the base field. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Parses "a", "-a/b" and friends. Throws Error{ParseError} on junk or a zero
/// denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);

/// p-adic valuation of a nonzero rational.
int valuation(const Rational& x, const Integer& p);
int valuation(const Integer& x, const Integer& p);

/// x = p^valuation(x) * unit_part(x).
Rational unit_part(const Rational& x, const Integer& p);

/// Reduction of a p-adic unit modulo p^k, as an integer in [0, p^k).
Integer reduce_unit(const Rational& unit, const Integer& p, unsigned k);

Rational pow(const Rational& x, long e);

bool is_probable_prime(const Integer& n);

}  // namespace metacocycle

#endif  // METACOCYCLE_RATIONAL_HPP
