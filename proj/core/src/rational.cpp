#include "metacocycle/rational.hpp"

#include <cctype>

#include "metacocycle/error.hpp"

namespace metacocycle {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorKind::SnapFailure: return "SnapFailure";
    case ErrorKind::NotSimilitude: return "NotSimilitude";
    case ErrorKind::NotIsometry: return "NotIsometry";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::RetryExhausted: return "RetryExhausted";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::NotLagrangian: return "NotLagrangian";
    case ErrorKind::ChiUnavailable: return "ChiUnavailable";
    case ErrorKind::InvalidContext: return "InvalidContext";
    case ErrorKind::CalibrationMismatch: return "CalibrationMismatch";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational");
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
    }
  };
  auto strip_plus = [](std::string part) {
    if (!part.empty() && part[0] == '+') part.erase(0, 1);
    return part;
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(Integer(strip_plus(s)));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  Integer d(strip_plus(den));
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
  Rational r(Integer(strip_plus(num)), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

int valuation(const Integer& x, const Integer& p) {
  if (x == 0) throw Error(ErrorKind::ZeroArgument, "valuation of zero");
  Integer t = abs(x);
  int v = 0;
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Rational& x, const Integer& p) {
  if (is_zero(x)) throw Error(ErrorKind::ZeroArgument, "valuation of zero");
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

Rational unit_part(const Rational& x, const Integer& p) {
  int v = valuation(x, p);
  Integer pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
  Rational r = x;
  if (v > 0) r /= Rational(pk);
  if (v < 0) r *= Rational(pk);
  return r;
}

Integer reduce_unit(const Rational& unit, const Integer& p, unsigned k) {
  Integer mod;
  mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), k);
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), unit.get_den().get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw Error(ErrorKind::NotAUnit, to_string(unit) + " is not a p-adic unit");
  }
  Integer r = (unit.get_num() * inv) % mod;
  if (r < 0) r += mod;
  return r;
}

Rational pow(const Rational& x, long e) {
  if (e < 0) {
    if (is_zero(x)) throw Error(ErrorKind::ZeroArgument, "negative power of zero");
    return pow(Rational(1) / x, -e);
  }
  Rational result(1);
  Rational base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool is_probable_prime(const Integer& n) {
  return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

}  // namespace metacocycle
