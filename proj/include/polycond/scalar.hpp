#ifndef POLYCOND_SCALAR_HPP
#define POLYCOND_SCALAR_HPP

// Number regimes used throughout the library: exact rationals over unbounded
// integers (GMP) and arbitrary-precision binary floats (MPFR) whose precision
// is expressed in decimal digits.

#include "polycond/errors.hpp"

#include <algorithm>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <string_view>
#include <type_traits>

namespace polycond {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using BigFloat = boost::multiprecision::mpfr_float;

template <class T>
concept RealScalar = std::is_same_v<T, Rational> || std::is_same_v<T, BigFloat>;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

struct Config {
  unsigned digits = 60;
};

/// Process-wide defaults. Operations that need floats take the precision
/// explicitly and fall back to `config().digits`.
inline Config& config()
{
  static Config cfg;
  return cfg;
}

inline unsigned default_digits() { return config().digits; }

/// Sets the precision of newly created BigFloat values for the current thread
/// and restores the previous value on exit.
class PrecisionScope {
public:
  explicit PrecisionScope(unsigned digits) : saved_(BigFloat::default_precision())
  {
    if (digits == 0)
      throw ArgumentError("precision must be at least one decimal digit");
    BigFloat::default_precision(digits);
  }
  ~PrecisionScope() { BigFloat::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
  unsigned saved_;
};

/// Correctly rounded conversion at the given decimal precision.
inline BigFloat to_bigfloat(const Rational& q, unsigned digits)
{
  BigFloat r;
  r.precision(digits);
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

inline BigFloat to_bigfloat(const BigFloat& x, unsigned digits)
{
  BigFloat r;
  r.precision(digits);
  mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

/// Exact value of a finite double.
inline Rational to_rational(double v)
{
  if (!std::isfinite(v))
    throw DomainError("cannot represent a non-finite double as a rational");
  Rational r;
  mpq_set_d(r.backend().data(), v);
  return r;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigFloat& x) { return x.convert_to<double>(); }

/// Working precision of a value in decimal digits (exact values report 0).
inline unsigned digits_of(const BigFloat& x) { return x.precision(); }
inline unsigned digits_of(const Rational&) { return 0; }

// log10|s| from the binary exponent and a double mantissa, so values far
// outside double range (20!, 2^-210, 10^48) never overflow.

inline double log10_abs(const BigInt& z)
{
  if (z == 0)
    throw DomainError("log10_abs: zero input");
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, z.backend().data());
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * std::log10(2.0);
}

inline double log10_abs(const Rational& q)
{
  if (q == 0)
    throw DomainError("log10_abs: zero input");
  return log10_abs(BigInt(numerator(q))) - log10_abs(BigInt(denominator(q)));
}

inline double log10_abs(const BigFloat& x)
{
  if (x == 0)
    throw DomainError("log10_abs: zero input");
  if (!boost::multiprecision::isfinite(x))
    throw DomainError("log10_abs: non-finite input");
  long exp2 = 0;
  double mant = mpfr_get_d_2exp(&exp2, x.backend().data(), MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * std::log10(2.0);
}

inline double log10_abs(double x)
{
  if (x == 0.0)
    throw DomainError("log10_abs: zero input");
  return std::log10(std::fabs(x));
}

/// log10|s|, or -infinity for an exact zero.
template <class T>
double log10_abs_or_neg_inf(const T& s)
{
  if (s == 0)
    return -std::numeric_limits<double>::infinity();
  return log10_abs(s);
}

/// Parses "3", "-7/4", "0.125", "1e-14", "-2.5E3" into an exact rational.
inline Rational parse_rational(std::string_view text)
{
  auto fail = [&]() -> Rational {
    throw ArgumentError("not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty())
    return fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0)
      throw ArgumentError("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-')
    negative = text[pos++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      if (seen_point)
        ++frac_digits;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty())
    return fail();
  long exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E')
      return fail();
    std::string exp_text(text.substr(pos + 1));
    if (exp_text.empty())
      return fail();
    char* end = nullptr;
    exponent = std::strtol(exp_text.c_str(), &end, 10);
    if (*end != '\0')
      return fail();
  }
  // A leading zero would make the BigInt string parser read octal.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  Rational value{BigInt(digits)};
  long shift = exponent - frac_digits;
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::labs(shift)));
  value = shift >= 0 ? value * Rational(scale) : value / Rational(scale);
  return negative ? Rational(-value) : value;
}

} // namespace polycond

#endif // POLYCOND_SCALAR_HPP
