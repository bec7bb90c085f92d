#include "zetaperiod/numeric.hpp"

#include "zetaperiod/errors.hpp"

#include <cmath>
#include <cstdint>

namespace zetaperiod {

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw ValidationError("non-finite value has no exact rational form");
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  const double frac = std::frexp(x, &exponent);
  // frac * 2^53 is an integer for every double
  const auto mantissa = static_cast<std::int64_t>(std::ldexp(frac, 53));
  exponent -= 53;
  Rational r{BigInt(mantissa)};
  if (exponent > 0) {
    r *= Rational(BigInt(1) << exponent);
  } else if (exponent < 0) {
    r /= Rational(BigInt(1) << -exponent);
  }
  return r;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

double to_double(const BigInt& x) { return x.convert_to<double>(); }

std::string to_string(const Rational& x) {
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
    const BigInt num(std::string(text.substr(0, slash)));
    const BigInt den(std::string(text.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
}

}  // namespace zetaperiod
