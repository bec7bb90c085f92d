#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <string_view>
#include <type_traits>

namespace zetaperiod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using HighReal = boost::multiprecision::cpp_bin_float_50;
using HighComplex = boost::multiprecision::cpp_complex_50;

/// Exact value of a finite double as a dyadic rational.
Rational exact_rational(double x);

double to_double(const Rational& x);
double to_double(const BigInt& x);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& x);
Rational parse_rational(std::string_view text);

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational> || std::is_same_v<T, BigInt>;

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};
template <class T>
inline constexpr bool is_complex_v = is_complex<T>::value;

/// Conversion between the scalar kinds used by Poly.
template <class To, class From>
To scalar_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<To, Rational> && std::is_floating_point_v<From>) {
    return exact_rational(static_cast<double>(x));
  } else if constexpr (std::is_same_v<To, Rational> && std::is_same_v<From, BigInt>) {
    return Rational(x);
  } else if constexpr (std::is_same_v<To, Rational> && std::is_integral_v<From>) {
    return Rational(x);
  } else if constexpr (std::is_floating_point_v<To> && is_exact_v<From>) {
    return static_cast<To>(to_double(x));
  } else if constexpr (is_complex_v<To> && !is_complex_v<From>) {
    return To(scalar_cast<typename To::value_type>(x));
  } else if constexpr (std::is_same_v<To, HighReal> && is_exact_v<From>) {
    return HighReal(boost::multiprecision::numerator(Rational(x))) /
           HighReal(boost::multiprecision::denominator(Rational(x)));
  } else if constexpr (std::is_same_v<To, HighComplex>) {
    if constexpr (is_complex_v<From>) {
      return HighComplex(HighReal(x.real()), HighReal(x.imag()));
    } else {
      return HighComplex(scalar_cast<HighReal>(x));
    }
  } else {
    return static_cast<To>(x);
  }
}

/// Magnitude as a double, for any scalar kind.
template <class T>
double magnitude(const T& x) {
  if constexpr (is_complex_v<T>) {
    return std::abs(std::complex<double>(x));
  } else if constexpr (is_exact_v<T>) {
    return std::abs(to_double(x));
  } else {
    return std::abs(static_cast<double>(x));
  }
}

}  // namespace zetaperiod
