#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>

namespace gtp {

// Expression templates are disabled so that `auto` captures values.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Complex = std::complex<double>;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  using Magnitude = Rational;
  static constexpr bool exact = true;
  static Magnitude magnitude(const Rational& x) { return boost::multiprecision::abs(x); }
};

template <>
struct ScalarTraits<double> {
  using Magnitude = double;
  static constexpr bool exact = false;
  static Magnitude magnitude(double x) { return std::fabs(x); }
};

template <>
struct ScalarTraits<Complex> {
  using Magnitude = double;
  static constexpr bool exact = false;
  static Magnitude magnitude(const Complex& x) { return std::abs(x); }
};

template <class T>
using magnitude_t = typename ScalarTraits<T>::Magnitude;

template <class T>
magnitude_t<T> magnitude(const T& x) {
  return ScalarTraits<T>::magnitude(x);
}

/// Zero test against an explicit tolerance; pass 0 for an exact test.
template <class T>
bool near_zero(const T& x, const magnitude_t<T>& tol) {
  return magnitude(x) <= tol;
}

double to_double(const Rational& x);

inline bool is_exact_zero(const Rational& x) { return x.is_zero(); }
inline bool is_exact_zero(double x) { return x == 0.0; }
inline bool is_exact_zero(const Complex& x) { return x == Complex(0.0, 0.0); }

/// Converts between scalar instantiations. Rational targets accept only
/// rational sources; floating targets accept anything.
template <class To, class From>
To scalar_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<From, Rational>) {
    return To(to_double(x));
  } else if constexpr (std::is_same_v<To, Complex>) {
    return Complex(x);
  } else {
    static_assert(!std::is_same_v<To, Rational>, "no lossless conversion to Rational");
    return static_cast<To>(x);
  }
}

/// x^e for integer e; negative e requires x != 0.
template <class T>
T pow_int(const T& x, long e) {
  if (e < 0) return T(1) / pow_int(x, -e);
  T result(1);
  T base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

/// Parses "p", "-p" or "p/q"; throws Error(ParseError) on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" (lowest terms, q > 0) otherwise.
std::string format_rational(const Rational& x);

/// Exact binary value of a finite double as a rational.
Rational rational_from_double(double x);

bool is_integer(const Rational& x);

}  // namespace gtp
