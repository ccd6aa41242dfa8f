#include "gtp/scalar.hpp"

#include <cctype>

#include "gtp/error.hpp"

namespace gtp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::ResultTooLarge: return "ResultTooLarge";
    case ErrorCode::NegativeBaseFractionalExponent: return "NegativeBaseFractionalExponent";
    case ErrorCode::InexactExponent: return "InexactExponent";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::SingularDiagonal: return "SingularDiagonal";
    case ErrorCode::NotUnitNorm: return "NotUnitNorm";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::NonPositiveVector: return "NonPositiveVector";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::EigenpairResidualTooLarge: return "EigenpairResidualTooLarge";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::RootRefinementFailed: return "RootRefinementFailed";
    case ErrorCode::UniformityMismatch: return "UniformityMismatch";
    case ErrorCode::InvalidHypergraph: return "InvalidHypergraph";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::FamilyExplosion: return "FamilyExplosion";
    case ErrorCode::CensusTooLarge: return "CensusTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) fail(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  const Integer v{std::string(s)};
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) fail(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  const Integer den(std::string{den_text});
  if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& x) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) fail(ErrorCode::ParseError, "non-finite number");
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  // 53 bits of mantissa are enough to make it integral.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational r{Integer(scaled)};
  if (exponent >= 0) {
    r *= pow_int(Rational(2), exponent);
  } else {
    r /= pow_int(Rational(2), -exponent);
  }
  return r;
}

bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

}  // namespace gtp
