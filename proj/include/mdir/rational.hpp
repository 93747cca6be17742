#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "mdir/errors.hpp"

namespace mdir {

// Exact scalar type of the coefficient ring. All ring arithmetic is exact;
// floating point appears only at series-evaluation time.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Serialized form is always "p/q" with decimal integers, q > 0, gcd(p,q) = 1.
inline std::string to_fraction_string(const Rational& v) {
  return numerator(v).str() + "/" + denominator(v).str();
}

// Accepts "p/q" or a bare integer "p"; a signed denominator is normalized.
inline Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw InputError("rational with zero denominator: " + text);
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("malformed rational: " + text);
  }
}

inline double to_double(const Rational& v) { return v.convert_to<double>(); }

// Exact: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) { return Rational(x); }

}  // namespace mdir
