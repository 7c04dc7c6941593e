#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ascruns {

// Arbitrary-precision rationals back the exact mode. The floating-point
// path is the default; the rational path is the gold standard the tests
// compare it against and is practical up to roughly m <= 12, n <= 24.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

}  // namespace ascruns
