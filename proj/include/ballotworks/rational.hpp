#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ballotworks {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// floor(r), exact for negatives.
BigInt floor_rat(const Rational& r);

// Decimal rendering truncated toward zero at `scale` places. Whole values print
// bare ("24"), everything else keeps exactly `scale` digits ("1.63", "-0.33").
std::string format_scaled(const Rational& r, int scale);

}  // namespace ballotworks
