#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace secretary {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace secretary
