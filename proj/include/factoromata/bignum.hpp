#pragma once
#include <boost/multiprecision/cpp_int.hpp>

namespace factoromata {

using BigInt = boost::multiprecision::cpp_int;
// Normalized: positive denominator, coprime parts.
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace factoromata
