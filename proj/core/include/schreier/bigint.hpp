#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schreier {

// Exact signed arbitrary-precision integer. Every sequence value, binomial
// coefficient, and polynomial coefficient in this library is a BigInt;
// nothing is ever rounded or reduced mod anything.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

}  // namespace schreier
