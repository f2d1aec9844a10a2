#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace klein {

// Arbitrary-precision integers. Partition-type coefficients overflow 64 bits
// well before the default truncation order, so every user-visible coefficient
// is a BigInt and is serialized as a decimal string.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt bigint_from_decimal(const std::string& s) { return BigInt(s); }

}  // namespace klein
