#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace octdirac {

/// Exact scalar used for every algebraic identity in the library.
/// cpp_rational keeps the canonical form automatically: denominator > 0 and
/// gcd(|num|, den) = 1 after every operation.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

inline Rational abs(const Rational& x) {
    return x < 0 ? Rational(-x) : x;
}

inline std::string to_string(const Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline bool is_integer(const Rational& x) {
    return denominator(x) == 1;
}

} // namespace octdirac
