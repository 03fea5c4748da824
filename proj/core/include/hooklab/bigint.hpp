#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hooklab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }
std::string to_string(const Rational& v);

}  // namespace hooklab
