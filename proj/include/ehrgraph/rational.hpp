// Exact arbitrary-precision integers and rationals used throughout.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ehrgraph {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "a/b" in lowest terms, or plain "a" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace ehrgraph
