#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace strata {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// x*(x-1)/2 for any integer x (generalized binomial C(x,2)).
inline Int binom2(const Int& x) { return x * (x - 1) / 2; }

inline Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace strata
