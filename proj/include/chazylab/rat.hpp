#pragma once
// Exact rationals for the resultant / Appendix computations.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace chazylab {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long n, long long d = 1) { return Rat(n, d); }

inline std::string rat_str(const Rat &r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace chazylab
