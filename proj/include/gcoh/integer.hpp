#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "gcoh/errors.hpp"

namespace gcoh {

// Every matrix entry and group coordinate in this library is an exact
// arbitrary-precision integer. No fixed-width fast path.
using Integer = boost::multiprecision::cpp_int;

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd_int(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

inline bool divides(const Integer& d, const Integer& a) {
    if (d == 0) return a == 0;
    return a % d == 0;
}

// Quotient of an exact division; throws if the division has a remainder.
inline Integer exact_div(const Integer& a, const Integer& d) {
    if (d == 0) throw inconsistency_error("exact_div: division by zero");
    Integer q = a / d;
    if (q * d != a) throw inconsistency_error("exact_div: not divisible");
    return q;
}

// Round-to-nearest quotient, used to keep remainders small during elimination.
inline Integer rounded_div(const Integer& a, const Integer& d) {
    Integer q = a / d; // truncated
    Integer r = a - q * d;
    if (2 * abs_int(r) > abs_int(d)) q += (r < 0) == (d < 0) ? 1 : -1;
    return q;
}

} // namespace gcoh
