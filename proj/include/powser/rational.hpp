#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "powser/errors.hpp"

namespace powser {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational coefficient. Always held in canonical form: the denominator
/// is positive and gcd(|numerator|, denominator) = 1.
using Rational = boost::multiprecision::cpp_rational;

/// Builds the reduced rational num/den. Accepts any sign of `den`.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) {
        throw Error("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Renders `p/q`, omitting `/q` when the denominator is 1.
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/" + denominator(q).str();
    }
    return s;
}

}  // namespace powser
