#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powser/rational.hpp"

namespace powser::detail {

/// (exponent, coefficient) pair queued for rendering.
using Term = std::pair<int, Rational>;

inline std::string format_power(char var, int exp) {
    if (exp == 0) {
        return "1";
    }
    std::string s(1, var);
    if (exp != 1) {
        s += "^" + std::to_string(exp);
    }
    return s;
}

/// Renders terms as `c*x^k` monomials joined with ` + ` / ` - `.
/// `marker_exp`, when set, appends an explicit truncation marker `+ O(x^m)`;
/// if the term list is cut at `max_terms`, the marker moves to the first
/// hidden exponent so the output stays honest.
inline std::string render_terms(const std::vector<Term>& terms, char var,
                                std::optional<int> marker_exp,
                                std::size_t max_terms = static_cast<std::size_t>(-1)) {
    std::string out;
    std::size_t shown = 0;
    std::optional<int> marker = marker_exp;
    for (const auto& [exp, c] : terms) {
        if (c == 0) {
            continue;
        }
        if (shown == max_terms) {
            marker = exp;
            break;
        }
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (out.empty()) {
            if (neg) {
                out += "-";
            }
        } else {
            out += neg ? " - " : " + ";
        }
        if (exp == 0) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += format_power(var, exp);
        } else {
            out += to_string(mag) + "*" + format_power(var, exp);
        }
        ++shown;
    }
    if (out.empty()) {
        out = "0";
    }
    if (marker) {
        out += " + O(" + format_power(var, *marker) + ")";
    }
    return out;
}

}  // namespace powser::detail
