#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powser {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Power-series division by a series whose constant term is zero. The caller
/// must lift the operands to LaurentSeries to perform this division.
struct DivisorNotUnit : Error {
    DivisorNotUnit() : Error("power series division requires a divisor with nonzero constant term") {}
};

/// Laurent-series division by the zero series.
struct DivisionByZeroSeries : Error {
    DivisionByZeroSeries() : Error("division by the zero Laurent series") {}
};

/// geometric_inverse() was handed a series with nonzero constant term.
struct NonzeroConstantTerm : Error {
    NonzeroConstantTerm() : Error("geometric inverse requires a series with zero constant term") {}
};

/// Two series with different truncation orders were compared coefficientwise.
struct OrderMismatch : Error {
    OrderMismatch(int lhs, int rhs)
        : Error("truncation orders differ: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// An infinite continued fraction produced a numerator (beyond the first)
/// with nonzero constant term, which breaks coefficient stabilization.
struct NonzeroConstantNumerator : Error {
    explicit NonzeroConstantNumerator(int level)
        : Error("continued-fraction numerator b_" + std::to_string(level) + " has nonzero constant term") {}
};

/// The zero polynomial was passed where a nonzero one is required.
struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation is undefined for the zero polynomial") {}
};

/// An index outside the supported range (e.g. T_0, which is not exposed).
struct UnsupportedIndex : Error {
    using Error::Error;
};

/// An expression called a function name the evaluator does not know.
struct UnknownFunction : Error {
    explicit UnknownFunction(const std::string& name) : Error("unknown function: " + name) {}
};

/// Expression parse failure, with the byte offset and the expected token.
struct SyntaxError : Error {
    std::size_t offset;
    std::string expected;

    SyntaxError(std::size_t off, std::string expected_token)
        : Error("syntax error at offset " + std::to_string(off) + ": expected " + expected_token),
          offset(off),
          expected(std::move(expected_token)) {}
};

}  // namespace powser
