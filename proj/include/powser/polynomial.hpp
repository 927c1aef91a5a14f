#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "powser/errors.hpp"
#include "powser/format.hpp"
#include "powser/rational.hpp"

namespace powser {

/// Dense univariate polynomial over exact rationals.
/// Invariant: the highest stored coefficient is nonzero; the zero polynomial
/// stores no coefficients at all.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

    static Polynomial monomial(const Rational& c, int degree) {
        std::vector<Rational> cs(static_cast<std::size_t>(degree) + 1);
        cs.back() = c;
        return Polynomial(std::move(cs));
    }

    static Polynomial variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Coefficient of x^k; zero outside the stored range.
    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) {
            return Rational(0);
        }
        return coeffs_[static_cast<std::size_t>(k)];
    }

    Rational leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Polynomial operator-() const {
        std::vector<Rational> cs(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            cs[i] = -coeffs_[i];
        }
        return Polynomial(std::move(cs));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < cs.size(); ++i) {
            cs[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        }
        return Polynomial(std::move(cs));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return Polynomial();
        }
        std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(cs));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        std::vector<Rational> cs(p.coeffs_.size());
        for (std::size_t i = 0; i < cs.size(); ++i) {
            cs[i] = s * p.coeffs_[i];
        }
        return Polynomial(std::move(cs));
    }

    bool operator==(const Polynomial&) const = default;

    /// Exact Horner evaluation.
    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * x + coeffs_[i];
        }
        return acc;
    }

    /// Floating-point Horner evaluation.
    double operator()(double x) const {
        double acc = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * x + to_double(coeffs_[i]);
        }
        return acc;
    }

    /// Terms in decreasing degree, e.g. "2*x^2 - 1".
    std::string to_string(char var = 'x') const {
        std::vector<detail::Term> terms;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            terms.emplace_back(static_cast<int>(i), coeffs_[i]);
        }
        return detail::render_terms(terms, var, std::nullopt);
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rational> coeffs_;
};

/// Exact composition p(q(x)) by Horner's scheme.
inline Polynomial compose(const Polynomial& p, const Polynomial& q) {
    Polynomial acc;
    const auto& cs = p.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) {
        acc = acc * q + Polynomial::constant(cs[i]);
    }
    return acc;
}

}  // namespace powser
