#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "powser/errors.hpp"
#include "powser/format.hpp"
#include "powser/polynomial.hpp"
#include "powser/rational.hpp"

namespace powser {

/// Truncated formal power series: exact coefficients c_0..c_N for a series
/// known modulo x^(N+1). Stored dense; every binary operation truncates the
/// result to the minimum operand order.
class PowerSeries {
public:
    /// The zero series at the given order.
    explicit PowerSeries(int order) : coeffs_(checked_size(order)), order_(order) {}

    /// Takes coefficients c_0..c_k with k <= order; missing ones are zero.
    PowerSeries(std::vector<Rational> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
        if (coeffs_.size() > checked_size(order)) {
            throw std::invalid_argument("more coefficients than the truncation order admits");
        }
        coeffs_.resize(static_cast<std::size_t>(order) + 1);
    }

    static PowerSeries constant(const Rational& c, int order) {
        PowerSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    static PowerSeries one(int order) { return constant(1, order); }

    /// c*x^k truncated to `order`; the zero series when k > order.
    static PowerSeries monomial(const Rational& c, int k, int order) {
        PowerSeries s(order);
        if (k >= 0 && k <= order) {
            s.coeffs_[static_cast<std::size_t>(k)] = c;
        }
        return s;
    }

    int order() const { return order_; }

    const Rational& coeff(int k) const {
        if (k < 0 || k > order_) {
            throw std::out_of_range("coefficient index beyond truncation order");
        }
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// True when every known coefficient is zero.
    bool is_zero() const {
        for (const Rational& c : coeffs_) {
            if (c != 0) {
                return false;
            }
        }
        return true;
    }

    PowerSeries truncated(int new_order) const {
        if (new_order > order_) {
            throw std::invalid_argument("truncation cannot raise the order");
        }
        std::vector<Rational> cs(coeffs_.begin(), coeffs_.begin() + new_order + 1);
        return PowerSeries(std::move(cs), new_order);
    }

    /// Extends with zero coefficients. Only sound for series that are exact
    /// (images of polynomials, monomials); it declares everything beyond the
    /// stored order to be zero.
    PowerSeries padded_to(int new_order) const {
        if (new_order < order_) {
            throw std::invalid_argument("padding cannot lower the order");
        }
        std::vector<Rational> cs = coeffs_;
        return PowerSeries(std::move(cs), new_order);
    }

    PowerSeries operator-() const {
        std::vector<Rational> cs(coeffs_.size());
        for (std::size_t i = 0; i < cs.size(); ++i) {
            cs[i] = -coeffs_[i];
        }
        return PowerSeries(std::move(cs), order_);
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        const int order = std::min(a.order_, b.order_);
        std::vector<Rational> cs(static_cast<std::size_t>(order) + 1);
        for (int k = 0; k <= order; ++k) {
            cs[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
        }
        return PowerSeries(std::move(cs), order);
    }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

    /// Cauchy product truncated at the minimum operand order.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        const int order = std::min(a.order_, b.order_);
        std::vector<Rational> cs(static_cast<std::size_t>(order) + 1);
        for (int i = 0; i <= order; ++i) {
            if (a.coeff(i) == 0) {
                continue;
            }
            for (int j = 0; i + j <= order; ++j) {
                cs[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
            }
        }
        return PowerSeries(std::move(cs), order);
    }

    friend PowerSeries operator*(const Rational& s, const PowerSeries& p) {
        std::vector<Rational> cs(p.coeffs_.size());
        for (std::size_t i = 0; i < cs.size(); ++i) {
            cs[i] = s * p.coeffs_[i];
        }
        return PowerSeries(std::move(cs), p.order_);
    }

    /// Quotient h with h*b = a up to the common order. Coefficient k of h
    /// depends only on coefficients <= k of both operands, so no precision is
    /// lost beyond the minimum-order rule.
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
        if (b.coeff(0) == 0) {
            throw DivisorNotUnit();
        }
        const int order = std::min(a.order_, b.order_);
        std::vector<Rational> h(static_cast<std::size_t>(order) + 1);
        for (int k = 0; k <= order; ++k) {
            Rational acc = a.coeff(k);
            for (int j = 1; j <= k; ++j) {
                acc -= b.coeff(j) * h[static_cast<std::size_t>(k - j)];
            }
            h[static_cast<std::size_t>(k)] = acc / b.coeff(0);
        }
        return PowerSeries(std::move(h), order);
    }

    bool operator==(const PowerSeries&) const = default;

    /// Increasing-degree rendering with an explicit truncation marker,
    /// e.g. "1 - y^2 - y^4 + O(y^6)".
    std::string to_string(char var = 'x') const { return render(var, static_cast<std::size_t>(-1)); }

    /// Same format, but shows at most `max_terms` monomials.
    std::string to_display_string(char var = 'x', std::size_t max_terms = 12) const {
        return render(var, max_terms);
    }

private:
    static std::size_t checked_size(int order) {
        if (order < 0) {
            throw std::invalid_argument("power series order must be non-negative");
        }
        return static_cast<std::size_t>(order) + 1;
    }

    std::string render(char var, std::size_t max_terms) const {
        std::vector<detail::Term> terms;
        for (int k = 0; k <= order_; ++k) {
            terms.emplace_back(k, coeffs_[static_cast<std::size_t>(k)]);
        }
        return detail::render_terms(terms, var, order_ + 1, max_terms);
    }

    std::vector<Rational> coeffs_;
    int order_;
};

/// 1/(1+p) = 1 - p + p^2 - ... for p with zero constant term. Computed by
/// accumulating powers of p; must agree with PowerSeries division exactly.
inline PowerSeries geometric_inverse(const PowerSeries& p) {
    if (p.coeff(0) != 0) {
        throw NonzeroConstantTerm();
    }
    const PowerSeries neg = -p;
    PowerSeries result = PowerSeries::one(p.order());
    PowerSeries power = PowerSeries::one(p.order());
    for (int k = 1; k <= p.order(); ++k) {
        power = power * neg;
        if (power.is_zero()) {
            break;
        }
        result = result + power;
    }
    return result;
}

/// The polynomial viewed as a series at the given order (truncating when the
/// order is below the degree; the padding is exact, polynomials are finite).
inline PowerSeries to_power_series(const Polynomial& p, int order) {
    std::vector<Rational> cs;
    const int top = std::min(order, p.degree());
    cs.reserve(static_cast<std::size_t>(top < 0 ? 0 : top + 1));
    for (int k = 0; k <= top; ++k) {
        cs.push_back(p.coeff(k));
    }
    return PowerSeries(std::move(cs), order);
}

}  // namespace powser
