#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypersym/ypoly.hpp"

namespace hypersym {

// Truncated Laurent series in x with coefficients in Q(zeta)(y):
//
//     x^v * (c_0 + c_1 x + ... + c_{T-1} x^{T-1}) + O(x^{v+T})
//
// A nonzero series always has c_0 != 0, so v is its true valuation. The
// window T is tracked through every operation and never silently extended:
// asking for a coefficient past x^{v+T-1} is an error.
//
// Zero carries an explicit flag together with its absolute precision
// (O(x^end)); an exactly known zero has infinite precision.
class LaurentSeries {
public:
    static constexpr std::int64_t kExact = std::int64_t{1} << 40;

    /// Exact zero.
    LaurentSeries() = default;

    /// sum_i coeffs[i] x^{shift+i}, treated as exact and truncated to
    /// `window` terms counted from its true valuation.
    static LaurentSeries from_polynomial(const std::vector<YRational>& coeffs, std::int64_t shift,
                                         std::size_t window);
    static LaurentSeries one(std::size_t window) { return from_polynomial({YRational(1)}, 0, window); }

    bool is_zero() const noexcept { return zero_; }
    /// True valuation; throws WindowExhausted for the zero series.
    std::int64_t valuation() const;
    /// Number of stored coefficients (0 for zero).
    std::size_t window() const noexcept { return coeffs_.size(); }
    /// Absolute precision: the series is known modulo x^{precision_end()}.
    std::int64_t precision_end() const noexcept;
    const std::vector<YRational>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^m. Throws WindowExhausted when m lies outside
    /// [valuation, valuation + window).
    YRational coeff(std::int64_t m) const;

    LaurentSeries reciprocal() const;
    LaurentSeries pow(std::int64_t e) const;
    /// Keeps at most `window` terms.
    LaurentSeries truncated(std::size_t window) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const YRational& s);
    LaurentSeries& operator*=(const LaurentSeries& b) { return *this = *this * b; }
    LaurentSeries& operator+=(const LaurentSeries& b) { return *this = *this + b; }

    /// Debug form "x^v * (c0 + c1*x + ... + O(x^T))".
    std::string to_string() const;

private:
    static LaurentSeries make(std::int64_t valuation, std::vector<YRational> coeffs, std::int64_t end);

    bool zero_ = true;
    std::int64_t valuation_ = 0;
    std::int64_t zero_end_ = kExact;
    std::vector<YRational> coeffs_;
};

/// coeff_x(s, m): the exact coefficient [x^m] s.
inline YRational coeff_x(const LaurentSeries& s, std::int64_t m) { return s.coeff(m); }

/// (1 + x y)^e as a series with the given window; e may be negative.
LaurentSeries one_plus_xy_pow(std::int64_t e, std::size_t window);
/// (1 - x)^e as a series with the given window; e may be negative.
LaurentSeries one_minus_x_pow(std::int64_t e, std::size_t window);

/// Psi_{gamma,e} = [gamma (1+xy)^e + y (1-x)^e] / [gamma (1+xy)^e - (1-x)^e],
/// returned with exactly `window` terms from its valuation (-1 when
/// gamma = 1, else 0).
LaurentSeries psi(const Cyclotomic& gamma, std::int64_t e, std::size_t window);
/// 1 / Psi_{gamma,e}, computed as denominator over numerator.
LaurentSeries psi_inverse(const Cyclotomic& gamma, std::int64_t e, std::size_t window);

/// Phi_dd = 1/((1+xy)(1-x)) * prod_i [(1+xy)^{d_i} - (1-x)^{d_i}] / [(1+xy)^{d_i} + y(1-x)^{d_i}],
/// assembled as a single quotient of exact polynomials. Valuation is dd.size().
LaurentSeries phi_multidegree(const std::vector<std::int64_t>& dd, std::size_t window);

}  // namespace hypersym
