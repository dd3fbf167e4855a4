#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hypersym/number_theory.hpp"

namespace hypersym {

// An element of the cyclotomic field Q(zeta_N), stored as coefficients of
// 1, z, ..., z^{phi(N)-1} modulo the N-th cyclotomic polynomial.
//
// Every value is kept with its minimal conductor: after each operation the
// element is pushed down into the smallest Q(zeta_M) containing it. Rationals
// therefore always have conductor 1, and two values are equal exactly when
// their (conductor, coeffs) pairs are equal.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
    Cyclotomic(long value) : conductor_(1), coeffs_{Rational(value)} {}  // NOLINT
    Cyclotomic(const Rational& value) : conductor_(1), coeffs_{value} {}  // NOLINT

    /// Canonicalizes coefficients given in the power basis of Q(zeta_N).
    static Cyclotomic from_coeffs(std::int64_t conductor, std::vector<Rational> coeffs);

    /// zeta_N^k.
    static Cyclotomic root_of_unity(std::int64_t n, std::int64_t k);

    std::int64_t conductor() const noexcept { return conductor_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return conductor_ == 1 && coeffs_[0] == 0; }
    bool is_one() const noexcept { return conductor_ == 1 && coeffs_[0] == 1; }
    bool is_rational() const noexcept { return conductor_ == 1; }

    /// Throws NotRational unless the value lies in Q.
    Rational to_rational() const;

    /// Power-basis coefficients of this value inside Q(zeta_M); M must be a
    /// multiple of the conductor.
    std::vector<Rational> coefficients_in(std::int64_t m) const;

    Cyclotomic inverse() const;
    Cyclotomic pow(std::int64_t e) const;

    /// The Galois automorphism zeta_N -> zeta_N^j, j coprime to the conductor.
    Cyclotomic galois(std::int64_t j) const;
    Cyclotomic conj() const { return galois(-1); }

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
    Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
    Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }
    Cyclotomic& operator/=(const Cyclotomic& rhs) { return *this = *this / rhs; }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
    }

    /// Human-readable form in the zeta basis, e.g. "1 + 2*zeta(12)^3".
    std::string to_string() const;

private:
    struct Canonical {};
    Cyclotomic(std::int64_t n, std::vector<Rational> c, Canonical)
        : conductor_(n), coeffs_(std::move(c)) {}

    std::int64_t conductor_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

/// Parses "zeta(N)^k", "zeta(N)", "p/q" or "p". Throws ParseError.
Cyclotomic parse_cyclotomic(const std::string& text);

}  // namespace hypersym
