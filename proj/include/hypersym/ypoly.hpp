#pragma once

#include <limits>
#include <string>
#include <vector>

#include "hypersym/cyclotomic.hpp"

namespace hypersym {

// Polynomial in y with cyclotomic coefficients, lowest degree first.
// Trailing zeros are always stripped; the zero polynomial is empty.
class YPoly {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    YPoly() = default;
    YPoly(const Cyclotomic& c);  // NOLINT
    YPoly(long c) : YPoly(Cyclotomic(c)) {}  // NOLINT
    explicit YPoly(std::vector<Cyclotomic> coeffs);

    static YPoly monomial(const Cyclotomic& c, int degree);
    static YPoly y() { return monomial(Cyclotomic(1), 1); }

    /// kZeroDegree for the zero polynomial.
    int degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    const std::vector<Cyclotomic>& coeffs() const noexcept { return c_; }
    /// Coefficient of y^i; zero outside the stored range.
    Cyclotomic coeff(int i) const;
    const Cyclotomic& lead() const { return c_.back(); }

    YPoly monic() const;
    Cyclotomic eval(const Cyclotomic& v) const;

    YPoly operator-() const;
    friend YPoly operator+(const YPoly& a, const YPoly& b);
    friend YPoly operator-(const YPoly& a, const YPoly& b);
    friend YPoly operator*(const YPoly& a, const YPoly& b);
    friend YPoly operator*(const YPoly& a, const Cyclotomic& s);
    friend bool operator==(const YPoly& a, const YPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; `divisor` must be nonzero.
    static void divmod(const YPoly& num, const YPoly& divisor, YPoly& quot, YPoly& rem);

    std::string to_string(const std::string& var = "y") const;

private:
    void strip();
    std::vector<Cyclotomic> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
YPoly gcd(const YPoly& a, const YPoly& b);

// Rational function num/den in y, kept in lowest terms with a monic
// denominator. Zero is 0/1.
class YRational {
public:
    YRational() : num_(), den_(Cyclotomic(1)) {}
    YRational(const YPoly& p) : num_(p), den_(Cyclotomic(1)) {}  // NOLINT
    YRational(const Cyclotomic& c) : num_(c), den_(Cyclotomic(1)) {}  // NOLINT
    YRational(long c) : YRational(Cyclotomic(c)) {}  // NOLINT
    YRational(YPoly num, YPoly den);

    const YPoly& num() const noexcept { return num_; }
    const YPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }

    YRational inverse() const;

    YRational operator-() const;
    friend YRational operator+(const YRational& a, const YRational& b);
    friend YRational operator-(const YRational& a, const YRational& b);
    friend YRational operator*(const YRational& a, const YRational& b);
    friend YRational operator/(const YRational& a, const YRational& b);
    YRational& operator+=(const YRational& b) { return *this = *this + b; }
    YRational& operator-=(const YRational& b) { return *this = *this - b; }
    YRational& operator*=(const YRational& b) { return *this = *this * b; }
    friend bool operator==(const YRational& a, const YRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// "num" or "(num)/(den)".
    std::string to_string() const;

private:
    struct Reduced {};
    YRational(YPoly num, YPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    YPoly num_;
    YPoly den_;
};

/// Returns the polynomial r represents; throws NotPolynomial otherwise.
YPoly assert_polynomial(const YRational& r);

inline Cyclotomic eval_y(const YPoly& p, const Cyclotomic& v) { return p.eval(v); }

}  // namespace hypersym
