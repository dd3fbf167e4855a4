#include "hypersym/laurent_series.hpp"

#include <algorithm>
#include <sstream>

#include "hypersym/errors.hpp"

namespace hypersym {

LaurentSeries LaurentSeries::make(std::int64_t valuation, std::vector<YRational> coeffs, std::int64_t end) {
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead].is_zero()) ++lead;
    LaurentSeries s;
    if (lead == coeffs.size()) {
        s.zero_end_ = end;
        return s;
    }
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
    s.zero_ = false;
    s.valuation_ = valuation + static_cast<std::int64_t>(lead);
    s.coeffs_ = std::move(coeffs);
    return s;
}

LaurentSeries LaurentSeries::from_polynomial(const std::vector<YRational>& coeffs, std::int64_t shift,
                                             std::size_t window) {
    if (window == 0) throw InvalidArgument("series window must be at least 1");
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead].is_zero()) ++lead;
    if (lead == coeffs.size()) return LaurentSeries();
    std::vector<YRational> c(window);
    for (std::size_t i = 0; i < window && lead + i < coeffs.size(); ++i) c[i] = coeffs[lead + i];
    LaurentSeries s;
    s.zero_ = false;
    s.valuation_ = shift + static_cast<std::int64_t>(lead);
    s.coeffs_ = std::move(c);
    return s;
}

std::int64_t LaurentSeries::valuation() const {
    if (zero_) throw WindowExhausted("valuation of the zero series");
    return valuation_;
}

std::int64_t LaurentSeries::precision_end() const noexcept {
    return zero_ ? zero_end_ : valuation_ + static_cast<std::int64_t>(coeffs_.size());
}

YRational LaurentSeries::coeff(std::int64_t m) const {
    const std::int64_t end = precision_end();
    if (m >= end)
        throw WindowExhausted("coefficient x^" + std::to_string(m) + " requested but series is only known mod x^" +
                              std::to_string(end));
    if (zero_) return YRational();
    if (m < valuation_)
        throw WindowExhausted("coefficient x^" + std::to_string(m) + " lies below the valuation " +
                              std::to_string(valuation_));
    return coeffs_[static_cast<std::size_t>(m - valuation_)];
}

LaurentSeries LaurentSeries::truncated(std::size_t window) const {
    if (zero_ || window >= coeffs_.size()) return *this;
    if (window == 0) throw InvalidArgument("series window must be at least 1");
    LaurentSeries s = *this;
    s.coeffs_.resize(window);
    return s;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    const std::int64_t end = std::min(a.precision_end(), b.precision_end());
    if (a.zero_ && b.zero_) {
        LaurentSeries z;
        z.zero_end_ = end;
        return z;
    }
    std::int64_t v = LaurentSeries::kExact;
    if (!a.zero_) v = std::min(v, a.valuation_);
    if (!b.zero_) v = std::min(v, b.valuation_);
    if (end <= v) {
        LaurentSeries z;
        z.zero_end_ = end;
        return z;
    }
    std::vector<YRational> c(static_cast<std::size_t>(end - v));
    auto accumulate = [&](const LaurentSeries& s) {
        if (s.zero_) return;
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
            const std::int64_t k = s.valuation_ + static_cast<std::int64_t>(i) - v;
            if (k >= static_cast<std::int64_t>(c.size())) break;
            c[static_cast<std::size_t>(k)] += s.coeffs_[i];
        }
    };
    accumulate(a);
    accumulate(b);
    return LaurentSeries::make(v, std::move(c), end);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.zero_ || b.zero_) {
        LaurentSeries z;
        const LaurentSeries& zs = a.zero_ ? a : b;
        const LaurentSeries& other = a.zero_ ? b : a;
        if (zs.zero_end_ >= LaurentSeries::kExact || (other.zero_ && other.zero_end_ >= LaurentSeries::kExact))
            return z;
        z.zero_end_ = zs.zero_end_ + (other.zero_ ? other.zero_end_ : other.valuation_);
        return z;
    }
    const std::size_t t = std::min(a.coeffs_.size(), b.coeffs_.size());
    std::vector<YRational> c(t);
    for (std::size_t k = 0; k < t; ++k) {
        YRational acc;
        for (std::size_t i = 0; i <= k; ++i) {
            if (a.coeffs_[i].is_zero() || b.coeffs_[k - i].is_zero()) continue;
            acc += a.coeffs_[i] * b.coeffs_[k - i];
        }
        c[k] = std::move(acc);
    }
    LaurentSeries s;
    s.zero_ = false;
    s.valuation_ = a.valuation_ + b.valuation_;
    s.coeffs_ = std::move(c);
    return s;
}

LaurentSeries operator*(const LaurentSeries& a, const YRational& s) {
    if (s.is_zero()) return LaurentSeries();
    LaurentSeries r = a;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

LaurentSeries LaurentSeries::reciprocal() const {
    if (zero_) throw ZeroReciprocal("reciprocal of a series that vanishes within its window");
    const std::size_t t = coeffs_.size();
    std::vector<YRational> b(t);
    const YRational inv0 = coeffs_[0].inverse();
    b[0] = inv0;
    for (std::size_t k = 1; k < t; ++k) {
        YRational acc;
        for (std::size_t i = 1; i <= k; ++i) {
            if (coeffs_[i].is_zero() || b[k - i].is_zero()) continue;
            acc += coeffs_[i] * b[k - i];
        }
        b[k] = -(acc * inv0);
    }
    LaurentSeries s;
    s.zero_ = false;
    s.valuation_ = -valuation_;
    s.coeffs_ = std::move(b);
    return s;
}

LaurentSeries LaurentSeries::pow(std::int64_t e) const {
    if (e < 0) return reciprocal().pow(-e);
    if (e == 0) return one(zero_ ? 1 : coeffs_.size());
    LaurentSeries result;
    bool have = false;
    LaurentSeries base = *this;
    while (e > 0) {
        if (e & 1) {
            result = have ? result * base : base;
            have = true;
        }
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    if (zero_) {
        os << "0";
        if (zero_end_ < kExact) os << " + O(x^" << zero_end_ << ")";
        return os.str();
    }
    os << "x^" << valuation_ << " * (";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) os << " + ";
        os << '(' << coeffs_[i].to_string() << ')';
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
    }
    os << " + O(x^" << coeffs_.size() << "))";
    return os.str();
}

LaurentSeries one_plus_xy_pow(std::int64_t e, std::size_t window) {
    const std::uint64_t m = static_cast<std::uint64_t>(e < 0 ? -e : e);
    std::vector<YRational> c;
    for (std::uint64_t k = 0; k <= m && k < window; ++k)
        c.emplace_back(YPoly::monomial(Cyclotomic(Rational(binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(k)))),
                                       static_cast<int>(k)));
    const LaurentSeries base = LaurentSeries::from_polynomial(c, 0, window);
    return e < 0 ? base.reciprocal() : base;
}

LaurentSeries one_minus_x_pow(std::int64_t e, std::size_t window) {
    const std::uint64_t m = static_cast<std::uint64_t>(e < 0 ? -e : e);
    std::vector<YRational> c;
    for (std::uint64_t k = 0; k <= m && k < window; ++k) {
        BigInt b = binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(k));
        if (k % 2 == 1) b = -b;
        c.emplace_back(Cyclotomic(Rational(b)));
    }
    const LaurentSeries base = LaurentSeries::from_polynomial(c, 0, window);
    return e < 0 ? base.reciprocal() : base;
}

namespace {

// Numerator and denominator of Psi_{gamma,e}, each with `window` terms.
void psi_parts(const Cyclotomic& gamma, std::int64_t e, std::size_t window, LaurentSeries& num,
               LaurentSeries& den) {
    if (gamma.is_zero()) throw InvalidArgument("Psi needs gamma != 0");
    if (e == 0 && gamma.is_one()) throw InvalidArgument("Psi_{1,0} is undefined");
    const LaurentSeries a = one_plus_xy_pow(e, window) * YRational(gamma);
    const LaurentSeries b = one_minus_x_pow(e, window);
    num = a + b * YRational(YPoly::y());
    den = a - b;
}

}  // namespace

LaurentSeries psi(const Cyclotomic& gamma, std::int64_t e, std::size_t window) {
    if (window == 0) throw InvalidArgument("series window must be at least 1");
    LaurentSeries num, den;
    psi_parts(gamma, e, window + 1, num, den);
    return (num * den.reciprocal()).truncated(window);
}

LaurentSeries psi_inverse(const Cyclotomic& gamma, std::int64_t e, std::size_t window) {
    if (window == 0) throw InvalidArgument("series window must be at least 1");
    LaurentSeries num, den;
    psi_parts(gamma, e, window + 1, num, den);
    return (den * num.reciprocal()).truncated(window);
}

LaurentSeries phi_multidegree(const std::vector<std::int64_t>& dd, std::size_t window) {
    if (window == 0) throw InvalidArgument("series window must be at least 1");
    std::size_t big = window + 3;
    for (auto d : dd) {
        if (d < 1) throw InvalidArgument("multidegree entries must be >= 1");
        big += static_cast<std::size_t>(d);
    }
    const YRational y(YPoly::y());
    LaurentSeries num = LaurentSeries::one(big);
    LaurentSeries den = one_plus_xy_pow(1, big) * one_minus_x_pow(1, big);
    for (auto d : dd) {
        const LaurentSeries a = one_plus_xy_pow(d, big);
        const LaurentSeries b = one_minus_x_pow(d, big);
        num *= a - b;
        den *= a + b * y;
    }
    return (num * den.reciprocal()).truncated(window);
}

}  // namespace hypersym
