#include "hypersym/ypoly.hpp"

#include <sstream>

#include "hypersym/errors.hpp"

namespace hypersym {

YPoly::YPoly(const Cyclotomic& c) {
    if (!c.is_zero()) c_.push_back(c);
}

YPoly::YPoly(std::vector<Cyclotomic> coeffs) : c_(std::move(coeffs)) { strip(); }

YPoly YPoly::monomial(const Cyclotomic& c, int degree) {
    if (c.is_zero()) return {};
    std::vector<Cyclotomic> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return YPoly(std::move(v));
}

void YPoly::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Cyclotomic YPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Cyclotomic();
    return c_[static_cast<std::size_t>(i)];
}

YPoly YPoly::monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return *this * lead().inverse();
}

Cyclotomic YPoly::eval(const Cyclotomic& v) const {
    Cyclotomic acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

YPoly YPoly::operator-() const {
    YPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

YPoly operator+(const YPoly& a, const YPoly& b) {
    const YPoly& big = a.c_.size() >= b.c_.size() ? a : b;
    const YPoly& small = a.c_.size() >= b.c_.size() ? b : a;
    YPoly r = big;
    for (std::size_t i = 0; i < small.c_.size(); ++i) r.c_[i] += small.c_[i];
    r.strip();
    return r;
}

YPoly operator-(const YPoly& a, const YPoly& b) { return a + (-b); }

YPoly operator*(const YPoly& a, const YPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Cyclotomic> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) out[i + j] += a.c_[i] * b.c_[j];
    }
    return YPoly(std::move(out));
}

YPoly operator*(const YPoly& a, const Cyclotomic& s) {
    if (s.is_zero()) return {};
    if (s.is_one()) return a;
    YPoly r = a;
    for (auto& c : r.c_) c *= s;
    return r;
}

void YPoly::divmod(const YPoly& num, const YPoly& divisor, YPoly& quot, YPoly& rem) {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    rem = num;
    const std::size_t dd = divisor.c_.size();
    if (rem.c_.size() < dd) {
        quot = YPoly();
        return;
    }
    std::vector<Cyclotomic> q(rem.c_.size() - dd + 1);
    const Cyclotomic lead_inv = divisor.lead().inverse();
    while (rem.c_.size() >= dd) {
        const std::size_t shift = rem.c_.size() - dd;
        const Cyclotomic f = rem.lead() * lead_inv;
        q[shift] = f;
        for (std::size_t j = 0; j + 1 < dd; ++j)
            if (!divisor.c_[j].is_zero()) rem.c_[shift + j] -= f * divisor.c_[j];
        rem.c_.pop_back();
        rem.strip();
    }
    quot = YPoly(std::move(q));
}

std::string YPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Cyclotomic& c = c_[i];
        if (c.is_zero()) continue;
        std::string mono;
        if (i == 1) mono = var;
        if (i > 1) mono = var + "^" + std::to_string(i);
        if (c.is_rational()) {
            Rational r = c.to_rational();
            const bool neg = r < 0;
            if (neg) r = -r;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            if (mono.empty())
                os << hypersym::to_string(r);
            else if (r == 1)
                os << mono;
            else
                os << hypersym::to_string(r) << '*' << mono;
        } else {
            if (!first) os << " + ";
            os << '(' << c.to_string() << ')';
            if (!mono.empty()) os << '*' << mono;
        }
        first = false;
    }
    return os.str();
}

YPoly gcd(const YPoly& a, const YPoly& b) {
    YPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        if (r1.is_constant()) return YPoly(Cyclotomic(1));
        YPoly q, r;
        YPoly::divmod(r0, r1, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return r0.monic();
}

YRational::YRational(YPoly num, YPoly den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = YPoly(Cyclotomic(1));
        return;
    }
    if (!den.is_constant()) {
        const YPoly g = gcd(num, den);
        if (!g.is_one()) {
            YPoly q, r;
            YPoly::divmod(num, g, q, r);
            num = std::move(q);
            YPoly::divmod(den, g, q, r);
            den = std::move(q);
        }
    }
    const Cyclotomic lead = den.lead();
    if (!lead.is_one()) {
        const Cyclotomic inv = lead.inverse();
        num = num * inv;
        den = den * inv;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

YRational YRational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return YRational(den_, num_);
}

YRational YRational::operator-() const { return YRational(-num_, den_, Reduced{}); }

YRational operator+(const YRational& a, const YRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return YRational(a.num_ + b.num_, a.den_, YRational::Reduced{});
    if (a.den_ == b.den_) return YRational(a.num_ + b.num_, a.den_);
    const YPoly g = gcd(a.den_, b.den_);
    YPoly ag, bg, r;
    YPoly::divmod(a.den_, g, ag, r);
    YPoly::divmod(b.den_, g, bg, r);
    return YRational(a.num_ * bg + b.num_ * ag, a.den_ * bg);
}

YRational operator-(const YRational& a, const YRational& b) { return a + (-b); }

YRational operator*(const YRational& a, const YRational& b) {
    if (a.is_zero() || b.is_zero()) return YRational();
    if (a.den_.is_one() && b.den_.is_one()) return YRational(a.num_ * b.num_, a.den_, YRational::Reduced{});
    // Cross-cancel so the final gcd works on smaller inputs.
    YPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    auto cancel = [](YPoly& n, YPoly& d) {
        if (d.is_constant()) return;
        const YPoly g = gcd(n, d);
        if (g.is_one()) return;
        YPoly q, r;
        YPoly::divmod(n, g, q, r);
        n = std::move(q);
        YPoly::divmod(d, g, q, r);
        d = std::move(q);
    };
    cancel(an, bd);
    cancel(bn, ad);
    YPoly num = an * bn, den = ad * bd;
    const Cyclotomic lead = den.lead();
    if (!lead.is_one()) {
        const Cyclotomic inv = lead.inverse();
        num = num * inv;
        den = den * inv;
    }
    return YRational(std::move(num), std::move(den), YRational::Reduced{});
}

YRational operator/(const YRational& a, const YRational& b) { return a * b.inverse(); }

std::string YRational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

YPoly assert_polynomial(const YRational& r) {
    if (!r.is_polynomial())
        throw NotPolynomial("expected a polynomial in y, got " + r.to_string());
    return r.num();
}

}  // namespace hypersym
