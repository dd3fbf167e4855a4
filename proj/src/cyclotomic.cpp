#include "hypersym/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "hypersym/errors.hpp"

namespace hypersym {

namespace {

using RVec = std::vector<Rational>;

// Data needed to test whether an element of Q(zeta_N) lies in Q(zeta_{N/p})
// and to rewrite it there: `rows` pick phi(N/p) independent rows of the
// embedding matrix and `inverse` inverts that square block.
struct Descent {
    std::int64_t prime = 0;
    std::int64_t sub = 0;
    std::vector<std::size_t> rows;
    std::vector<RVec> inverse;
};

// Immutable per-conductor tables.
struct ConductorData {
    std::int64_t n = 1;
    std::size_t phi = 1;
    std::vector<BigInt> cyclo;
    // power[k] = z^k mod Phi_N for 0 <= k < N.
    std::vector<std::vector<BigInt>> power;
    std::vector<Descent> descents;
};

std::vector<RVec> invert_square(std::vector<RVec> m) {
    const std::size_t k = m.size();
    std::vector<RVec> inv(k, RVec(k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && m[piv][col] == 0) ++piv;
        if (piv == k) throw InternalMismatch("singular descent block");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const Rational scale = 1 / m[col][col];
        for (std::size_t j = 0; j < k; ++j) {
            m[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t j = 0; j < k; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::unique_ptr<ConductorData> build(std::int64_t n) {
    auto data = std::make_unique<ConductorData>();
    data->n = n;
    data->cyclo = cyclotomic_polynomial(n);
    const std::size_t phi = data->cyclo.size() - 1;
    data->phi = phi;
    data->power.assign(static_cast<std::size_t>(n), std::vector<BigInt>(phi, 0));
    data->power[0][0] = 1;
    for (std::size_t k = 1; k < static_cast<std::size_t>(n); ++k) {
        const auto& prev = data->power[k - 1];
        auto& cur = data->power[k];
        const BigInt top = prev[phi - 1];
        for (std::size_t j = phi - 1; j > 0; --j) cur[j] = prev[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (std::size_t j = 0; j < phi; ++j) cur[j] -= top * data->cyclo[j];
    }
    for (auto p : prime_divisors(n)) {
        Descent d;
        d.prime = p;
        d.sub = n / p;
        const std::size_t sub_phi = static_cast<std::size_t>(euler_phi(d.sub));
        // Columns of the embedding are z^{i p}, i < sub_phi. Greedily pick
        // independent rows by incremental elimination.
        std::vector<RVec> echelon;
        std::vector<std::size_t> pivots;
        for (std::size_t row = 0; row < phi && d.rows.size() < sub_phi; ++row) {
            RVec v(sub_phi);
            for (std::size_t i = 0; i < sub_phi; ++i)
                v[i] = Rational(data->power[(i * static_cast<std::size_t>(p)) % static_cast<std::size_t>(n)][row]);
            for (std::size_t e = 0; e < echelon.size(); ++e) {
                const Rational f = v[pivots[e]];
                if (f == 0) continue;
                for (std::size_t j = 0; j < sub_phi; ++j) v[j] -= f * echelon[e][j];
            }
            std::size_t piv = 0;
            while (piv < sub_phi && v[piv] == 0) ++piv;
            if (piv == sub_phi) continue;
            const Rational s = 1 / v[piv];
            for (auto& x : v) x *= s;
            for (std::size_t e = 0; e < echelon.size(); ++e) {
                const Rational f = echelon[e][piv];
                if (f == 0) continue;
                for (std::size_t j = 0; j < sub_phi; ++j) echelon[e][j] -= f * v[j];
            }
            echelon.push_back(std::move(v));
            pivots.push_back(piv);
            d.rows.push_back(row);
        }
        std::vector<RVec> block(sub_phi, RVec(sub_phi));
        for (std::size_t r = 0; r < sub_phi; ++r)
            for (std::size_t i = 0; i < sub_phi; ++i)
                block[r][i] = Rational(data->power[(i * static_cast<std::size_t>(p)) % static_cast<std::size_t>(n)][d.rows[r]]);
        d.inverse = invert_square(std::move(block));
        data->descents.push_back(std::move(d));
    }
    return data;
}

const ConductorData& conductor_data(std::int64_t n) {
    static std::mutex mutex;
    static std::map<std::int64_t, std::unique_ptr<ConductorData>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build(n)).first;
    return *it->second;
}

// Reduces sum c_k z^k (any length) into the power basis of Q(zeta_N).
RVec reduce_raw(const ConductorData& data, const RVec& raw) {
    RVec out(data.phi, Rational(0));
    const std::size_t n = static_cast<std::size_t>(data.n);
    for (std::size_t k = 0; k < raw.size(); ++k) {
        if (raw[k] == 0) continue;
        const std::size_t kk = k % n;
        if (kk < data.phi) {
            out[kk] += raw[k];
            continue;
        }
        const auto& pw = data.power[kk];
        for (std::size_t j = 0; j < data.phi; ++j)
            if (pw[j] != 0) out[j] += raw[k] * pw[j];
    }
    return out;
}

bool tail_zero(const RVec& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] != 0) return false;
    return true;
}

// Tries to rewrite v (in Q(zeta_N)) inside Q(zeta_{N/p}).
bool try_descend(const ConductorData& data, const Descent& d, RVec& v) {
    const std::size_t k = d.rows.size();
    RVec coords(k, Rational(0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < k; ++r)
            if (d.inverse[i][r] != 0) coords[i] += d.inverse[i][r] * v[d.rows[r]];
    const std::size_t n = static_cast<std::size_t>(data.n);
    const std::size_t p = static_cast<std::size_t>(d.prime);
    for (std::size_t j = 0; j < data.phi; ++j) {
        Rational acc(0);
        for (std::size_t i = 0; i < k; ++i)
            if (coords[i] != 0) acc += coords[i] * data.power[(i * p) % n][j];
        if (acc != v[j]) return false;
    }
    v = std::move(coords);
    return true;
}

}  // namespace

Cyclotomic Cyclotomic::from_coeffs(std::int64_t conductor, std::vector<Rational> coeffs) {
    if (conductor < 1) throw InvalidArgument("conductor must be positive");
    const ConductorData* data = &conductor_data(conductor);
    if (coeffs.size() != data->phi) coeffs = reduce_raw(*data, coeffs);
    std::int64_t n = conductor;
    bool moved = true;
    while (moved && n > 1) {
        if (tail_zero(coeffs)) {
            n = 1;
            coeffs.resize(1);
            break;
        }
        moved = false;
        for (const auto& d : data->descents) {
            if (try_descend(*data, d, coeffs)) {
                n = d.sub;
                data = &conductor_data(n);
                moved = true;
                break;
            }
        }
    }
    if (n == 1) coeffs.resize(1);
    return Cyclotomic(n, std::move(coeffs), Canonical{});
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t n, std::int64_t k) {
    if (n < 1) throw InvalidArgument("root_of_unity needs N >= 1");
    const auto& data = conductor_data(n);
    const auto& pw = data.power[static_cast<std::size_t>(mod_floor(k, n))];
    RVec v(pw.begin(), pw.end());
    return from_coeffs(n, std::move(v));
}

Rational Cyclotomic::to_rational() const {
    if (conductor_ != 1) throw NotRational("value " + to_string() + " is not rational");
    return coeffs_[0];
}

std::vector<Rational> Cyclotomic::coefficients_in(std::int64_t m) const {
    if (m == conductor_) return coeffs_;
    if (m < 1 || m % conductor_ != 0)
        throw InvalidArgument("cannot embed conductor " + std::to_string(conductor_) +
                              " into " + std::to_string(m));
    const auto& data = conductor_data(m);
    const std::size_t step = static_cast<std::size_t>(m / conductor_);
    RVec out(data.phi, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const auto& pw = data.power[(i * step) % static_cast<std::size_t>(m)];
        for (std::size_t j = 0; j < data.phi; ++j)
            if (pw[j] != 0) out[j] += coeffs_[i] * pw[j];
    }
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    RVec c = coeffs_;
    for (auto& x : c) x = -x;
    return Cyclotomic(conductor_, std::move(c), Canonical{});
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (b.is_rational()) {
        RVec c = a.coeffs_;
        c[0] += b.coeffs_[0];
        return Cyclotomic(a.conductor_, std::move(c), Cyclotomic::Canonical{});
    }
    if (a.is_rational()) return b + a;
    const std::int64_t m = lcm(a.conductor_, b.conductor_);
    RVec c = a.coefficients_in(m);
    const RVec d = b.coefficients_in(m);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
    return Cyclotomic::from_coeffs(m, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (b.is_rational()) {
        const Rational& s = b.coeffs_[0];
        if (s == 0) return Cyclotomic();
        RVec c = a.coeffs_;
        for (auto& x : c) x *= s;
        return Cyclotomic(a.conductor_, std::move(c), Cyclotomic::Canonical{});
    }
    if (a.is_rational()) return b * a;
    const std::int64_t m = lcm(a.conductor_, b.conductor_);
    const RVec c = a.coefficients_in(m);
    const RVec d = b.coefficients_in(m);
    RVec raw(c.size() + d.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j)
            if (d[j] != 0) raw[i + j] += c[i] * d[j];
    }
    return Cyclotomic::from_coeffs(m, reduce_raw(conductor_data(m), raw));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

namespace {

void trim(RVec& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Polynomial long division over Q; divisor must be nonzero.
void divmod(const RVec& num, const RVec& den, RVec& quot, RVec& rem) {
    rem = num;
    trim(rem);
    quot.assign(rem.size() >= den.size() ? rem.size() - den.size() + 1 : 0, Rational(0));
    const Rational lead_inv = 1 / den.back();
    while (rem.size() >= den.size()) {
        const std::size_t shift = rem.size() - den.size();
        const Rational f = rem.back() * lead_inv;
        quot[shift] = f;
        for (std::size_t j = 0; j < den.size(); ++j) rem[shift + j] -= f * den[j];
        trim(rem);
    }
}

RVec poly_sub_mul(const RVec& a, const RVec& q, const RVec& b) {
    RVec out = a;
    if (!q.empty() && !b.empty()) {
        if (out.size() < q.size() + b.size() - 1) out.resize(q.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
    trim(out);
    return out;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic");
    if (is_rational()) return Cyclotomic(Rational(1 / coeffs_[0]));
    const auto& data = conductor_data(conductor_);
    // Extended Euclid on (Phi_N, a): track s with s*a = r (mod Phi_N).
    RVec r0(data.cyclo.begin(), data.cyclo.end());
    RVec r1 = coeffs_;
    trim(r1);
    RVec s0, s1{Rational(1)};
    while (r1.size() > 1) {
        RVec q, r;
        divmod(r0, r1, q, r);
        RVec s = poly_sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) throw InternalMismatch("cyclotomic inverse hit a common factor");
    const Rational c = 1 / r1[0];
    for (auto& x : s1) x *= c;
    return from_coeffs(conductor_, reduce_raw(data, s1));
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(1);
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

Cyclotomic Cyclotomic::galois(std::int64_t j) const {
    if (is_rational()) return *this;
    const std::int64_t jj = mod_floor(j, conductor_);
    if (gcd(jj, conductor_) != 1)
        throw InvalidArgument("Galois exponent " + std::to_string(j) + " not coprime to " +
                              std::to_string(conductor_));
    const auto& data = conductor_data(conductor_);
    RVec raw(static_cast<std::size_t>(conductor_), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        raw[(i * static_cast<std::size_t>(jj)) % static_cast<std::size_t>(conductor_)] += coeffs_[i];
    return from_coeffs(conductor_, reduce_raw(data, raw));
}

std::string Cyclotomic::to_string() const {
    if (is_rational()) return hypersym::to_string(coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << hypersym::to_string(mag);
            continue;
        }
        if (mag != 1) os << hypersym::to_string(mag) << '*';
        os << "zeta(" << conductor_ << ")";
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

Cyclotomic parse_cyclotomic(const std::string& text) {
    std::size_t pos = 0;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::size_t end = text.size();
    while (end > pos && text[end - 1] == ' ') --end;
    const std::string body = text.substr(pos, end - pos);
    bool neg = false;
    std::size_t i = 0;
    if (!body.empty() && body[0] == '-' && body.rfind("-zeta", 0) == 0) {
        neg = true;
        i = 1;
    }
    if (body.compare(i, 5, "zeta(") != 0) {
        try {
            return Cyclotomic(parse_rational(body));
        } catch (const ParseError& e) {
            throw ParseError("expected rational or zeta(N)^k in '" + text + "'", pos);
        }
    }
    i += 5;
    auto read_int = [&](bool allow_sign) -> std::int64_t {
        const std::size_t start = i;
        if (allow_sign && i < body.size() && body[i] == '-') ++i;
        const std::size_t digits = i;
        while (i < body.size() && body[i] >= '0' && body[i] <= '9') ++i;
        if (i == digits) throw ParseError("expected integer in '" + text + "'", pos + i);
        return std::stoll(body.substr(start, i - start));
    };
    const std::int64_t n = read_int(false);
    if (i >= body.size() || body[i] != ')') throw ParseError("expected ')' in '" + text + "'", pos + i);
    ++i;
    if (n < 1) throw ParseError("conductor must be positive", pos + 5);
    std::int64_t k = 1;
    if (i < body.size()) {
        if (body[i] != '^') throw ParseError("expected '^' in '" + text + "'", pos + i);
        ++i;
        k = read_int(true);
    }
    if (i != body.size()) throw ParseError("trailing characters in '" + text + "'", pos + i);
    const Cyclotomic z = Cyclotomic::root_of_unity(n, k);
    return neg ? -z : z;
}

}  // namespace hypersym
