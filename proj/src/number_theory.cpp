#include "hypersym/number_theory.hpp"

#include <numeric>

#include "hypersym/errors.hpp"

namespace hypersym {

Rational make_rational(const BigInt& p, const BigInt& q) {
    if (q == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
    auto fail = [&](std::size_t pos) -> Rational {
        throw ParseError("malformed rational '" + text + "'", pos);
    };
    if (text.empty()) return fail(0);
    const auto slash = text.find('/');
    auto check_int = [&](std::size_t from, std::size_t to, bool allow_sign) {
        if (from >= to) fail(from);
        std::size_t i = from;
        if (allow_sign && (text[i] == '-' || text[i] == '+')) ++i;
        if (i >= to) fail(i);
        for (; i < to; ++i)
            if (text[i] < '0' || text[i] > '9') fail(i);
    };
    if (slash == std::string::npos) {
        check_int(0, text.size(), true);
        return Rational(BigInt(text[0] == '+' ? text.substr(1) : text));
    }
    check_int(0, slash, true);
    check_int(slash + 1, text.size(), false);
    const std::string num = text.substr(0, slash);
    const BigInt p(num[0] == '+' ? num.substr(1) : num);
    const BigInt q(text.substr(slash + 1));
    if (q == 0) throw ParseError("zero denominator in '" + text + "'", slash + 1);
    return make_rational(p, q);
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t mod_floor(std::int64_t k, std::int64_t n) {
    const std::int64_t r = k % n;
    return r < 0 ? r + n : r;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw InvalidArgument("euler_phi of non-positive integer");
    std::int64_t result = n;
    for (auto p : prime_divisors(n)) result = result / p * (p - 1);
    return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t e = 1; e <= n; ++e)
        if (n % e == 0) out.push_back(e);
    return out;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(std::int64_t n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt ipow(const BigInt& base, std::uint64_t exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

namespace {

// Exact division of monic integer polynomials (low degree first).
std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    const std::size_t dd = den.size() - 1;
    std::vector<BigInt> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        const BigInt c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (num[i] != 0) throw InternalMismatch("cyclotomic division left a remainder");
    return quot;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) throw InvalidArgument("cyclotomic_polynomial needs N >= 1");
    std::vector<BigInt> poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (auto e : divisors(n)) {
        if (e == n) continue;
        poly = divide_exact(std::move(poly), cyclotomic_polynomial(e));
    }
    return poly;
}

}  // namespace hypersym
