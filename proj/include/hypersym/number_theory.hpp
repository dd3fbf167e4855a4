#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hypersym {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds p/q in lowest terms with a positive denominator.
Rational make_rational(const BigInt& p, const BigInt& q);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& r);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
std::int64_t euler_phi(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::vector<std::int64_t> prime_divisors(std::int64_t n);

/// Reduces k into [0, n).
std::int64_t mod_floor(std::int64_t k, std::int64_t n);

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);
BigInt ipow(const BigInt& base, std::uint64_t exp);

/// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
/// Computed by exact division of x^N - 1 by every Phi_e with e | N, e < N.
std::vector<BigInt> cyclotomic_polynomial(std::int64_t n);

}  // namespace hypersym
