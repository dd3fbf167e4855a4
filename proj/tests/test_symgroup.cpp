#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "hypersym/errors.hpp"
#include "hypersym/lefschetz.hpp"
#include "hypersym/symgroup.hpp"

using namespace hypersym;

namespace {

Partition P(std::initializer_list<std::int64_t> parts) { return Partition(std::vector<std::int64_t>(parts)); }

Cyclotomic C(long v) { return Cyclotomic(v); }

// Brute-force SSYT count: fill cells row by row with values 1..len(mu).
std::int64_t ssyt_count(const Partition& shape, const Partition& content) {
    const auto& rows = shape.parts();
    std::vector<std::vector<std::int64_t>> t;
    for (auto r : rows) t.emplace_back(static_cast<std::size_t>(r), 0);
    std::vector<std::int64_t> left = content.parts();
    const std::int64_t k = content.length();
    std::int64_t count = 0;
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
        if (r == rows.size()) {
            ++count;
            return;
        }
        if (c == t[r].size()) return fill(r + 1, 0);
        for (std::int64_t v = 1; v <= k; ++v) {
            if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
            if (c > 0 && t[r][c - 1] > v) continue;
            if (r > 0 && t[r - 1][c] >= v) continue;
            t[r][c] = v;
            --left[static_cast<std::size_t>(v - 1)];
            fill(r, c + 1);
            ++left[static_cast<std::size_t>(v - 1)];
        }
        t[r][c] = 0;
    };
    fill(0, 0);
    return count;
}

// A concrete permutation of {0..n-1} with the given cycle type.
std::vector<std::int64_t> permutation_of_type(const Partition& mu) {
    std::vector<std::int64_t> perm(static_cast<std::size_t>(mu.n()));
    std::int64_t start = 0;
    for (auto len : mu.parts()) {
        for (std::int64_t i = 0; i < len; ++i) perm[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
        start += len;
    }
    return perm;
}

// Number of row-tabloids of shape mu fixed by a permutation of type nu
// (the permutation character of M^mu), by listing all tabloids.
std::int64_t fixed_tabloids(const Partition& mu, const Partition& nu) {
    const std::size_t n = static_cast<std::size_t>(mu.n());
    const auto perm = permutation_of_type(nu);
    std::vector<std::int64_t> row_of(n);
    std::size_t pos = 0;
    for (std::size_t r = 0; r < mu.parts().size(); ++r)
        for (std::int64_t j = 0; j < mu.parts()[r]; ++j) row_of[pos++] = static_cast<std::int64_t>(r);
    std::int64_t fixed = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = row_of[static_cast<std::size_t>(perm[i])] == row_of[i];
        if (ok) ++fixed;
    } while (std::next_permutation(row_of.begin(), row_of.end()));
    return fixed;
}

// Number of weakly increasing words in [l]^n whose letter multiplicities sort to mu.
std::int64_t multisets_with_shape(const Partition& mu, std::int64_t l) {
    const std::int64_t n = mu.n();
    std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);
    std::int64_t count = 0;
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t lo) {
        if (i == w.size()) {
            std::map<std::int64_t, std::int64_t> m;
            for (auto x : w) ++m[x];
            std::vector<std::int64_t> parts;
            for (const auto& [x, c] : m) parts.push_back(c);
            if (Partition(parts) == mu) ++count;
            return;
        }
        for (std::int64_t v = lo; v < l; ++v) {
            w[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, 0);
    return count;
}

// Fixed points of a permutation of type mu on {a in A^n : sum a = 0}.
std::int64_t fixed_zero_sum_tuples(const Partition& mu, const std::vector<std::int64_t>& orders) {
    const std::size_t n = static_cast<std::size_t>(mu.n());
    const auto perm = permutation_of_type(mu);
    std::int64_t l = 1;
    for (auto c : orders) l *= c;
    std::int64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= l;
    std::int64_t fixed = 0;
    std::vector<std::vector<std::int64_t>> tuple(n, std::vector<std::int64_t>(orders.size()));
    for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t c = code;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < orders.size(); ++j) {
                tuple[i][j] = c % orders[j];
                c /= orders[j];
            }
        bool zero = true;
        for (std::size_t j = 0; j < orders.size() && zero; ++j) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < n; ++i) s += tuple[i][j];
            zero = s % orders[j] == 0;
        }
        if (!zero) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = tuple[static_cast<std::size_t>(perm[i])] == tuple[i];
        if (ok) ++fixed;
    }
    return fixed;
}

BigInt naive_binomial(const BigInt& top, std::int64_t k) {
    BigInt num = 1, den = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        num *= top - i;
        den *= i + 1;
    }
    return num / den;
}

}  // namespace

TEST_CASE("partitions and classes") {
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(8).size() == 22);
    CHECK(partitions(1).size() == 1);
    CHECK(partitions(4).front() == P({4}));
    CHECK(partitions(4).back() == P({1, 1, 1, 1}));
    CHECK(class_size(P({2, 1})) == 3);
    for (std::int64_t n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (const auto& mu : partitions(n)) total += class_size(mu);
        CHECK(total == factorial(n));
        const auto ps = partitions(n);
        CHECK(std::is_sorted(ps.begin(), ps.end()));
    }
    CHECK(P({1, 3, 2}).to_string() == "[3,2,1]");
    CHECK(Partition::parse(" [ 3, 1,2 ] ") == P({3, 2, 1}));
    CHECK(Partition::parse("[]").n() == 0);
    CHECK_THROWS_AS(Partition::parse("[3,,1]"), ParseError);
    CHECK_THROWS_AS(Partition::parse("[3,0]"), ParseError);
    CHECK_THROWS_AS(Partition::parse("3,1"), ParseError);
    CHECK_THROWS_AS(P({2, 0}), InvalidArgument);
}

TEST_CASE("Murnaghan-Nakayama characters") {
    for (std::int64_t n = 1; n <= 6; ++n) {
        const Partition row({n});
        const Partition col(std::vector<std::int64_t>(static_cast<std::size_t>(n), 1));
        for (const auto& mu : partitions(n)) {
            CHECK(mn_character(row, mu) == 1);
            CHECK(mn_character(col, mu) == ((n - mu.length()) % 2 == 0 ? 1 : -1));
        }
    }
    CHECK(mn_character(P({2, 1}), P({1, 1, 1})) == 2);
    CHECK(mn_character(P({2, 1}), P({2, 1})) == 0);
    CHECK(mn_character(P({2, 1}), P({3})) == -1);

    SUBCASE("orthogonality for n <= 8") {
        for (std::int64_t n = 1; n <= 8; ++n) {
            const auto& t = character_table(n);
            const auto& cls = t.classes();
            const BigInt order = factorial(n);
            for (std::size_t a = 0; a < cls.size(); ++a) {
                for (std::size_t b = 0; b < cls.size(); ++b) {
                    BigInt row = 0, col = 0;
                    for (std::size_t m = 0; m < cls.size(); ++m) {
                        row += class_size(cls[m]) * t.value(a, m) * t.value(b, m);
                        col += BigInt(t.value(m, a)) * t.value(m, b);
                    }
                    CHECK(row == (a == b ? order : BigInt(0)));
                    CHECK(col == (a == b ? centralizer_order(cls[a]) : BigInt(0)));
                }
            }
        }
    }
    SUBCASE("agrees with permutation modules via Young's rule") {
        // chi^{M^mu} = sum_lambda K_{lambda mu} chi^lambda with K unitriangular;
        // solve for chi^lambda from tabloid counts and brute-force Kostka numbers.
        for (std::int64_t n = 1; n <= 6; ++n) {
            const auto cls = partitions(n);
            const std::size_t k = cls.size();
            std::vector<std::vector<std::int64_t>> chi(k, std::vector<std::int64_t>(k));
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t c = 0; c < k; ++c) {
                    std::int64_t v = fixed_tabloids(cls[i], cls[c]);
                    for (std::size_t j = 0; j < i; ++j) v -= ssyt_count(cls[j], cls[i]) * chi[j][c];
                    chi[i][c] = v;
                }
                CHECK(ssyt_count(cls[i], cls[i]) == 1);
            }
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t c = 0; c < k; ++c) CHECK(mn_character(cls[i], cls[c]) == chi[i][c]);
        }
    }
}

TEST_CASE("inner products and verdicts") {
    for (std::int64_t n = 1; n <= 6; ++n)
        for (const auto& lam : partitions(n)) {
            const auto chi = irreducible_character(lam);
            CHECK(inner_product(chi, chi) == C(1));
        }
    const auto t22 = theta_tilde(2, 2);
    CHECK(t22(P({1, 1})) == C(2));
    CHECK(t22(P({2})) == C(1));
    const auto v22 = is_character(t22);
    CHECK_FALSE(v22.is_character);
    CHECK(v22.multiplicities.at(P({2})) == Rational(3, 2));
    REQUIRE(v22.witness.has_value());
    CHECK(*v22.witness == P({2}));
    CHECK_FALSE(v22.reason.empty());

    const auto v23 = is_character(theta_tilde(2, 3));
    CHECK(v23.is_character);
    CHECK(v23.multiplicities.at(P({2})) == 2);
    CHECK(v23.multiplicities.at(P({1, 1})) == 1);
    CHECK(decompose(theta_tilde(2, 3)) == v23.multiplicities);

    CHECK(is_character(theta(3, 2) * Cyclotomic(0)).is_character);
    const auto neg = is_character(irreducible_character(P({2, 1})) * Cyclotomic(-1));
    CHECK_FALSE(neg.is_character);
    CHECK(*neg.witness == P({2, 1}));

    // A class function with irrational multiplicities is reported, not thrown.
    std::map<Partition, Cyclotomic> vals{{P({2}), Cyclotomic::root_of_unity(3, 1)}, {P({1, 1}), C(0)}};
    const ClassFunction odd(2, vals);
    const auto v = is_character(odd);
    CHECK_FALSE(v.is_character);
    CHECK(*v.witness == P({2}));
    CHECK_THROWS_AS(decompose(odd), NotRational);
    CHECK_THROWS_AS(ClassFunction(2, {{P({2}), C(1)}}), InvalidArgument);
}

TEST_CASE("cycle statistics and spectra") {
    const auto mu = P({3, 2, 1});
    CHECK(m_e(mu, 1) == 3);
    CHECK(m_e(mu, 2) == 1);
    CHECK(m_e(mu, 3) == 1);
    CHECK(m_prime_e(P({1, 1, 1}), 1) == 2);
    CHECK(m_prime_e(mu, 2) == 1);
    CHECK(d_of(P({4, 2})) == 2);
    CHECK(d_of(mu) == 1);
    CHECK(permutation_spectrum(P({3})) == Spectrum(3, {{0, 1}, {1, 1}, {2, 1}}));
    CHECK(permutation_spectrum(P({2, 1})) == Spectrum(2, {{0, 2}, {1, 1}}));
    CHECK(reduced_permutation_spectrum(P({1, 1, 1, 1})) == Spectrum::trivial(3));
    CHECK_THROWS_AS(reduced_permutation_spectrum(P({1})), EmptySpectrum);
    for (std::int64_t n = 1; n <= 7; ++n)
        for (const auto& nu : partitions(n))
            for (std::int64_t e = 1; e <= n; ++e) {
                // eigenvalues of exact order e occur m_e times each
                const Spectrum s = permutation_spectrum(nu);
                for (std::int64_t j = 0; j < e; ++j)
                    if (gcd(j, e) == 1) CHECK(s.multiplicity_of(e, j) == m_e(nu, e));
            }
}

TEST_CASE("hypersurface class functions") {
    const auto chi = type_I_character(1, 3);
    CHECK(chi(P({1, 1, 1})) == C(2));
    CHECK(chi(P({2, 1})) == C(-2));
    CHECK(chi(P({3})) == C(2));
    const auto dec = decompose(chi);
    CHECK(dec.at(P({1, 1, 1})) == 2);
    CHECK(dec.at(P({3})) == 0);
    CHECK(is_character(type_I_character(2, 2)).is_character);
    CHECK(is_character(type_II_character(2, 3)).is_character);

    for (std::int64_t n = 1; n <= 4; ++n) {
        for (std::int64_t d = 2; d <= 5; ++d) {
            const auto t1 = type_I_character(n, d);
            const auto t2 = type_II_character(n, d);
            const Partition id1(std::vector<std::int64_t>(static_cast<std::size_t>(n + 2), 1));
            const Partition id2(std::vector<std::int64_t>(static_cast<std::size_t>(n + 3), 1));
            CHECK(t1(id1) == Cyclotomic(Rational(primitive_dimension(n, d))));
            CHECK(t2(id2) == Cyclotomic(Rational(primitive_dimension(n, d))));
            for (const auto& mu : partitions(n + 2))
                CHECK(t1(mu) == trace_primitive(HypersurfaceAction(d, permutation_spectrum(mu))));
            for (const auto& mu : partitions(n + 3))
                CHECK(t2(mu) == trace_primitive(HypersurfaceAction(d, reduced_permutation_spectrum(mu))));
            const auto sum = type_I_character(n + 1, d) + t2;
            CHECK(sum == signed_theta_tilde(n + 3, d - 1));
            for (const auto& mu : partitions(n + 3)) {
                BigInt expect = ipow(BigInt(d - 1), static_cast<std::uint64_t>(m_e(mu, 1) - 1)) * sign_of(mu);
                CHECK(sum(mu) == Cyclotomic(Rational(expect)));
            }
            CHECK(is_character(sum).is_character == (gcd(n + 3, d - 1) == 1));
        }
    }
    CHECK_THROWS_AS(type_I_character(0, 3), InvalidArgument);
    CHECK_THROWS_AS(type_II_character(1, 1), InvalidArgument);
}

TEST_CASE("theta functions") {
    for (std::int64_t n = 1; n <= 7; ++n) {
        for (std::int64_t l = 1; l <= 6; ++l) {
            CAPTURE(n);
            CAPTURE(l);
            const bool coprime = gcd(n, l) == 1;
            CHECK(is_character(theta(n, l)).is_character);
            CHECK(is_character(theta_tilde(n, l)).is_character == coprime);
            CHECK(is_character(signed_theta_tilde(n, l)).is_character == coprime);
            if (coprime) {
                const auto a = decompose(theta(n, l));
                const auto b = decompose(theta_tilde(n, l));
                for (const auto& [lam, m] : a) CHECK(m == Rational(l) * b.at(lam));
            }
        }
    }
}

TEST_CASE("chi_M") {
    const AbelianGroupSpec z2({2});
    CHECK(d_A(P({2}), z2) == 2);
    CHECK(chi_M(2, z2)(P({2})) == C(2));
    const std::vector<std::vector<std::int64_t>> groups = {{2}, {3}, {4}, {2, 2}};
    for (const auto& g : groups) {
        const AbelianGroupSpec a(g);
        for (std::int64_t n = 1; n <= 5; ++n) {
            const auto f = chi_M(n, a);
            const Partition id(std::vector<std::int64_t>(static_cast<std::size_t>(n), 1));
            CHECK(f(id) == Cyclotomic(Rational(ipow(BigInt(a.order()), static_cast<std::uint64_t>(n - 1)))));
            CHECK(is_character(f).is_character);
            for (const auto& mu : partitions(n)) CHECK(f(mu) == C(fixed_zero_sum_tuples(mu, g)));
        }
    }
    CHECK(AbelianGroupSpec().order() == 1);
    CHECK(AbelianGroupSpec({2, 2}).to_string() == "Z/2 x Z/2");
    CHECK_THROWS_AS(AbelianGroupSpec({1}), InvalidArgument);
}

TEST_CASE("Kostka numbers and c_mu") {
    CHECK(kostka(P({2, 1}), P({1, 1, 1})) == 2);
    CHECK(kostka(P({3}), P({1, 1, 1})) == 1);
    CHECK(kostka(P({1, 1, 1}), P({2, 1})) == 0);
    for (std::int64_t n = 1; n <= 6; ++n)
        for (const auto& lam : partitions(n))
            for (const auto& mu : partitions(n)) CHECK(kostka(lam, mu) == ssyt_count(lam, mu));
    CHECK(c_mu(P({1, 1, 1}), 3) == 1);
    CHECK(c_mu(P({2, 1}), 3) == 6);
    CHECK(c_mu(P({1, 1, 1, 1}), 3) == 0);
    for (std::int64_t n = 1; n <= 6; ++n)
        for (std::int64_t l = 1; l <= 5; ++l) {
            BigInt total = 0;
            for (const auto& mu : partitions(n)) {
                total += c_mu(mu, l);
                if (l <= 4) CHECK(c_mu(mu, l) == multisets_with_shape(mu, l));
            }
            CHECK(total == binomial(n + l - 1, n));
        }
    for (std::int64_t n = 1; n <= 6; ++n)
        for (std::int64_t l = 1; l <= 4; ++l)
            for (const auto& lam : partitions(n)) {
                const auto dec = decompose(theta(n, l));
                CHECK(Rational(schur_multiplicity_theta(lam, l)) == dec.at(lam));
            }
}

TEST_CASE("trivial and sign multiplicities") {
    CHECK(trivial_multiplicity(2, 2) == 3);
    CHECK(sign_multiplicity(2, 2) == 1);
    CHECK(trivial_multiplicity(3, 2) == 4);
    CHECK(sign_multiplicity(3, 2) == 0);
    for (std::int64_t l = 1; l <= 6; ++l) {
        CHECK(trivial_multiplicity(1, l) == l);
        CHECK(sign_multiplicity(1, l) == l);
    }
    for (std::int64_t n = 1; n <= 7; ++n)
        for (std::int64_t l = 1; l <= 6; ++l) {
            CHECK(trivial_multiplicity(n, l) == binomial(n + l - 1, n));
            CHECK(sign_multiplicity(n, l) == binomial(l, n));
        }
}

TEST_CASE("find_min_alpha") {
    CHECK(find_min_alpha(2, 2) == 1);
    for (std::int64_t n = 1; n <= 8; ++n)
        for (std::int64_t l = 2; l <= 8; ++l) {
            if (gcd(n, l) == 1) {
                CHECK_THROWS_AS(find_min_alpha(n, l), InvalidArgument);
                continue;
            }
            const std::int64_t alpha = find_min_alpha(n, l);
            BigInt q = ipow(BigInt(l), static_cast<std::uint64_t>(alpha));
            CHECK(naive_binomial(q + n - 1, n) % q != 0);
            for (std::int64_t b = 1; b < alpha; ++b) {
                BigInt qb = ipow(BigInt(l), static_cast<std::uint64_t>(b));
                CHECK(naive_binomial(qb + n - 1, n) % qb == 0);
            }
        }
    // (4, 2): binomial(5,4) = 5 is odd already.
    CHECK(find_min_alpha(4, 2) == 1);
    CHECK_THROWS_AS(find_min_alpha(4, 2, 0), InvalidArgument);
}
