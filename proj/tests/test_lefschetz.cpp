#include "doctest.h"

#include <random>

#include "hypersym/errors.hpp"
#include "hypersym/lefschetz.hpp"
#include "hypersym/sampling.hpp"

using namespace hypersym;

namespace {

YPoly poly(std::initializer_list<long> c) {
    std::vector<Cyclotomic> v;
    for (long x : c) v.emplace_back(x);
    return YPoly(std::move(v));
}

// Fermat hypersurface sum x_i^d with a diagonal action x_i -> zeta_d^{j_i} x_i.
// Griffiths residues of x^{a-1} Omega / f^k with 1 <= a_i <= d-1, sum a = k d,
// form an eigenbasis of H^{n+1-k,k-1}_prim with eigenvalue prod zeta_d^{j_i a_i}.
// Returns the y-polynomial sum_p (-1)^p tr(H^{p,n-p}_prim) y^p.
YPoly fermat_primitive_oracle(std::int64_t d, const std::vector<std::int64_t>& j) {
    const std::size_t len = j.size();
    const std::int64_t n = static_cast<std::int64_t>(len) - 2;
    std::vector<Cyclotomic> by_p(static_cast<std::size_t>(n + 1));
    std::vector<std::int64_t> a(len, 1);
    while (true) {
        std::int64_t s = 0, phase = 0;
        for (std::size_t i = 0; i < len; ++i) {
            s += a[i];
            phase += j[i] * a[i];
        }
        if (s % d == 0) {
            const std::int64_t p = n + 1 - s / d;
            by_p[static_cast<std::size_t>(p)] = by_p[static_cast<std::size_t>(p)] + Cyclotomic::root_of_unity(d, phase);
        }
        std::size_t i = 0;
        while (i < len && a[i] == d - 1) a[i++] = 1;
        if (i == len) break;
        ++a[i];
    }
    for (std::size_t p = 1; p < by_p.size(); p += 2) by_p[p] = -by_p[p];
    return YPoly(std::move(by_p));
}

}  // namespace

TEST_CASE("chi_y of complete intersections") {
    CHECK(chi_y_complete_intersection({}, 3, {{0, Cyclotomic(1)}}) == projective_chi_y(2));
    CHECK(projective_chi_y(1) == poly({1, -1, 1}));
    CHECK(chi_y_complete_intersection({3}, 2, {{0, Cyclotomic(1)}}).is_zero());
    CHECK(chi_y_complete_intersection({4}, 3, {{0, Cyclotomic(1)}}) == poly({2, -20, 2}));
    // Quintic threefold: chi^p = sum_q (-1)^q h^{p,q}.
    CHECK(chi_y_complete_intersection({5}, 4, {{0, Cyclotomic(1)}}) == poly({0, 100, -100}));
    // Intersection of two quadrics in P^3 is an elliptic curve.
    CHECK(chi_y_complete_intersection({2, 2}, 3, {{0, Cyclotomic(1)}}).is_zero());
    // chi(P^2, O(1)) = 3 is the y^0 coefficient.
    CHECK(chi_y_complete_intersection({}, 2, {{1, Cyclotomic(1)}}).coeff(0) == Cyclotomic(3));
    CHECK(chi_y_complete_intersection({3, 3}, 1, {{0, Cyclotomic(1)}}).is_zero());
    CHECK_THROWS_AS(chi_y_complete_intersection({}, -1, {}), InvalidArgument);
}

TEST_CASE("chi_y_components") {
    CHECK(chi_y_components({{3, {}, BundleSpec()}}) == poly({1, -1, 1, -1}));
    CHECK(chi_y_components({}).is_zero());
    const Spectrum s = Spectrum::parse("3: 0, 1, 2");
    CHECK(chi_y_components(projective_components(s)) == poly({1, -1, 1}));
    CHECK_THROWS_AS(BundleSpec({{1, Cyclotomic(0), 1}}), InvalidArgument);
    CHECK(BundleSpec({{1, Cyclotomic(2), 0}}).terms().empty());
}

TEST_CASE("chi_y_projective") {
    CHECK(chi_y_projective(Spectrum::trivial(3)) == poly({1, -1, 1}));
    CHECK(chi_y_projective(Spectrum::parse("6: 0, 2, 3")) == poly({1, -1, 1}));
    CHECK(chi_y_projective(Spectrum::trivial(2)) == poly({1, -1}));
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 50; ++t) {
        const Spectrum s = sample_spectrum(rng, 1, 8, 12);
        CHECK(projective_component_sum(s) == projective_chi_y(s.dimension() - 2));
    }
}

TEST_CASE("chi_y_hypersurface") {
    CHECK(chi_y_hypersurface(HypersurfaceAction(3, Spectrum::trivial(3))).is_zero());
    CHECK(chi_y_hypersurface(HypersurfaceAction(4, Spectrum::trivial(4))) == poly({2, -20, 2}));
    const YPoly q = chi_y_hypersurface(HypersurfaceAction(4, Spectrum::parse("2: 0^3, 1")));
    CHECK(eval_y(q, Cyclotomic(-1)) == Cyclotomic(-4));
    for (std::int64_t n = 0; n <= 3; ++n)
        for (std::int64_t d = 2; d <= 5; ++d)
            CHECK(chi_y_hypersurface(HypersurfaceAction(d, Spectrum::trivial(n + 2))) ==
                  chi_y_complete_intersection({d}, n + 1, {{0, Cyclotomic(1)}}));
    CHECK_THROWS_AS(HypersurfaceAction(1, Spectrum::trivial(3)), InvalidArgument);
    CHECK_THROWS_AS(HypersurfaceAction(3, Spectrum::trivial(1)), InvalidArgument);
}

TEST_CASE("chi_y_primitive") {
    CHECK(chi_y_primitive(HypersurfaceAction(4, Spectrum::trivial(4))) == poly({1, -19, 1}));
    CHECK(chi_y_primitive(HypersurfaceAction(3, Spectrum::trivial(3))) == poly({1, -1}));
    CHECK_THROWS_AS(chi_y_primitive(HypersurfaceAction(3, Spectrum::trivial(2))), InvalidArgument);

    SUBCASE("Fermat hypersurfaces with diagonal actions") {
        std::mt19937_64 rng(7);
        for (int t = 0; t < 40; ++t) {
            const std::int64_t d = std::uniform_int_distribution<std::int64_t>(2, 5)(rng);
            const std::int64_t len = std::uniform_int_distribution<std::int64_t>(3, 5)(rng);
            std::vector<std::int64_t> j(static_cast<std::size_t>(len));
            std::map<std::int64_t, std::int64_t> mults;
            for (auto& x : j) {
                x = std::uniform_int_distribution<std::int64_t>(0, d - 1)(rng);
                ++mults[x];
            }
            const HypersurfaceAction a(d, Spectrum(d, mults));
            CAPTURE(a.spectrum.to_string());
            CAPTURE(d);
            CHECK(chi_y_primitive(a) == fermat_primitive_oracle(d, j));
        }
    }
    SUBCASE("specialization at y = -1 and degree bound") {
        std::mt19937_64 rng(99);
        for (int t = 0; t < 50; ++t) {
            const auto [a, f] = sample_smooth_action(rng);
            CAPTURE(f);
            CAPTURE(a.spectrum.to_string());
            const YPoly p = chi_y_primitive(a);
            CHECK(p.degree() <= a.dimension());
            CHECK(chi_y_hypersurface(a).degree() <= a.dimension());
            CHECK(eval_y(p, Cyclotomic(-1)) == trace_primitive(a));
        }
    }
    SUBCASE("Galois equivariance") {
        std::mt19937_64 rng(5);
        for (int t = 0; t < 20; ++t) {
            const auto a = sample_smooth_action(rng, {3, 5, 12, 2, 5}).action;
            const std::int64_t n = a.spectrum.conductor();
            for (std::int64_t j = 1; j < n; ++j) {
                if (gcd(j, n) != 1) continue;
                const HypersurfaceAction b(a.degree, a.spectrum.galois(j));
                CHECK(trace_primitive(b) == trace_primitive(a).galois(j));
                const YPoly pa = chi_y_primitive(a), pb = chi_y_primitive(b);
                CHECK(pa.degree() == pb.degree());
                for (int p = 0; p <= pa.degree(); ++p) CHECK(pb.coeff(p) == pa.coeff(p).galois(j));
            }
        }
    }
}

TEST_CASE("per-eigenvalue cross-check") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto a = sample_smooth_action(rng).action;
        const auto cc = primitive_cross_check(a);
        CHECK(cc.direct_agrees);
        CHECK(cc.printed_residual == YPoly::monomial(Cyclotomic(2), static_cast<int>(a.dimension() + 1)));
    }
}

TEST_CASE("trace_primitive") {
    CHECK(trace_primitive(HypersurfaceAction(4, Spectrum::trivial(4))) == Cyclotomic(21));
    CHECK(trace_primitive(HypersurfaceAction(4, Spectrum::parse("2: 0^3, 1"))) == Cyclotomic(-7));
    CHECK(trace_primitive(HypersurfaceAction(3, Spectrum::trivial(3))) == Cyclotomic(2));
    for (std::int64_t n = 1; n <= 4; ++n)
        for (std::int64_t d = 2; d <= 6; ++d)
            CHECK(trace_primitive(HypersurfaceAction(d, Spectrum::trivial(n + 2))) ==
                  Cyclotomic(Rational(primitive_dimension(n, d))));
}

TEST_CASE("primitive_dimension") {
    CHECK(primitive_dimension(2, 4) == 21);
    CHECK(primitive_dimension(3, 5) == 204);
    CHECK(primitive_dimension(1, 3) == 2);
    for (std::int64_t n = 0; n < 6; ++n) CHECK(primitive_dimension(n, 1) == 0);
    CHECK_THROWS_AS(primitive_dimension(-1, 3), InvalidArgument);
}

TEST_CASE("primitive_hodge_numbers") {
    auto ints = [](std::initializer_list<long> v) {
        std::vector<BigInt> out;
        for (long x : v) out.emplace_back(x);
        return out;
    };
    CHECK(primitive_hodge_numbers(2, 4) == ints({1, 19, 1}));
    CHECK(primitive_hodge_numbers(1, 3) == ints({1, 1}));
    CHECK(primitive_hodge_numbers(3, 5) == ints({1, 101, 101, 1}));
    for (std::int64_t n = 1; n <= 3; ++n) {
        for (std::int64_t d = 2; d <= 5; ++d) {
            const YPoly oracle = fermat_primitive_oracle(d, std::vector<std::int64_t>(static_cast<std::size_t>(n + 2), 0));
            const auto h = primitive_hodge_numbers(n, d);
            for (std::int64_t p = 0; p <= n; ++p) {
                const Rational c = oracle.coeff(static_cast<int>(p)).to_rational();
                CHECK(h[static_cast<std::size_t>(p)] == (p % 2 == 0 ? c : Rational(-c)));
            }
        }
    }
}

TEST_CASE("sampled actions") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        const auto [a, f] = sample_smooth_action(rng, {3, 6, 12, 2, 5});
        CHECK(a.spectrum.conductor() <= 12);
        CHECK(a.spectrum.dimension() >= 3);
        CHECK(a.spectrum.dimension() <= 6);
        CHECK(a.degree >= 2);
        CHECK(a.degree <= 5);
        CHECK(!f.empty());
    }
    // No quadric in three variables with these weights is smooth.
    CHECK_THROWS_AS(chi_y_hypersurface(HypersurfaceAction(2, Spectrum::parse("3: 0, 1, 1"))), NotPolynomial);
}
