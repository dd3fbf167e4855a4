#include "hypersym/lefschetz.hpp"

#include <algorithm>

#include "hypersym/errors.hpp"

namespace hypersym {

namespace {

YPoly minus_y_pow(std::int64_t k) {
    return YPoly::monomial(Cyclotomic(k % 2 == 0 ? 1 : -1), static_cast<int>(k));
}

// Analytic valuation of Phi_dd * prod Psi_{1/alpha,e}^m.
std::int64_t component_valuation(const FixedComponentData& z) {
    std::int64_t v = static_cast<std::int64_t>(z.multidegree.size());
    for (const auto& t : z.normal_bundle.terms())
        if (t.alpha.is_one()) v -= t.mult;
    return v;
}

std::size_t window_for(std::int64_t target, std::int64_t valuation, std::size_t slack) {
    const std::int64_t t = target - valuation + 1 + static_cast<std::int64_t>(slack);
    return static_cast<std::size_t>(std::max<std::int64_t>(t, 1));
}

YRational extract(const LaurentSeries& s, std::int64_t m) {
    if (!s.is_zero() && m < s.valuation()) return YRational();
    return coeff_x(s, m);
}

}  // namespace

BundleSpec::BundleSpec(std::vector<BundleTerm> terms) {
    for (auto& t : terms) {
        if (t.alpha.is_zero()) throw InvalidArgument("bundle eigenvalue must be nonzero");
        if (t.mult == 0) continue;
        terms_.push_back(std::move(t));
    }
}

YPoly projective_chi_y(std::int64_t n) {
    YPoly out;
    for (std::int64_t p = 0; p <= n + 1; ++p) out = out + minus_y_pow(p);
    return out;
}

YPoly chi_y_complete_intersection(const std::vector<std::int64_t>& dd, std::int64_t m, const HPolynomial& f,
                                  std::size_t window_slack) {
    if (m < 0) throw InvalidArgument("ambient dimension must be non-negative");
    const std::int64_t v = static_cast<std::int64_t>(dd.size());
    if (m < v) return YPoly();
    const std::size_t w = window_for(m, v, window_slack);
    LaurentSeries fh;
    for (const auto& [k, c] : f) {
        if (c.is_zero()) continue;
        fh += one_plus_xy_pow(k, w) * one_minus_x_pow(-k, w) * YRational(c);
    }
    const LaurentSeries s = phi_multidegree(dd, w) * fh;
    return assert_polynomial(extract(s, m));
}

LaurentSeries component_series(const FixedComponentData& z, std::size_t window_slack) {
    const std::size_t w = window_for(z.ambient_dim, component_valuation(z), window_slack);
    LaurentSeries s = phi_multidegree(z.multidegree, w);
    for (const auto& t : z.normal_bundle.terms()) s *= psi(t.alpha.inverse(), t.exponent, w).pow(t.mult);
    return s;
}

YPoly chi_y_components(const std::vector<FixedComponentData>& components, std::size_t window_slack) {
    YRational total;
    for (const auto& z : components) {
        if (z.ambient_dim < 0) throw InvalidArgument("component ambient dimension must be non-negative");
        if (z.ambient_dim < component_valuation(z)) continue;
        total += extract(component_series(z, window_slack), z.ambient_dim);
    }
    return assert_polynomial(total);
}

std::vector<FixedComponentData> projective_components(const Spectrum& s) {
    std::vector<FixedComponentData> out;
    for (const auto& [k, m] : s.mults()) {
        const Cyclotomic alpha = s.eigenvalue(k);
        std::vector<BundleTerm> terms;
        for (const auto& [k2, m2] : s.mults())
            if (k2 != k) terms.push_back({1, s.eigenvalue(k2) / alpha, m2});
        out.push_back({m - 1, {}, BundleSpec(std::move(terms))});
    }
    return out;
}

std::vector<FixedComponentData> hypersurface_components(const HypersurfaceAction& a) {
    std::vector<FixedComponentData> out = projective_components(a.spectrum);
    std::size_t i = 0;
    for (const auto& [k, m] : a.spectrum.mults()) {
        const Cyclotomic alpha_d = a.spectrum.eigenvalue(k).pow(a.degree);
        std::vector<BundleTerm> terms = out[i].normal_bundle.terms();
        terms.push_back({a.degree, alpha_d.inverse(), -1});
        out[i].normal_bundle = BundleSpec(std::move(terms));
        ++i;
    }
    return out;
}

YPoly projective_component_sum(const Spectrum& s, std::size_t window_slack) {
    return chi_y_components(projective_components(s), window_slack);
}

YPoly chi_y_projective(const Spectrum& s, std::size_t window_slack) {
    const YPoly sum = projective_component_sum(s, window_slack);
    const YPoly closed = projective_chi_y(s.dimension() - 2);
    if (!(sum == closed))
        throw InternalMismatch("projective component sum " + sum.to_string() + " differs from " + closed.to_string());
    return sum;
}

YPoly chi_y_hypersurface(const HypersurfaceAction& a, std::size_t window_slack) {
    YPoly out;
    try {
        out = chi_y_components(hypersurface_components(a), window_slack);
    } catch (const NotPolynomial& e) {
        throw NotPolynomial(std::string(e.what()) + " (no smooth degree-" + std::to_string(a.degree) +
                            " hypersurface is invariant under " + a.spectrum.to_string() + "?)");
    }
    if (out.degree() > a.dimension())
        throw InternalMismatch("chi_y(X) has degree " + std::to_string(out.degree()) + " > n");
    return out;
}

YPoly chi_y_primitive(const HypersurfaceAction& a, std::size_t window_slack) {
    const std::int64_t n = a.dimension();
    if (n < 1) throw InvalidArgument("primitive trace needs hypersurface dimension n >= 1");
    YPoly p = chi_y_hypersurface(a, window_slack) - chi_y_projective(a.spectrum, window_slack) + minus_y_pow(n + 1);
    if (n % 2 == 1) p = -p;
    if (p.degree() > n) throw InternalMismatch("chi_y_prim has degree " + std::to_string(p.degree()) + " > n");
    return p;
}

PrimitiveCrossCheck primitive_cross_check(const HypersurfaceAction& a, std::size_t window_slack) {
    const std::int64_t n = a.dimension();
    PrimitiveCrossCheck out;
    out.identity_route = chi_y_primitive(a, window_slack);
    YRational sum;
    for (const auto& [k, m] : a.spectrum.mults()) {
        const Cyclotomic alpha = a.spectrum.eigenvalue(k);
        const std::size_t w = window_for(m - 1, 0, window_slack);
        LaurentSeries s = phi_multidegree({}, w) * (psi_inverse(alpha.pow(a.degree), a.degree, w) - LaurentSeries::one(w));
        for (const auto& [k2, m2] : a.spectrum.mults())
            if (k2 != k) s *= psi(alpha / a.spectrum.eigenvalue(k2), 1, w).pow(m2);
        sum += extract(s, m - 1);
    }
    YPoly base = assert_polynomial(sum);
    if (n % 2 == 1) base = -base;
    const YPoly yn1 = YPoly::monomial(Cyclotomic(1), static_cast<int>(n + 1));
    out.direct_route = base - yn1;
    out.printed_route = base + yn1;
    out.direct_agrees = out.direct_route == out.identity_route;
    out.printed_residual = out.printed_route - out.identity_route;
    return out;
}

Cyclotomic trace_primitive(const HypersurfaceAction& a) {
    const std::int64_t n = a.dimension();
    const std::int64_t d = a.degree;
    BigInt sum = 0;
    for (std::int64_t j = 0; j < d; ++j)
        sum += ipow(BigInt(1 - d), static_cast<std::uint64_t>(a.spectrum.multiplicity_of(d, j)));
    Rational r = make_rational(sum, d);
    if (n % 2 != 0) r = -r;
    return Cyclotomic(r);
}

BigInt primitive_dimension(std::int64_t n, std::int64_t d) {
    if (n < 0 || d < 1) throw InvalidArgument("primitive_dimension needs n >= 0, d >= 1");
    const BigInt base = d - 1;
    BigInt num = ipow(base, static_cast<std::uint64_t>(n + 2)) + (n % 2 == 0 ? base : BigInt(-base));
    if (num % d != 0) throw NonIntegralValue("primitive dimension is not an integer");
    return num / d;
}

std::vector<BigInt> primitive_hodge_numbers(std::int64_t n, std::int64_t d, std::size_t window_slack) {
    if (n < 1 || d < 2) throw InvalidArgument("primitive_hodge_numbers needs n >= 1, d >= 2");
    const YPoly chi = chi_y_primitive(HypersurfaceAction(d, Spectrum::trivial(n + 2)), window_slack);
    std::vector<BigInt> out;
    BigInt total = 0;
    for (std::int64_t p = 0; p <= n; ++p) {
        const Rational c = chi.coeff(static_cast<int>(p)).to_rational();
        if (!is_integer(c)) throw InternalMismatch("non-integral Hodge coefficient");
        BigInt h = c.get_num();
        if (p % 2 == 1) h = -h;
        if (h < 0) throw InternalMismatch("Hodge coefficient of y^" + std::to_string(p) + " has the wrong sign");
        total += h;
        out.push_back(h);
    }
    if (total != primitive_dimension(n, d)) throw InternalMismatch("Hodge numbers do not sum to the primitive dimension");
    return out;
}

}  // namespace hypersym
