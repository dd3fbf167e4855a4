#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hypersym/laurent_series.hpp"
#include "hypersym/spectrum.hpp"

namespace hypersym {

inline constexpr std::size_t kDefaultWindowSlack = 2;

/// Laurent polynomial in h: exponent -> coefficient.
using HPolynomial = std::map<std::int64_t, Cyclotomic>;

// One summand m (H^e, alpha) of a strongly polynomial bundle.
struct BundleTerm {
    std::int64_t exponent;
    Cyclotomic alpha;
    std::int64_t mult;
};

// Strongly polynomial virtual bundle sum_i m_i (H^{e_i}, alpha_i).
class BundleSpec {
public:
    BundleSpec() = default;
    explicit BundleSpec(std::vector<BundleTerm> terms);
    const std::vector<BundleTerm>& terms() const noexcept { return terms_; }

private:
    std::vector<BundleTerm> terms_;
};

// A connected fixed component Z inside P^{ambient_dim}, cut out as a
// complete intersection of the given multidegree, with its normal bundle.
struct FixedComponentData {
    std::int64_t ambient_dim;
    std::vector<std::int64_t> multidegree;
    BundleSpec normal_bundle;
};

/// Sum_{p=0}^{n+1} (-y)^p, the y-genus of P^{n+1}.
YPoly projective_chi_y(std::int64_t n);

/// [x^m] { Phi_dd(x,y) * f((1+xy)/(1-x)) }.
YPoly chi_y_complete_intersection(const std::vector<std::int64_t>& dd, std::int64_t m, const HPolynomial& f,
                                  std::size_t window_slack = kDefaultWindowSlack);

/// Phi_{dd_Z} * prod_i Psi_{1/alpha_i, e_i}^{m_i} with enough terms to reach
/// x^{ambient_dim}; exposed for debugging output.
LaurentSeries component_series(const FixedComponentData& z, std::size_t window_slack = kDefaultWindowSlack);

/// Sum over components of [x^{m_Z}] { Phi_{dd_Z} * prod_i Psi_{1/alpha_i, e_i}^{m_i} }.
YPoly chi_y_components(const std::vector<FixedComponentData>& components,
                       std::size_t window_slack = kDefaultWindowSlack);

/// Fixed components P(V_alpha) of a projective transformation with the given
/// spectrum, with normal bundles sum_{beta != alpha} m_beta (H, beta/alpha).
std::vector<FixedComponentData> projective_components(const Spectrum& s);

/// Fixed-locus data for a hypersurface: as above, plus the term -(H^d, 1/alpha^d).
std::vector<FixedComponentData> hypersurface_components(const HypersurfaceAction& a);

/// The eigencomponent sum for P(V) alone, without the closed-form check.
YPoly projective_component_sum(const Spectrum& s, std::size_t window_slack = kDefaultWindowSlack);

/// chi_y(P(V), sigma); throws InternalMismatch if the component sum differs
/// from the closed form sum_{p=0}^{n+1} (-y)^p.
YPoly chi_y_projective(const Spectrum& s, std::size_t window_slack = kDefaultWindowSlack);

/// chi_y(X, sigma) for a hypersurface, as a polynomial of degree <= n.
YPoly chi_y_hypersurface(const HypersurfaceAction& a, std::size_t window_slack = kDefaultWindowSlack);

/// Formal primitive trace: coefficient of y^p is (-1)^p tr(sigma*, H^{p,n-p}_prim).
/// Obtained from (-1)^n chi_prim = chi_y(X) - chi_y(P) + (-y)^{n+1}. Needs n >= 1.
YPoly chi_y_primitive(const HypersurfaceAction& a, std::size_t window_slack = kDefaultWindowSlack);

// Comparison of the hyperplane-identity route with the per-eigenvalue
// formula (sum over alpha of [x^{m_alpha-1}] of (1/Psi - 1) * ...).
struct PrimitiveCrossCheck {
    YPoly identity_route;
    YPoly direct_route;   // per-eigenvalue sum with the -y^{n+1} correction
    YPoly printed_route;  // same sum with a +y^{n+1} correction
    bool direct_agrees;
    YPoly printed_residual;  // printed_route - identity_route
};

PrimitiveCrossCheck primitive_cross_check(const HypersurfaceAction& a,
                                          std::size_t window_slack = kDefaultWindowSlack);

/// tr(sigma*, H^n_prim) = ((-1)^n / d) sum_{alpha^d = 1} (1 - d)^{m_alpha},
/// summing over every d-th root of unity (absent ones contribute 1).
Cyclotomic trace_primitive(const HypersurfaceAction& a);

/// ((d-1)^{n+2} + (-1)^n (d-1)) / d.
BigInt primitive_dimension(std::int64_t n, std::int64_t d);

/// h^{p,n-p}_prim for p = 0..n, read off chi_y_primitive of the identity.
std::vector<BigInt> primitive_hodge_numbers(std::int64_t n, std::int64_t d,
                                            std::size_t window_slack = kDefaultWindowSlack);

}  // namespace hypersym
