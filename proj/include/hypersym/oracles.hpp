#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hypersym/cyclotomic.hpp"
#include "hypersym/spectrum.hpp"
#include "hypersym/symgroup.hpp"

namespace hypersym {

inline constexpr std::int64_t kDefaultEnumerationCap = 1'000'000;

/// Fixed points of a permutation of cycle type mu on M = {a in A^n : sum a = 0},
/// by listing A^n. Throws CapExceeded if |A|^n > cap.
BigInt count_fixed_points_M(const Partition& mu, const AbelianGroupSpec& a,
                            std::int64_t cap = kDefaultEnumerationCap);

/// S_n-orbits on A^n (|A| = l) by shape, listing A^n; every partition of n
/// appears as a key. Throws CapExceeded if l^n > cap.
std::map<Partition, BigInt> count_orbits_by_shape(std::int64_t n, std::int64_t l,
                                                  std::int64_t cap = kDefaultEnumerationCap);

/// (-1)^n (sum_alpha e(X_alpha) - (n+1)) from the Euler characteristics of the
/// fixed components X_alpha = X cap P(V_alpha).
Cyclotomic euler_fixed_locus_trace(const HypersurfaceAction& a);

// Exponents k_i with sum_i zeta_N^{k_i} = 0, N = d-1; checked on construction.
class SingularityCertificate {
public:
    SingularityCertificate(std::int64_t conductor, std::vector<std::int64_t> exponents);
    std::int64_t conductor() const noexcept { return conductor_; }
    const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }

private:
    std::int64_t conductor_;
    std::vector<std::int64_t> exponents_;
};

/// A vanishing sum of n+3 (d-1)-th roots of unity, i.e. a singular point of
/// {sum x_i^d = 0} cap {sum x_i = 0} in P^{n+2}; nullopt if the section is smooth.
/// The first multiset in lexicographic order is returned. Throws CapExceeded
/// if the number of multisets exceeds cap.
std::optional<SingularityCertificate> fermat_section_singular(std::int64_t n, std::int64_t d,
                                                              std::int64_t cap = kDefaultEnumerationCap);

/// gcd(n+3, d-1) == 1.
bool exists_smooth_symmetric(std::int64_t n, std::int64_t d);

}  // namespace hypersym
