#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypersym/cyclotomic.hpp"

namespace hypersym {

// Eigenvalue multiplicities of a finite-order linear map: exponent k (mod N)
// stands for the eigenvalue zeta_N^k. Stored multiplicities are >= 1.
class Spectrum {
public:
    Spectrum(std::int64_t conductor, const std::map<std::int64_t, std::int64_t>& mults);

    /// The identity on a space of the given dimension.
    static Spectrum trivial(std::int64_t dim) { return Spectrum(1, {{0, dim}}); }

    /// Parses "N: k1^m1, k2^m2, ...". A bare "k" means multiplicity 1;
    /// repeated exponents accumulate.
    static Spectrum parse(const std::string& text);

    std::int64_t conductor() const noexcept { return conductor_; }
    const std::map<std::int64_t, std::int64_t>& mults() const noexcept { return mults_; }
    std::int64_t dimension() const noexcept;

    Cyclotomic eigenvalue(std::int64_t k) const { return Cyclotomic::root_of_unity(conductor_, k); }
    /// (eigenvalue, multiplicity) pairs in exponent order.
    std::vector<std::pair<Cyclotomic, std::int64_t>> eigenvalues() const;

    /// Multiplicity of zeta_d^j (0 if absent).
    std::int64_t multiplicity_of(std::int64_t d, std::int64_t j) const;

    /// Same eigenvalues over the smallest conductor that expresses them.
    Spectrum normalized() const;
    /// Image under the Galois automorphism zeta -> zeta^j.
    Spectrum galois(std::int64_t j) const;

    std::string to_string() const;
    friend bool operator==(const Spectrum& a, const Spectrum& b) {
        return a.conductor_ == b.conductor_ && a.mults_ == b.mults_;
    }

private:
    std::int64_t conductor_;
    std::map<std::int64_t, std::int64_t> mults_;
};

// A degree-d hypersurface together with the spectrum of the lift that fixes
// its defining polynomial. n = dim V - 2 is the hypersurface dimension.
struct HypersurfaceAction {
    HypersurfaceAction(std::int64_t degree, Spectrum spectrum);

    std::int64_t degree;
    Spectrum spectrum;

    std::int64_t dimension() const noexcept { return spectrum.dimension() - 2; }
};

}  // namespace hypersym
