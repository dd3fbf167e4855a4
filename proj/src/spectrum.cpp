#include "hypersym/spectrum.hpp"

#include <cctype>
#include <sstream>

#include "hypersym/errors.hpp"

namespace hypersym {

Spectrum::Spectrum(std::int64_t conductor, const std::map<std::int64_t, std::int64_t>& mults)
    : conductor_(conductor) {
    if (conductor < 1) throw InvalidArgument("spectrum conductor must be positive");
    for (const auto& [k, m] : mults) {
        if (m < 0) throw InvalidArgument("negative eigenvalue multiplicity");
        if (m == 0) continue;
        mults_[mod_floor(k, conductor)] += m;
    }
    if (mults_.empty()) throw EmptySpectrum("spectrum has no eigenvalues");
}

std::int64_t Spectrum::dimension() const noexcept {
    std::int64_t d = 0;
    for (const auto& [k, m] : mults_) d += m;
    return d;
}

std::vector<std::pair<Cyclotomic, std::int64_t>> Spectrum::eigenvalues() const {
    std::vector<std::pair<Cyclotomic, std::int64_t>> out;
    for (const auto& [k, m] : mults_) out.emplace_back(eigenvalue(k), m);
    return out;
}

std::int64_t Spectrum::multiplicity_of(std::int64_t d, std::int64_t j) const {
    // zeta_N^k = zeta_d^j  <=>  k d = j N (mod N d)
    const std::int64_t nd = conductor_ * d;
    const std::int64_t target = mod_floor(j * conductor_, nd);
    std::int64_t total = 0;
    for (const auto& [k, m] : mults_)
        if (mod_floor(k * d, nd) == target) total += m;
    return total;
}

Spectrum Spectrum::normalized() const {
    std::int64_t g = conductor_;
    for (const auto& [k, m] : mults_) g = gcd(g, k);
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& [k, m] : mults_) out[k / g] = m;
    return Spectrum(conductor_ / g, out);
}

Spectrum Spectrum::galois(std::int64_t j) const {
    if (gcd(mod_floor(j, conductor_), conductor_) != 1)
        throw InvalidArgument("Galois exponent not coprime to the conductor");
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& [k, m] : mults_) out[mod_floor(k * j, conductor_)] += m;
    return Spectrum(conductor_, out);
}

std::string Spectrum::to_string() const {
    std::ostringstream os;
    os << conductor_ << ": ";
    bool first = true;
    for (const auto& [k, m] : mults_) {
        if (!first) os << ", ";
        first = false;
        os << k << '^' << m;
    }
    return os.str();
}

Spectrum Spectrum::parse(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&](bool allow_sign) -> std::int64_t {
        skip_ws();
        const std::size_t start = i;
        if (allow_sign && i < text.size() && text[i] == '-') ++i;
        const std::size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw ParseError("expected integer in spectrum '" + text + "'", start);
        return std::stoll(text.substr(start, i - start));
    };
    const std::int64_t n = read_int(false);
    if (n < 1) throw ParseError("spectrum conductor must be positive", 0);
    skip_ws();
    if (i >= text.size() || text[i] != ':') throw ParseError("expected ':' in spectrum '" + text + "'", i);
    ++i;
    std::map<std::int64_t, std::int64_t> mults;
    while (true) {
        const std::int64_t k = read_int(true);
        std::int64_t m = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            const std::size_t at = i;
            m = read_int(false);
            if (m < 1) throw ParseError("multiplicity must be at least 1", at);
        }
        mults[mod_floor(k, n)] += m;
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != ',') throw ParseError("expected ',' in spectrum '" + text + "'", i);
        ++i;
    }
    return Spectrum(n, mults);
}

HypersurfaceAction::HypersurfaceAction(std::int64_t d, Spectrum s) : degree(d), spectrum(std::move(s)) {
    if (degree < 2) throw InvalidArgument("hypersurface degree must be at least 2");
    if (spectrum.dimension() < 2) throw InvalidArgument("ambient vector space must have dimension >= 2");
}

}  // namespace hypersym
