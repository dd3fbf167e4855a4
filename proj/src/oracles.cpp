#include "hypersym/oracles.hpp"

#include <functional>

#include "hypersym/errors.hpp"
#include "hypersym/lefschetz.hpp"

namespace hypersym {

namespace {

void check_cap(const BigInt& states, std::int64_t cap, const std::string& what) {
    if (cap < 1) throw InvalidArgument("enumeration cap must be positive");
    if (states > cap)
        throw CapExceeded(what + " needs " + states.get_str() + " states, cap is " + std::to_string(cap));
}

std::vector<std::size_t> permutation_of_type(const Partition& mu) {
    std::vector<std::size_t> perm(static_cast<std::size_t>(mu.n()));
    std::size_t start = 0;
    for (auto len : mu.parts()) {
        const auto l = static_cast<std::size_t>(len);
        for (std::size_t i = 0; i < l; ++i) perm[start + i] = start + (i + 1) % l;
        start += l;
    }
    return perm;
}

// Calls f on every tuple in {0..l-1}^n.
void for_each_tuple(std::size_t n, std::int64_t l, const std::function<void(const std::vector<std::int64_t>&)>& f) {
    std::vector<std::int64_t> t(n, 0);
    while (true) {
        f(t);
        std::size_t i = 0;
        while (i < n && t[i] == l - 1) t[i++] = 0;
        if (i == n) return;
        ++t[i];
    }
}

}  // namespace

BigInt count_fixed_points_M(const Partition& mu, const AbelianGroupSpec& a, std::int64_t cap) {
    if (mu.n() < 1) throw InvalidArgument("cycle type must be a partition of n >= 1");
    const std::int64_t l = a.order();
    check_cap(ipow(BigInt(l), static_cast<std::uint64_t>(mu.n())), cap, "fixed-point enumeration");
    const auto perm = permutation_of_type(mu);
    const std::size_t n = perm.size();
    const auto& orders = a.cyclic_orders;
    // element index -> components in the cyclic factors
    std::vector<std::vector<std::int64_t>> comp(static_cast<std::size_t>(l));
    for (std::int64_t x = 0; x < l; ++x) {
        std::int64_t r = x;
        for (auto c : orders) {
            comp[static_cast<std::size_t>(x)].push_back(r % c);
            r /= c;
        }
    }
    BigInt fixed = 0;
    for_each_tuple(n, l, [&](const std::vector<std::int64_t>& t) {
        for (std::size_t i = 0; i < n; ++i)
            if (t[perm[i]] != t[i]) return;
        for (std::size_t j = 0; j < orders.size(); ++j) {
            std::int64_t s = 0;
            for (auto x : t) s += comp[static_cast<std::size_t>(x)][j];
            if (s % orders[j] != 0) return;
        }
        ++fixed;
    });
    return fixed;
}

std::map<Partition, BigInt> count_orbits_by_shape(std::int64_t n, std::int64_t l, std::int64_t cap) {
    if (n < 1 || l < 1) throw InvalidArgument("orbit count needs n >= 1, l >= 1");
    check_cap(ipow(BigInt(l), static_cast<std::uint64_t>(n)), cap, "orbit enumeration");
    std::map<Partition, BigInt> out;
    for (const auto& mu : partitions(n)) out.emplace(mu, 0);
    // One representative per orbit: the non-decreasing tuples.
    for_each_tuple(static_cast<std::size_t>(n), l, [&](const std::vector<std::int64_t>& t) {
        for (std::size_t i = 1; i < t.size(); ++i)
            if (t[i - 1] > t[i]) return;
        std::vector<std::int64_t> shape;
        std::int64_t run = 1;
        for (std::size_t i = 1; i <= t.size(); ++i) {
            if (i < t.size() && t[i] == t[i - 1]) {
                ++run;
            } else {
                shape.push_back(run);
                run = 1;
            }
        }
        ++out[Partition(shape)];
    });
    return out;
}

Cyclotomic euler_fixed_locus_trace(const HypersurfaceAction& a) {
    const std::int64_t n = a.dimension();
    const std::int64_t d = a.degree;
    BigInt total = 0;
    for (const auto& [k, m] : a.spectrum.mults()) {
        if (!a.spectrum.eigenvalue(k).pow(d).is_one()) {
            total += m;  // P(V_alpha) lies inside X
        } else if (m >= 2) {
            // smooth degree-d hypersurface in P^{m-1}
            BigInt prim = primitive_dimension(m - 2, d);
            total += (m - 1) + (m % 2 == 0 ? prim : BigInt(-prim));
        }
    }
    BigInt v = total - (n + 1);
    if (n % 2 != 0) v = -v;
    return Cyclotomic(Rational(v));
}

SingularityCertificate::SingularityCertificate(std::int64_t conductor, std::vector<std::int64_t> exponents)
    : conductor_(conductor), exponents_(std::move(exponents)) {
    if (conductor < 1) throw InvalidArgument("certificate conductor must be positive");
    Cyclotomic sum;
    for (auto& k : exponents_) {
        k = mod_floor(k, conductor);
        sum = sum + Cyclotomic::root_of_unity(conductor, k);
    }
    if (!sum.is_zero()) throw InvalidArgument("certificate roots of unity do not sum to zero");
}

std::optional<SingularityCertificate> fermat_section_singular(std::int64_t n, std::int64_t d, std::int64_t cap) {
    if (n < 1 || d < 2) throw InvalidArgument("fermat_section_singular needs n >= 1, d >= 2");
    const std::int64_t big_n = d - 1;
    const std::int64_t terms = n + 3;
    check_cap(binomial(big_n + terms - 1, terms), cap, "vanishing-sum search");

    std::vector<std::int64_t> phi;
    for (const auto& c : cyclotomic_polynomial(big_n)) phi.push_back(c.get_si());
    const std::size_t deg = phi.size() - 1;

    std::vector<std::int64_t> counts(static_cast<std::size_t>(big_n), 0);
    std::vector<std::int64_t> chosen;
    auto vanishes = [&] {
        std::vector<std::int64_t> r = counts;
        for (std::size_t i = r.size(); i-- > deg;) {
            const std::int64_t c = r[i];
            if (c == 0) continue;
            for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
        }
        for (std::size_t i = 0; i < std::min(deg, r.size()); ++i)
            if (r[i] != 0) return false;
        return true;
    };
    std::function<bool(std::int64_t)> search = [&](std::int64_t lo) {
        if (static_cast<std::int64_t>(chosen.size()) == terms) return vanishes();
        for (std::int64_t k = lo; k < big_n; ++k) {
            chosen.push_back(k);
            ++counts[static_cast<std::size_t>(k)];
            if (search(k)) return true;
            --counts[static_cast<std::size_t>(k)];
            chosen.pop_back();
        }
        return false;
    };
    if (!search(0)) return std::nullopt;
    return SingularityCertificate(big_n, chosen);
}

bool exists_smooth_symmetric(std::int64_t n, std::int64_t d) {
    if (n < 1 || d < 2) throw InvalidArgument("exists_smooth_symmetric needs n >= 1, d >= 2");
    return gcd(n + 3, d - 1) == 1;
}

}  // namespace hypersym
