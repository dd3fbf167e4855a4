#include "hypersym/sampling.hpp"

#include <sstream>
#include <vector>

#include "hypersym/errors.hpp"

namespace hypersym {

namespace {

enum class BlockKind { Fermat, Chain, Loop };

struct Block {
    BlockKind kind;
    std::int64_t length;
    std::int64_t order;                  // order of the cyclic group of diagonal symmetries
    std::vector<std::int64_t> weights;   // generator exponents, in units of 1/order
};

Block make_block(BlockKind kind, std::int64_t k, std::int64_t d) {
    Block b{kind, k, 0, {}};
    if (kind == BlockKind::Fermat) b.order = d;
    if (kind == BlockKind::Chain) b.order = d * ipow(BigInt(d - 1), static_cast<std::uint64_t>(k - 1)).get_si();
    if (kind == BlockKind::Loop) {
        const std::int64_t p = ipow(BigInt(d - 1), static_cast<std::uint64_t>(k)).get_si();
        b.order = k % 2 == 0 ? p - 1 : p + 1;
        if (b.order == 0) return b;
    }
    std::int64_t w = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        b.weights.push_back(mod_floor(w, b.order));
        w = mod_floor(-(d - 1) * w, b.order);
    }
    return b;
}

void describe(std::ostringstream& os, const Block& b, std::int64_t first, std::int64_t d) {
    auto var = [&](std::int64_t i) { return "x" + std::to_string(first + i); };
    const std::string e = std::to_string(d - 1);
    for (std::int64_t i = 0; i < b.length; ++i) {
        if (os.tellp() > 0) os << " + ";
        const bool last = i + 1 == b.length;
        if (b.kind == BlockKind::Fermat || (b.kind == BlockKind::Chain && last))
            os << var(i) << '^' << d;
        else
            os << var(i) << '^' << e << '*' << var(last ? 0 : i + 1);
    }
}

}  // namespace

Spectrum sample_spectrum(std::mt19937_64& rng, std::int64_t min_dim, std::int64_t max_dim,
                         std::int64_t max_conductor) {
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, max_conductor)(rng);
    const std::int64_t dim = std::uniform_int_distribution<std::int64_t>(min_dim, max_dim)(rng);
    std::map<std::int64_t, std::int64_t> mults;
    for (std::int64_t i = 0; i < dim; ++i) ++mults[std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng)];
    return Spectrum(n, mults);
}

SampledAction sample_smooth_action(std::mt19937_64& rng, const SampleLimits& limits) {
    if (limits.min_dim < 2 || limits.min_dim > limits.max_dim || limits.min_degree < 2 ||
        limits.min_degree > limits.max_degree || limits.max_conductor < 1)
        throw InvalidArgument("bad sampling limits");
    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const std::int64_t d = uniform(limits.min_degree, limits.max_degree);
        const std::int64_t dim = uniform(limits.min_dim, limits.max_dim);
        std::vector<Block> blocks;
        for (std::int64_t left = dim; left > 0;) {
            const auto kind = static_cast<BlockKind>(uniform(0, left >= 2 ? 2 : 0));
            const std::int64_t k = kind == BlockKind::Fermat ? 1 : uniform(2, left);
            Block b = make_block(kind, k, d);
            if (b.order == 0) continue;  // degenerate loop
            blocks.push_back(std::move(b));
            left -= k;
        }
        std::int64_t n = 1;
        for (const auto& b : blocks) n = lcm(n, b.order);
        std::map<std::int64_t, std::int64_t> mults;
        for (const auto& b : blocks) {
            const std::int64_t t = uniform(0, b.order - 1);
            for (auto w : b.weights) ++mults[mod_floor(t * w, b.order) * (n / b.order)];
        }
        Spectrum s = Spectrum(n, mults).normalized();
        if (s.conductor() > limits.max_conductor) continue;
        std::ostringstream os;
        std::int64_t first = 0;
        for (const auto& b : blocks) {
            describe(os, b, first, d);
            first += b.length;
        }
        return {HypersurfaceAction(d, std::move(s)), os.str()};
    }
    throw SearchCapExceeded("no action found within the conductor bound");
}

}  // namespace hypersym
