#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "hypersym/spectrum.hpp"

namespace hypersym {

// A smooth hypersurface given by an invertible polynomial (a sum of Fermat,
// chain and loop blocks in disjoint variables) with one of its diagonal
// symmetries.
struct SampledAction {
    HypersurfaceAction action;
    std::string polynomial;  // human-readable description of the blocks
};

struct SampleLimits {
    std::int64_t min_dim = 3;
    std::int64_t max_dim = 6;
    std::int64_t max_conductor = 12;
    std::int64_t min_degree = 2;
    std::int64_t max_degree = 5;
};

/// Draws an action whose spectrum (normalized) has conductor <= max_conductor.
SampledAction sample_smooth_action(std::mt19937_64& rng, const SampleLimits& limits = {});

/// Uniform spectrum with the given bounds; no smoothness condition.
Spectrum sample_spectrum(std::mt19937_64& rng, std::int64_t min_dim, std::int64_t max_dim,
                         std::int64_t max_conductor);

}  // namespace hypersym
