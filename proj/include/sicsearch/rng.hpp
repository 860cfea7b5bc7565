#pragma once

#include <cstdint>

#include "sicsearch/heisenberg.hpp"

namespace sic {

/// Counter-based random stream: each (seed, stream) pair yields an independent,
/// reproducible sequence regardless of evaluation order across workers.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    /// Uniform in (0, 1).
    double next_uniform();
    /// Standard normal via Box-Muller.
    double next_normal();
    Complex next_complex_normal();

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Unit vector drawn from the unitarily invariant (Haar) measure on the
/// sphere in C^size: normalized i.i.d. complex Gaussians.
Vector haar_random_state(Int size, RandomStream& rng);

/// Unit vector uniform on the real sphere in R^size, returned as a real
/// complex vector (used for anti-unitary sector starts).
Vector real_sphere_state(Int size, RandomStream& rng);

}  // namespace sic
