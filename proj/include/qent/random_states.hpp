#pragma once

#include <cstdint>
#include <random>

#include "qent/pure_state.hpp"

namespace qent {

/// Seeded sampler for randomized property checks. Deterministic for a fixed
/// seed and call sequence.
class StateSampler {
public:
    explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

    /// Haar-random pure state over the register.
    PureState haar_state(const QuditRegister& reg);

    /// Tensor product of independent single-site Haar-random states.
    PureState product_state(const QuditRegister& reg);

    /// Haar-random d x d unitary (QR of a complex Gaussian matrix with the
    /// phase convention fixed).
    Eigen::MatrixXcd haar_unitary(int d);

    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi);

    std::mt19937_64& rng() { return rng_; }

private:
    Eigen::VectorXcd gaussian_vector(Eigen::Index n);
    std::mt19937_64 rng_;
};

}  // namespace qent
