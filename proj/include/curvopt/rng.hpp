#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace curvopt {

// Deterministic 64-bit PRNG, splittable by stream index.
//
// The generator is SplitMix64 (Steele, Lea, Flood 2014): state advances by
// the golden-gamma constant and outputs are finalized with two xor-shift
// multiplies. Stream k of seed s starts from splitmix(s + k * GAMMA) so
// distinct streams are decorrelated. All distributions below are derived
// from the raw 64-bit output with fixed formulas, so traces are
// reproducible bit-for-bit on any IEEE-754 platform given (seed, stream).
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();

    // Uniform on [0, 1): top 53 bits scaled by 2^-53.
    double uniform();

    // Uniform on [lo, hi).
    double uniform(double lo, double hi);

    // Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n);

    // Standard normal via Box-Muller; caches the second deviate.
    double normal();

    // Vector of i.i.d. standard normals.
    Eigen::VectorXd normal_vector(int dim);

    // Uniformly distributed direction on the Euclidean unit sphere.
    Eigen::VectorXd unit_vector(int dim);

    // Componentwise uniform in [lo, hi)^dim.
    Eigen::VectorXd uniform_box(int dim, double lo, double hi);

private:
    std::uint64_t state_;
    bool has_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

}  // namespace curvopt
