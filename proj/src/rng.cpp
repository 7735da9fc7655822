#include "curvopt/rng.hpp"

#include <cmath>

namespace curvopt {

namespace {
constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : state_(mix(seed + 0x6A09E667F3BCC909ULL) + stream * kGoldenGamma) {
    // One warm-up mix so that consecutive stream indices start far apart.
    state_ = mix(state_);
}

std::uint64_t RngStream::next_u64() {
    state_ += kGoldenGamma;
    return mix(state_);
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
    // Modulo bias is ~n/2^64, irrelevant at the sample counts used here.
    return n == 0 ? 0 : next_u64() % n;
}

double RngStream::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    // Box-Muller on (0,1] uniforms; u1 > 0 guaranteed by the offset.
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * M_PI * u2;
    cached_normal_ = radius * std::sin(angle);
    has_cached_normal_ = true;
    return radius * std::cos(angle);
}

Eigen::VectorXd RngStream::normal_vector(int dim) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = normal();
    return v;
}

Eigen::VectorXd RngStream::unit_vector(int dim) {
    while (true) {
        Eigen::VectorXd v = normal_vector(dim);
        double n = v.norm();
        if (n > 1e-12) return v / n;
    }
}

Eigen::VectorXd RngStream::uniform_box(int dim, double lo, double hi) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = uniform(lo, hi);
    return v;
}

}  // namespace curvopt
