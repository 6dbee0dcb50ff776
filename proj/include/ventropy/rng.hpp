#pragma once

#include <cmath>
#include <cstdint>

#include <Eigen/Core>

namespace ventropy {

// Counter-keyed random stream: every draw is a pure function of (seed, counter),
// so sample i is identical no matter how samples are partitioned across workers.
namespace rng {

inline std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// 64-bit word keyed by (seed, stream, counter).
inline std::uint64_t word(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return mix(mix(seed ^ 0x6a09e667f3bcc909ULL) ^ mix(stream * 0x9e3779b97f4a7c15ULL + counter));
}

/// Uniform double in (0, 1); never returns 0 so it is safe inside log().
inline double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return (static_cast<double>(word(seed, stream, counter) >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal via Box-Muller on two counter-keyed uniforms.
inline double gauss(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    const double u1 = uniform(seed, stream * 2 + 0, counter);
    const double u2 = uniform(seed, stream * 2 + 1, counter);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

/// Gaussian vector; sample `counter` of an n-dimensional stream.
inline Eigen::VectorXd gauss_vector(int n, std::uint64_t seed, std::uint64_t counter) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = gauss(seed, static_cast<std::uint64_t>(i) + 1, counter);
    return v;
}

/// Uniform point on the Euclidean unit sphere S^{n-1}.
inline Eigen::VectorXd sphere_point(int n, std::uint64_t seed, std::uint64_t counter) {
    Eigen::VectorXd v = gauss_vector(n, seed, counter);
    double norm = v.norm();
    while (norm == 0.0) {  // probability ~0, but keep the map total
        counter = mix(counter) | 0x8000000000000000ULL;
        v = gauss_vector(n, seed, counter);
        norm = v.norm();
    }
    return v / norm;
}

} // namespace rng

} // namespace ventropy
