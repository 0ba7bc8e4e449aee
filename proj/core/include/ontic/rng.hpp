#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

#include "ontic/errors.hpp"

namespace ontic {

// All randomness in the library flows through mt19937_64 with the fixed
// mappings below, so streams are bit-reproducible across platforms and
// standard libraries (std::*_distribution is not portable).
inline constexpr const char* kGeneratorId = "mt19937_64";

// Uniform double in [0, 1) from the top 53 bits of one generator draw.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller (two uniforms per pair of calls folded
// into one value; the second value is discarded to keep the stream simple).
inline double standard_normal(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

// Index drawn from unnormalized nonnegative weights by CDF inversion.
inline std::size_t sample_categorical(std::span<const double> weights, std::mt19937_64& rng) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total > 0.0)) throw ArgumentError("sample_categorical: weights sum to zero");
    double r = uniform01(rng) * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (r < acc) return i;
    }
    return weights.size() - 1;  // r landed on accumulated rounding
}

}  // namespace ontic
