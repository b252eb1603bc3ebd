#pragma once
// Synthetic technology trajectories with known parameters, used as ground
// truth for the estimators.
//
// Random stream (pinned so other implementations can reproduce it exactly):
//   SplitMix64: state += 0x9E3779B97F4A7C15; z = state;
//               z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
//               z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
//               return z ^ (z >> 31);
//   normal deviate: u1 = ((next() >> 11) + 1) * 2^-53, u2 = (next() >> 11) * 2^-53,
//                   z = sqrt(-2 ln u1) * cos(2 pi u2), clamped to [-5, 5].
// Noise is multiplicative log-normal: value * exp(sigma * z). Per grid point
// the host deviate is drawn before the subsystem deviate.

#include <cstdint>

#include "techevo/logistic.hpp"
#include "techevo/series.hpp"

namespace techevo {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }  // [0, 1)

    double normal() noexcept;  // Box-Muller cosine branch, |z| <= 5

private:
    std::uint64_t state_;
};

inline constexpr double kNoiseClamp = 5.0;

struct SyntheticSpec {
    LogisticParams host_params;
    LogisticParams sub_params;
    double t_start = 0.0;
    double t_end = 1.0;
    int n_points = 3;
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
};

// Throws InvalidSpec unless t_start < t_end, n_points >= 3, noise_sigma >= 0.
void validate(const SyntheticSpec& spec);

// Both logistic curves on a uniform grid, each value times exp(sigma z).
AlignedPair generate_pair(const SyntheticSpec& spec);

// Noise-free pair restricted to rows where both values are at most
// cap_fraction of their capacity. Throws InvalidSpec if noise_sigma != 0 or
// cap_fraction is outside (0, 1), EmptyEarlyPhase below 3 rows.
AlignedPair early_phase_pair(const SyntheticSpec& spec, double cap_fraction);

// Host follows a noise-free logistic; the subsystem is an exact power law
// P = scale * H^exponent times log-normal noise. Ground truth for B.
struct PowerLawSpec {
    LogisticParams host_params;
    double t_start = 0.0;
    double t_end = 1.0;
    int n_points = 3;
    double scale = 1.0;
    double exponent = 1.0;
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
};

AlignedPair power_law_pair(const PowerLawSpec& spec);

}  // namespace techevo
