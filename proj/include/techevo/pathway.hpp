#pragma once

#include <string_view>

#include "techevo/coevolution.hpp"

namespace techevo {

// Underdevelopment: B significantly below 1 (subsystem lags its host).
// Development: B significantly above 1. Parallel: B == 1 within 1e-12.
// Development and Parallel complete the scale symmetrically around the
// B < 1 regime.
enum class Pathway { Underdevelopment, Parallel, Development, Inconclusive };

std::string_view pathway_name(Pathway p) noexcept;  // "underdevelopment", ...

struct PathwayClass {
    Pathway label = Pathway::Inconclusive;
    double alpha = 0.01;
    double b = 0.0;          // point estimate the verdict rests on
    double p_b_vs_1 = 1.0;   // two-sided p for H0: B = 1
};

inline constexpr double kParallelTolerance = 1e-12;

// Throws InvalidAlpha unless 0 < alpha < 1.
PathwayClass classify_pathway(const EvolutionFit& fit, double alpha);

}  // namespace techevo
