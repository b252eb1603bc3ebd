#include "techevo/pathway.hpp"

#include <cmath>
#include <string>

#include "techevo/error.hpp"

namespace techevo {

std::string_view pathway_name(Pathway p) noexcept {
    switch (p) {
        case Pathway::Underdevelopment: return "underdevelopment";
        case Pathway::Parallel: return "parallel";
        case Pathway::Development: return "development";
        case Pathway::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

PathwayClass classify_pathway(const EvolutionFit& fit, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw Error(ErrorCode::InvalidAlpha, "alpha must lie in (0, 1), got " + std::to_string(alpha));
    PathwayClass out{Pathway::Inconclusive, alpha, fit.b, fit.p_b_vs_1};
    if (std::fabs(fit.b - 1.0) <= kParallelTolerance)
        out.label = Pathway::Parallel;
    else if (fit.p_b_vs_1 < alpha)
        out.label = fit.b < 1.0 ? Pathway::Underdevelopment : Pathway::Development;
    return out;
}

}  // namespace techevo
