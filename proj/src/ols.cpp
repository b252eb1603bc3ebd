#include "techevo/ols.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "techevo/distributions.hpp"
#include "techevo/error.hpp"
#include "techevo/series.hpp"

namespace techevo {

CoefficientTest test_coefficient(double estimate, double se, double df, double null_value) {
    CoefficientTest out{estimate, se, 0.0, 1.0};
    const double diff = estimate - null_value;
    if (se > 0.0) {
        out.t = diff / se;
        out.p = t_two_sided_p(out.t, df);
    } else if (diff != 0.0) {
        out.t = std::copysign(std::numeric_limits<double>::infinity(), diff);
        out.p = 0.0;
    }
    return out;
}

OlsResult ols_simple(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw Error(ErrorCode::LengthMismatch,
                    "x has " + std::to_string(x.size()) + " values, y has " + std::to_string(y.size()));
    const std::size_t n = x.size();
    if (n < kMinFitPoints)
        throw Error(ErrorCode::TooFewPoints, std::to_string(n) + " observations, need at least 3");

    const double nd = static_cast<double>(n);
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= nd;
    mean_y /= nd;

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    if (!(sxx > 0.0)) throw Error(ErrorCode::DegenerateX, "regressor has zero variance");

    OlsResult r;
    r.n = n;
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;

    r.residuals.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        r.residuals[i] = y[i] - intercept - slope * x[i];
        r.sse += r.residuals[i] * r.residuals[i];
    }
    r.ssr = slope * sxy;

    const double df = nd - 2.0;
    r.see = std::sqrt(r.sse / df);
    const double se_slope = r.see / std::sqrt(sxx);
    const double se_intercept = r.see * std::sqrt(1.0 / nd + mean_x * mean_x / sxx);
    r.slope = test_coefficient(slope, se_slope, df);
    r.intercept = test_coefficient(intercept, se_intercept, df);

    r.r2 = r.sse > 0.0 ? r.ssr / (r.ssr + r.sse) : 1.0;
    r.r2_adj = 1.0 - (1.0 - r.r2) * (nd - 1.0) / df;

    if (r.sse > 0.0) {
        r.f_stat = r.ssr / (r.sse / df);
        r.p_f = f_sf(r.f_stat, 1.0, df);
    } else if (r.ssr > 0.0) {
        r.f_stat = std::numeric_limits<double>::infinity();
        r.p_f = 0.0;
    }
    return r;
}

}  // namespace techevo
