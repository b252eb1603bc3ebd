#include "techevo/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "techevo/error.hpp"
#include "techevo/ols.hpp"

namespace techevo {

LogisticParams::LogisticParams(double intercept, double rate, double capacity)
    : a_(intercept), b_(rate), k_(capacity) {
    if (!std::isfinite(a_) || !std::isfinite(b_) || !std::isfinite(k_) || !(b_ > 0.0) || !(k_ > 0.0))
        throw Error(ErrorCode::InvalidParams, "logistic parameters need finite a and b > 0, K > 0 (got a=" +
                                                  std::to_string(a_) + ", b=" + std::to_string(b_) +
                                                  ", K=" + std::to_string(k_) + ")");
}

double logistic_value(const LogisticParams& params, double t) noexcept {
    return params.capacity() / (1.0 + std::exp(params.intercept() - params.rate() * t));
}

double solve_time(const LogisticParams& params, double level) {
    if (!(level > 0.0) || !(level < params.capacity()))
        throw Error(ErrorCode::LevelOutOfRange,
                    "level " + std::to_string(level) + " outside (0, " + std::to_string(params.capacity()) + ")");
    return (params.intercept() - std::log((params.capacity() - level) / level)) / params.rate();
}

std::vector<LinearizedPoint> linearize(const FmtSeries& series, double capacity) {
    std::vector<LinearizedPoint> out;
    out.reserve(series.size());
    for (const auto& p : series.points()) {
        if (!(p.value < capacity))
            throw Error(ErrorCode::KTooSmall, "value " + std::to_string(p.value) + " at t=" + std::to_string(p.t) +
                                                  " is not below K=" + std::to_string(capacity));
        out.push_back({p.t, std::log((capacity - p.value) / p.value)});
    }
    return out;
}

namespace {

struct LineFit {
    double sse = std::numeric_limits<double>::infinity();
    OlsResult ols;
};

LineFit fit_line(const FmtSeries& series, const std::vector<double>& times, double capacity) {
    if (!(series.max_value() < capacity)) return {};
    const auto rows = linearize(series, capacity);
    std::vector<double> y(rows.size());
    std::transform(rows.begin(), rows.end(), y.begin(), [](const LinearizedPoint& r) { return r.y; });
    LineFit out;
    out.ols = ols_simple(times, y);
    out.sse = out.ols.sse;
    return out;
}

}  // namespace

LogisticFit fit_logistic(const FmtSeries& series, const KSearchConfig& search) {
    if (series.size() < kMinFitPoints)
        throw Error(ErrorCode::TooFewPoints, "series '" + series.name() + "' has " + std::to_string(series.size()) +
                                                 " points, need at least 3");
    if (!(search.lower_margin > 0.0) || !(search.factor_max > 1.0 + search.lower_margin) ||
        search.grid_points < 3 || !(search.relative_tolerance > 0.0))
        throw Error(ErrorCode::InvalidParams, "K search needs factor_max > 1 + lower_margin, lower_margin > 0, "
                                              "at least 3 grid points and a positive tolerance");

    const std::vector<double> times = series.times();
    const double vmax = series.max_value();

    // Candidates are K = vmax * (1 + margin) with the margin spaced
    // geometrically, so capacities just above the largest observation are
    // resolved as finely as distant ones. The refinement works in log-margin
    // and stops once the margin is pinned to relative_tolerance.
    std::vector<KTrial> trace;
    auto capacity_at = [&](double log_margin) { return vmax * (1.0 + std::exp(log_margin)); };
    auto probe = [&](double log_margin) {
        const double k = capacity_at(log_margin);
        const double sse = fit_line(series, times, k).sse;
        trace.push_back({k, sse});
        return sse;
    };

    const std::size_t g = search.grid_points;
    const double u_lo = std::log(search.lower_margin);
    const double u_hi = std::log(search.factor_max - 1.0);
    std::vector<double> grid(g);
    for (std::size_t j = 0; j < g; ++j)
        grid[j] = j + 1 == g ? u_hi : u_lo + (u_hi - u_lo) * static_cast<double>(j) / static_cast<double>(g - 1);

    std::size_t best = 0;
    for (std::size_t j = 0; j < g; ++j) {
        if (probe(grid[j]) < trace[best].sse) best = j;
    }

    // Golden-section refinement inside the neighbouring grid cells.
    double left = grid[best == 0 ? 0 : best - 1];
    double right = grid[std::min(best + 1, g - 1)];
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = right - inv_phi * (right - left);
    double x2 = left + inv_phi * (right - left);
    double f1 = probe(x1);
    double f2 = probe(x2);
    while (right - left > search.relative_tolerance) {
        if (f1 <= f2) {
            right = x2;
            x2 = x1;
            f2 = f1;
            x1 = right - inv_phi * (right - left);
            f1 = probe(x1);
        } else {
            left = x1;
            x1 = x2;
            f1 = f2;
            x2 = left + inv_phi * (right - left);
            f2 = probe(x2);
        }
    }

    const auto best_trial = std::min_element(trace.begin(), trace.end(),
                                             [](const KTrial& l, const KTrial& r) { return l.sse < r.sse; });
    const double capacity = best_trial->capacity;
    const LineFit line = fit_line(series, times, capacity);
    const double rate = -line.ols.slope.estimate;
    if (!(rate > 0.0))
        throw Error(ErrorCode::NotSShaped, "series '" + series.name() + "' gives growth rate b=" +
                                               std::to_string(rate) + " <= 0 at the best K");

    return LogisticFit{LogisticParams(line.ols.intercept.estimate, rate, capacity), line.sse, line.ols.r2,
                       std::move(trace)};
}

}  // namespace techevo
