#pragma once
// Symmetric logistic S-curve of a single technology,
//
//     value(t) = K / (1 + exp(a - b t)),   log((K - value) / value) = a - b t,
//
// with inflection at t* = a / b where value = K / 2. Natural log throughout.

#include <cstddef>
#include <utility>
#include <vector>

#include "techevo/series.hpp"

namespace techevo {

class LogisticParams {
public:
    // Throws InvalidParams unless a is finite and b, K are finite and > 0.
    LogisticParams(double intercept, double rate, double capacity);

    double intercept() const noexcept { return a_; }  // a
    double rate() const noexcept { return b_; }       // b
    double capacity() const noexcept { return k_; }   // K
    double inflection_time() const noexcept { return a_ / b_; }

    friend bool operator==(const LogisticParams&, const LogisticParams&) = default;

private:
    double a_;
    double b_;
    double k_;
};

double logistic_value(const LogisticParams& params, double t) noexcept;

// Inverse of logistic_value. Throws LevelOutOfRange unless 0 < level < K.
double solve_time(const LogisticParams& params, double level);

struct LinearizedPoint {
    double t = 0.0;
    double y = 0.0;  // log((K - v) / v)
};

// Throws KTooSmall if any value >= capacity.
std::vector<LinearizedPoint> linearize(const FmtSeries& series, double capacity);

// K is searched over (max * (1 + lower_margin), max * factor_max] where max is
// the largest observed value; candidate margins K / max - 1 are geometric.
struct KSearchConfig {
    double factor_max = 10.0;
    double lower_margin = 1e-9;
    std::size_t grid_points = 64;
    double relative_tolerance = 1e-9;  // golden-section stopping width, relative to the margin
};

struct KTrial {
    double capacity = 0.0;
    double sse = 0.0;  // +inf where the candidate is infeasible
};

struct LogisticFit {
    LogisticParams params;
    double sse_linearized = 0.0;
    double r2_linearized = 0.0;
    std::vector<KTrial> k_search_trace;  // grid first, then golden-section probes
};

// Chooses K on the KSearchConfig grid refined by golden-section search, minimising the SSE of the straight-line fit to
// linearize(series, K); a and b follow from that line. Throws TooFewPoints,
// InvalidParams (bad config) or NotSShaped when the best line has b <= 0.
LogisticFit fit_logistic(const FmtSeries& series, const KSearchConfig& search = {});

}  // namespace techevo
