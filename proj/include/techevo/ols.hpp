#pragma once
// Simple (one regressor) ordinary least squares with the usual inference
// statistics.

#include <cstddef>
#include <span>
#include <vector>

namespace techevo {

struct CoefficientTest {
    double estimate = 0.0;
    double se = 0.0;
    double t = 0.0;
    double p = 1.0;  // two-sided
};

// Two-sided Student-t test of H0: estimate == null_value with df degrees of
// freedom. A zero standard error gives t = +-inf, p = 0 (or t = 0, p = 1 when
// the estimate equals the null value exactly).
CoefficientTest test_coefficient(double estimate, double se, double df, double null_value = 0.0);

struct OlsResult {
    std::size_t n = 0;
    CoefficientTest slope;
    CoefficientTest intercept;
    double r2 = 0.0;
    double r2_adj = 0.0;
    double f_stat = 0.0;
    double p_f = 1.0;
    double see = 0.0;  // residual standard error, sqrt(sse / (n - 2))
    double sse = 0.0;  // residual sum of squares
    double ssr = 0.0;  // regression sum of squares
    std::vector<double> residuals;
};

// Fits y = intercept + slope * x. Throws LengthMismatch, TooFewPoints (n < 3)
// or DegenerateX (x has zero variance).
//
// A perfect fit (sse == 0) reports r2 = 1 and zero standard errors; F is then
// +inf unless the slope is exactly zero.
OlsResult ols_simple(std::span<const double> x, std::span<const double> y);

}  // namespace techevo
