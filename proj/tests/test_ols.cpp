#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "techevo/error.hpp"
#include "techevo/ols.hpp"

using namespace techevo;

TEST_CASE("ols_simple on collinear points") {
    const std::vector<double> x{0, 1, 2};
    const std::vector<double> y{0, 1, 2};
    const OlsResult r = ols_simple(x, y);
    CHECK(r.slope.estimate == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::fabs(r.intercept.estimate) < 1e-15);
    CHECK(r.r2 == 1.0);
    CHECK(r.r2_adj == 1.0);
    CHECK(r.see == 0.0);
    CHECK(std::isinf(r.f_stat));
    CHECK(r.p_f == 0.0);
    CHECK(r.slope.p == 0.0);
}

TEST_CASE("ols_simple preconditions") {
    auto code = [](std::vector<double> x, std::vector<double> y) {
        try {
            ols_simple(x, y);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Io;
    };
    CHECK(code({0, 1}, {1, 3}) == ErrorCode::TooFewPoints);
    CHECK(code({0, 1, 2}, {1, 3}) == ErrorCode::LengthMismatch);
    CHECK(code({2, 2, 2, 2}, {1, 3, 4, 5}) == ErrorCode::DegenerateX);
}

TEST_CASE("ols_simple matches the normal equations on a random n = 12 dataset") {
    std::mt19937_64 rng(12);
    std::normal_distribution<double> noise(0.0, 0.7);
    std::uniform_real_distribution<double> xs(-3.0, 9.0);
    std::vector<double> x(12), y(12);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = xs(rng);
        y[i] = 1.5 - 0.8 * x[i] + noise(rng);
    }
    const OlsResult r = ols_simple(x, y);
    const oracle::LineEstimate ref = oracle::normal_equations(x, y);
    CHECK(oracle::rel_close(r.slope.estimate, ref.slope, 1e-10));
    CHECK(oracle::rel_close(r.intercept.estimate, ref.intercept, 1e-10));
    CHECK(oracle::rel_close(r.slope.se, ref.se_slope, 1e-10));
    CHECK(oracle::rel_close(r.intercept.se, ref.se_intercept, 1e-10));
    CHECK(oracle::rel_close(r.sse, ref.sse, 1e-10));
}

TEST_CASE("ols_simple residual diagnostics and identities") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 3 + rng() % 60;
        const double scale = std::pow(10.0, std::uniform_real_distribution<double>(-3, 3)(rng));
        std::normal_distribution<double> xs(std::uniform_real_distribution<double>(-50, 50)(rng), scale);
        std::normal_distribution<double> noise(0.0, scale);
        const double slope = std::uniform_real_distribution<double>(-4, 4)(rng);
        std::vector<double> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = xs(rng);
            y[i] = 3.0 + slope * x[i] + noise(rng);
        }
        const OlsResult r = ols_simple(x, y);
        double y_scale = 0.0, x_scale = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y_scale = std::max(y_scale, std::fabs(y[i]));
            x_scale = std::max(x_scale, std::fabs(x[i]));
        }
        const double sum_r = std::accumulate(r.residuals.begin(), r.residuals.end(), 0.0);
        double sum_rx = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum_rx += r.residuals[i] * x[i];
        CHECK(std::fabs(sum_r) <= 1e-9 * y_scale * static_cast<double>(n));
        CHECK(std::fabs(sum_rx) <= 1e-9 * y_scale * x_scale * static_cast<double>(n));

        const double nd = static_cast<double>(n);
        CHECK(r.r2_adj <= r.r2);
        CHECK(r.r2 <= 1.0);
        CHECK(std::fabs(r.r2_adj - (1.0 - (1.0 - r.r2) * (nd - 1.0) / (nd - 2.0))) < 1e-12);
        CHECK(oracle::rel_close(r.see * r.see * (nd - 2.0), r.sse, 1e-10));
        CHECK(oracle::rel_close(r.f_stat, r.slope.t * r.slope.t, 1e-8));
        CHECK(std::fabs(r.p_f - r.slope.p) < 1e-9);
    }
}

TEST_CASE("test_coefficient") {
    const CoefficientTest c = test_coefficient(0.35, 0.02, 49, 1.0);
    CHECK(c.t == doctest::Approx(-32.5).epsilon(1e-12));
    CHECK(c.p < 1e-30);
    const CoefficientTest exact = test_coefficient(2.0, 0.0, 5, 2.0);
    CHECK(exact.t == 0.0);
    CHECK(exact.p == 1.0);
    const CoefficientTest sure = test_coefficient(2.0, 0.0, 5, 1.0);
    CHECK(std::isinf(sure.t));
    CHECK(sure.p == 0.0);
}
