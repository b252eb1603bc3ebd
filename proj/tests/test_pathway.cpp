#include <doctest.h>

#include <boost/math/distributions/students_t.hpp>

#include <cmath>
#include <random>

#include "techevo/error.hpp"
#include "techevo/ols.hpp"
#include "techevo/pathway.hpp"

using namespace techevo;

namespace {

EvolutionFit fit_with(double b, double se, std::size_t n) {
    EvolutionFit f;
    f.n = n;
    f.b = b;
    f.se_b = se;
    const CoefficientTest vs_one = test_coefficient(b, se, double(n) - 2.0, 1.0);
    f.t_b_vs_1 = vs_one.t;
    f.p_b_vs_1 = vs_one.p;
    return f;
}

}  // namespace

TEST_CASE("B = 0.35 (0.02), n = 51 is underdevelopment at 1%") {
    const EvolutionFit f = fit_with(0.35, 0.02, 51);
    CHECK(f.t_b_vs_1 == doctest::Approx(-32.5));
    const PathwayClass c = classify_pathway(f, 0.01);
    CHECK(c.label == Pathway::Underdevelopment);
    CHECK(c.alpha == 0.01);
    CHECK(c.b == 0.35);
    CHECK(c.p_b_vs_1 < 1e-20);
    CHECK(pathway_name(c.label) == "underdevelopment");
}

TEST_CASE("B = 1 exactly is parallel") {
    CHECK(classify_pathway(fit_with(1.0, 0.3, 20), 0.05).label == Pathway::Parallel);
    CHECK(classify_pathway(fit_with(1.0, 0.0, 20), 0.05).label == Pathway::Parallel);
    CHECK(classify_pathway(fit_with(1.0 + 1e-13, 0.0, 20), 0.05).label == Pathway::Parallel);
}

TEST_CASE("wide interval is inconclusive") {
    const EvolutionFit f = fit_with(0.9, 0.5, 10);
    const double p_ref = 2.0 * boost::math::cdf(boost::math::students_t(8), -0.2);
    CHECK(f.p_b_vs_1 == doctest::Approx(p_ref).epsilon(1e-10));
    CHECK(p_ref > 0.5);
    CHECK(classify_pathway(f, 0.05).label == Pathway::Inconclusive);
}

TEST_CASE("B significantly above 1 is development") {
    CHECK(classify_pathway(fit_with(1.8, 0.1, 30), 0.01).label == Pathway::Development);
    CHECK(classify_pathway(fit_with(1.8, 0.6, 30), 0.01).label == Pathway::Inconclusive);
}

TEST_CASE("alpha must lie strictly between 0 and 1") {
    for (double alpha : {0.0, 1.0, -0.1, 1.5, double(NAN)}) {
        try {
            classify_pathway(fit_with(0.5, 0.1, 10), alpha);
            FAIL("expected InvalidAlpha");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidAlpha);
        }
    }
}

TEST_CASE("shrinking the standard error never loses a verdict") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> b(0.0, 2.0), se(0.01, 2.0), shrink(0.05, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const double bb = b(rng), s = se(rng);
        const std::size_t n = 3 + rng() % 60;
        for (double alpha : {0.01, 0.05, 0.1}) {
            const Pathway wide = classify_pathway(fit_with(bb, s, n), alpha).label;
            const Pathway narrow = classify_pathway(fit_with(bb, s * shrink(rng), n), alpha).label;
            if (wide == Pathway::Underdevelopment || wide == Pathway::Development) CHECK(narrow == wide);
        }
    }
}
