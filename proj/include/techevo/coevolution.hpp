#pragma once
// Coevolution of a subsystem technology P with its host technology H.
//
// P = A * H^B is estimated in log-log form, log P = log A + B log H, by OLS on
// the observed aligned series. B is the evolutionary coefficient: B < 1 means
// the subsystem advances more slowly than its host.
//
// For two logistic technologies the odds transforms are tied exactly by
//
//     H / (K1 - H) = C1 * (P / (K2 - P))^(b1 / b2),  C1 = exp((b1 / b2) a2 - a1),
//
// which reduces to the power law with B = b2 / b1 while both are far below
// saturation.

#include <cstddef>

#include "techevo/logistic.hpp"
#include "techevo/series.hpp"

namespace techevo {

struct EvolutionFit {
    std::size_t n = 0;
    double log_a = 0.0;  // intercept, natural log of A
    double a = 1.0;      // exp(log_a)
    double b = 0.0;      // evolutionary coefficient
    double se_log_a = 0.0;
    double se_b = 0.0;
    double t_log_a = 0.0;
    double p_log_a = 1.0;
    double t_b = 0.0;  // H0: B = 0
    double p_b = 1.0;
    double t_b_vs_1 = 0.0;  // H0: B = 1
    double p_b_vs_1 = 1.0;
    double r2 = 0.0;
    double r2_adj = 0.0;
    double f_stat = 0.0;
    double p_f = 1.0;
    double see = 0.0;  // standard error of the estimate
    double sse = 0.0;  // residual sum of squares
};

// Regresses ln(sub) on ln(host) over the aligned rows; p-values use Student t
// with n - 2 degrees of freedom. Throws NonPositiveValue, TooFewPoints or
// DegenerateX.
EvolutionFit estimate_evolution(const AlignedPair& pair);

// A * h^B. Throws NonPositiveValue for h <= 0.
double predict_subsystem(const EvolutionFit& fit, double host_level);

struct RelationConstant {
    double c1 = 1.0;
    double exponent = 1.0;  // b1 / b2
};

RelationConstant relation_constant(const LogisticParams& host, const LogisticParams& sub);

struct RelationCheck {
    double max_abs_residual = 0.0;  // max over rows of |H/(K1-H) - C1 (P/(K2-P))^exponent|
    double scale = 0.0;             // max over rows of H/(K1-H)
};

// Evaluates the odds identity on every aligned row. Throws ValueAtSaturation
// if a value reaches its capacity.
RelationCheck check_relation(const AlignedPair& pair, const LogisticParams& host, const LogisticParams& sub,
                             const RelationConstant& rc);

}  // namespace techevo
