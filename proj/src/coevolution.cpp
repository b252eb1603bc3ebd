#include "techevo/coevolution.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "techevo/error.hpp"
#include "techevo/ols.hpp"

namespace techevo {

EvolutionFit estimate_evolution(const AlignedPair& pair) {
    std::vector<double> log_host;
    std::vector<double> log_sub;
    log_host.reserve(pair.rows.size());
    log_sub.reserve(pair.rows.size());
    for (const auto& row : pair.rows) {
        if (!(row.host > 0.0) || !(row.sub > 0.0))
            throw Error(ErrorCode::NonPositiveValue, "cannot take the log of a non-positive value at t=" +
                                                         std::to_string(row.t));
        log_host.push_back(std::log(row.host));
        log_sub.push_back(std::log(row.sub));
    }
    const OlsResult ols = ols_simple(log_host, log_sub);
    const double df = static_cast<double>(ols.n) - 2.0;
    const CoefficientTest vs_one = test_coefficient(ols.slope.estimate, ols.slope.se, df, 1.0);

    EvolutionFit fit;
    fit.n = ols.n;
    fit.log_a = ols.intercept.estimate;
    fit.a = std::exp(fit.log_a);
    fit.b = ols.slope.estimate;
    fit.se_log_a = ols.intercept.se;
    fit.se_b = ols.slope.se;
    fit.t_log_a = ols.intercept.t;
    fit.p_log_a = ols.intercept.p;
    fit.t_b = ols.slope.t;
    fit.p_b = ols.slope.p;
    fit.t_b_vs_1 = vs_one.t;
    fit.p_b_vs_1 = vs_one.p;
    fit.r2 = ols.r2;
    fit.r2_adj = ols.r2_adj;
    fit.f_stat = ols.f_stat;
    fit.p_f = ols.p_f;
    fit.see = ols.see;
    fit.sse = ols.sse;
    return fit;
}

double predict_subsystem(const EvolutionFit& fit, double host_level) {
    if (!(host_level > 0.0))
        throw Error(ErrorCode::NonPositiveValue, "host level must be > 0, got " + std::to_string(host_level));
    return fit.a * std::pow(host_level, fit.b);
}

RelationConstant relation_constant(const LogisticParams& host, const LogisticParams& sub) {
    const double exponent = host.rate() / sub.rate();
    return {std::exp(exponent * sub.intercept() - host.intercept()), exponent};
}

RelationCheck check_relation(const AlignedPair& pair, const LogisticParams& host, const LogisticParams& sub,
                             const RelationConstant& rc) {
    RelationCheck out;
    for (const auto& row : pair.rows) {
        if (!(row.host < host.capacity()) || !(row.sub < sub.capacity()))
            throw Error(ErrorCode::ValueAtSaturation, "value at or above capacity at t=" + std::to_string(row.t));
        const double host_odds = row.host / (host.capacity() - row.host);
        const double sub_odds = row.sub / (sub.capacity() - row.sub);
        const double residual = std::fabs(host_odds - rc.c1 * std::pow(sub_odds, rc.exponent));
        out.max_abs_residual = std::max(out.max_abs_residual, residual);
        out.scale = std::max(out.scale, host_odds);
    }
    return out;
}

}  // namespace techevo
