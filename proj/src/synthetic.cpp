#include "techevo/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "techevo/error.hpp"

namespace techevo {

double SplitMix64::normal() noexcept {
    const double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = uniform();
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    return std::clamp(z, -kNoiseClamp, kNoiseClamp);
}

namespace {

void check_grid(double t_start, double t_end, int n_points, double noise_sigma) {
    if (!(t_start < t_end) || !std::isfinite(t_start) || !std::isfinite(t_end))
        throw Error(ErrorCode::InvalidSpec, "need finite t_start < t_end");
    if (n_points < 3) throw Error(ErrorCode::InvalidSpec, "need at least 3 points, got " + std::to_string(n_points));
    if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma))
        throw Error(ErrorCode::InvalidSpec, "noise_sigma must be finite and >= 0");
}

std::vector<double> uniform_grid(double t_start, double t_end, int n_points) {
    std::vector<double> t(static_cast<std::size_t>(n_points));
    const double step = (t_end - t_start) / static_cast<double>(n_points - 1);
    for (int i = 0; i < n_points; ++i) t[static_cast<std::size_t>(i)] = t_start + step * i;
    t.back() = t_end;
    return t;
}

AlignedPair pair_from(const std::vector<FmtPoint>& host, const std::vector<FmtPoint>& sub) {
    std::vector<AlignedRow> rows;
    rows.reserve(host.size());
    for (std::size_t i = 0; i < host.size(); ++i) rows.push_back({host[i].t, host[i].value, sub[i].value});
    return AlignedPair{FmtSeries("host", "", host), FmtSeries("sub", "", sub), std::move(rows)};
}

}  // namespace

void validate(const SyntheticSpec& spec) { check_grid(spec.t_start, spec.t_end, spec.n_points, spec.noise_sigma); }

AlignedPair generate_pair(const SyntheticSpec& spec) {
    validate(spec);
    SplitMix64 rng(spec.seed);
    std::vector<FmtPoint> host;
    std::vector<FmtPoint> sub;
    for (double t : uniform_grid(spec.t_start, spec.t_end, spec.n_points)) {
        const double host_noise = std::exp(spec.noise_sigma * rng.normal());
        const double sub_noise = std::exp(spec.noise_sigma * rng.normal());
        host.push_back({t, logistic_value(spec.host_params, t) * host_noise});
        sub.push_back({t, logistic_value(spec.sub_params, t) * sub_noise});
    }
    return pair_from(host, sub);
}

AlignedPair early_phase_pair(const SyntheticSpec& spec, double cap_fraction) {
    validate(spec);
    if (spec.noise_sigma != 0.0) throw Error(ErrorCode::InvalidSpec, "early-phase pairs must be noise-free");
    if (!(cap_fraction > 0.0 && cap_fraction < 1.0))
        throw Error(ErrorCode::InvalidSpec, "cap_fraction must lie in (0, 1)");
    const double host_cap = cap_fraction * spec.host_params.capacity();
    const double sub_cap = cap_fraction * spec.sub_params.capacity();
    std::vector<FmtPoint> host;
    std::vector<FmtPoint> sub;
    for (double t : uniform_grid(spec.t_start, spec.t_end, spec.n_points)) {
        const double h = logistic_value(spec.host_params, t);
        const double p = logistic_value(spec.sub_params, t);
        if (h <= host_cap && p <= sub_cap) {
            host.push_back({t, h});
            sub.push_back({t, p});
        }
    }
    if (host.size() < kMinFitPoints)
        throw Error(ErrorCode::EmptyEarlyPhase, std::to_string(host.size()) + " rows below " +
                                                    std::to_string(cap_fraction) + " of capacity, need at least 3");
    return pair_from(host, sub);
}

AlignedPair power_law_pair(const PowerLawSpec& spec) {
    check_grid(spec.t_start, spec.t_end, spec.n_points, spec.noise_sigma);
    if (!(spec.scale > 0.0) || !std::isfinite(spec.exponent))
        throw Error(ErrorCode::InvalidSpec, "power law needs scale > 0 and a finite exponent");
    SplitMix64 rng(spec.seed);
    std::vector<FmtPoint> host;
    std::vector<FmtPoint> sub;
    for (double t : uniform_grid(spec.t_start, spec.t_end, spec.n_points)) {
        const double h = logistic_value(spec.host_params, t);
        const double noise = std::exp(spec.noise_sigma * rng.normal());
        host.push_back({t, h});
        sub.push_back({t, spec.scale * std::pow(h, spec.exponent) * noise});
    }
    return pair_from(host, sub);
}

}  // namespace techevo
