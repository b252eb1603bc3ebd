// techevo: logistic S-curve fitting and host/subsystem coevolution analysis
// of Functional Measures of Technology.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "techevo/coevolution.hpp"
#include "techevo/error.hpp"
#include "techevo/json_text.hpp"
#include "techevo/logistic.hpp"
#include "techevo/pathway.hpp"
#include "techevo/report.hpp"
#include "techevo/series.hpp"
#include "techevo/synthetic.hpp"

namespace fs = std::filesystem;
using namespace techevo;

namespace {

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw Error(ErrorCode::Io, "failed writing '" + path.string() + "'");
}

fs::path ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot create directory '" + dir + "': " + ec.message());
    return fs::path(dir);
}

void write_plot(const fs::path& dir, const std::string& stem, const PlotFiles& files) {
    write_file(dir / (stem + ".csv"), files.csv);
    write_file(dir / (stem + ".svg"), files.svg);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

LogisticParams params_from(const std::vector<double>& v) { return LogisticParams(v.at(0), v.at(1), v.at(2)); }

std::string fit_table(const FmtSeries& s, const LogisticFit& fit) {
    const auto& p = fit.params;
    return "series: " + s.name() + " (n=" + std::to_string(s.size()) + ")\n" +
           "a = " + format_real(p.intercept()) + "\n" + "b = " + format_real(p.rate()) + "\n" +
           "K = " + format_real(p.capacity()) + "\n" + "inflection t = " + format_real(p.inflection_time()) + "\n" +
           "linearized SSE = " + format_real(fit.sse_linearized) + "\n" +
           "linearized R2 = " + format_real(fit.r2_linearized) + "\n";
}

Json fit_json(const FmtSeries& s, const std::string& file, const LogisticFit& fit) {
    Json trace = Json::array();
    for (const auto& k : fit.k_search_trace) trace.push_back(Json::array({real_to_json(k.capacity), real_to_json(k.sse)}));
    const auto& p = fit.params;
    return Json{{"input", Json{{"file", fs::path(file).filename().string()},
                               {"series", s.name()},
                               {"n", s.size()},
                               {"t_min", real_to_json(s.t_min())},
                               {"t_max", real_to_json(s.t_max())}}},
                {"logistic", Json{{"a", real_to_json(p.intercept())},
                                  {"b", real_to_json(p.rate())},
                                  {"k", real_to_json(p.capacity())},
                                  {"inflection_t", real_to_json(p.inflection_time())},
                                  {"sse_linearized", real_to_json(fit.sse_linearized)},
                                  {"r2_linearized", real_to_json(fit.r2_linearized)}}},
                {"k_search_trace", trace}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"techevo: technology S-curves and evolutionary coefficient of subsystem vs host"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string series_path, host_path, sub_path, format = "table", plot_dir, out_path;
    double alpha = 0.01;
    double k_factor = 10.0;
    bool logistic = false;

    auto* fit_cmd = app.add_subcommand("fit", "Fit a logistic S-curve to one FMT series");
    fit_cmd->add_option("--series", series_path, "CSV file with header t,value")->required();
    fit_cmd->add_option("--k-search-factor", k_factor, "Upper end of the K grid as a multiple of the max value")
        ->check(CLI::PositiveNumber);
    fit_cmd->add_option("--format", format, "Output format (default table)")->check(CLI::IsMember({"json", "table"}));
    fit_cmd->add_option("--plot", plot_dir, "Directory for CSV/SVG plot data");
    fit_cmd->add_option("--out", out_path, "Write output to a file instead of stdout");

    auto* evolve_cmd = app.add_subcommand("evolve", "Estimate B in P = A * H^B and classify the pathway");
    auto* report_cmd = app.add_subcommand("report", "Full pipeline: report JSON or table, optional plots");
    for (auto* cmd : {evolve_cmd, report_cmd}) {
        cmd->add_option("--host", host_path, "Host technology CSV (H)")->required();
        cmd->add_option("--sub", sub_path, "Subsystem technology CSV (P)")->required();
        cmd->add_option("--alpha", alpha, "Significance level for the pathway test");
        cmd->add_option("--format", format, "Output format (default table)")->check(CLI::IsMember({"json", "table"}));
        cmd->add_option("--out", out_path, "Write output to a file instead of stdout");
        cmd->add_flag("--logistic", logistic, "Also fit logistic S-curves to both series");
        cmd->add_option("--k-search-factor", k_factor, "Upper end of the K grid as a multiple of the max value")
            ->check(CLI::PositiveNumber);
    }
    report_cmd->add_option("--plot", plot_dir, "Directory for CSV/SVG plot data");

    std::vector<double> host_params, sub_params, power_law;
    double t_start = 0.0, t_end = 50.0, noise = 0.0, early_cap = 0.0;
    int n_points = 51;
    std::uint64_t seed = 42;
    std::string sim_out = ".";
    auto* sim_cmd = app.add_subcommand("simulate", "Generate a synthetic host/subsystem pair");
    sim_cmd->add_option("--host-params", host_params, "Host logistic a,b,K")->required()->expected(3)->delimiter(',');
    sim_cmd->add_option("--sub-params", sub_params, "Subsystem logistic a,b,K")->expected(3)->delimiter(',');
    sim_cmd->add_option("--power-law", power_law, "Subsystem as A,B power law of the host")->expected(2)->delimiter(',');
    sim_cmd->add_option("--t-start", t_start);
    sim_cmd->add_option("--t-end", t_end);
    sim_cmd->add_option("--n", n_points);
    sim_cmd->add_option("--noise", noise, "Log-normal noise sigma");
    sim_cmd->add_option("--seed", seed);
    sim_cmd->add_option("--early-cap", early_cap, "Keep rows below this fraction of both capacities");
    sim_cmd->add_option("--out", sim_out, "Output directory for host.csv and sub.csv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fit_cmd->parsed()) {
            const FmtSeries series = load_fmt_csv(series_path);
            KSearchConfig search;
            search.factor_max = k_factor;
            LogisticFit fit = [&] {
                try {
                    return fit_logistic(series, search);
                } catch (const Error& e) {
                    throw Error(e.code(), series_path + ": " + e.detail());
                }
            }();
            emit(format == "json" ? dump_json(fit_json(series, series_path, fit)) : fit_table(series, fit), out_path);
            if (!plot_dir.empty()) write_plot(ensure_dir(plot_dir), series.name(), emit_plot_data(series, fit.params));
        } else if (evolve_cmd->parsed() || report_cmd->parsed()) {
            ReportConfig config;
            config.alpha = alpha;
            config.k_search_factor = k_factor;
            config.fit_logistic = logistic;
            const PipelineRun run = run_pipeline_detailed(host_path, sub_path, config);
            emit(format == "json" ? serialize_report(run.report) : emit_table(run.report), out_path);
            if (report_cmd->parsed() && !plot_dir.empty()) {
                const fs::path dir = ensure_dir(plot_dir);
                std::optional<LogisticParams> host_fit, sub_fit;
                if (run.report.logistic_fits) {
                    host_fit = run.report.logistic_fits->host.params;
                    sub_fit = run.report.logistic_fits->sub.params;
                }
                write_plot(dir, "host", emit_plot_data(run.pair.host, host_fit));
                write_plot(dir, "sub", emit_plot_data(run.pair.sub, sub_fit));
                write_plot(dir, "evolution", emit_evolution_plot(run.pair, run.report.evolution));
            }
        } else if (sim_cmd->parsed()) {
            const LogisticParams hp = params_from(host_params);
            AlignedPair pair = [&] {
                if (!power_law.empty()) {
                    return power_law_pair(PowerLawSpec{hp, t_start, t_end, n_points, power_law[0], power_law[1], noise, seed});
                }
                if (sub_params.empty()) throw Error(ErrorCode::InvalidSpec, "need --sub-params or --power-law");
                const SyntheticSpec spec{hp, params_from(sub_params), t_start, t_end, n_points, noise, seed};
                return early_cap > 0.0 ? early_phase_pair(spec, early_cap) : generate_pair(spec);
            }();
            const fs::path dir = ensure_dir(sim_out);
            write_file(dir / "host.csv", to_csv(pair.host));
            write_file(dir / "sub.csv", to_csv(pair.sub));
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
