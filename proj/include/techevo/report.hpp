#pragma once
// Analysis pipeline and its artifacts: JSON report, fixed-width coefficient
// table and plot data (CSV + SVG).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "techevo/coevolution.hpp"
#include "techevo/json_text.hpp"
#include "techevo/logistic.hpp"
#include "techevo/pathway.hpp"
#include "techevo/series.hpp"

namespace techevo {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kReportSchema = "techevo.report/1";

struct ReportConfig {
    double alpha = 0.01;
    double k_search_factor = 10.0;
    bool fit_logistic = false;
};

struct SeriesInfo {
    std::string file;    // file name without directories
    std::string series;
    std::size_t n = 0;
    double t_min = 0.0;
    double t_max = 0.0;
};

struct LogisticSummary {
    LogisticParams params;
    double sse_linearized = 0.0;
    double r2_linearized = 0.0;
    std::size_t k_search_evaluations = 0;
};

struct LogisticPairSummary {
    LogisticSummary host;
    LogisticSummary sub;
};

struct Provenance {
    std::string tool_version{kToolVersion};
    ReportConfig config;
    std::string timestamp;  // ISO-8601 UTC; excluded from the digest
};

struct AnalysisReport {
    SeriesInfo host;
    SeriesInfo sub;
    std::size_t aligned_n = 0;
    std::optional<LogisticPairSummary> logistic_fits;
    EvolutionFit evolution;
    PathwayClass pathway;
    Provenance provenance;
};

SeriesInfo describe(const FmtSeries& series, std::string file);
LogisticSummary summarize(const LogisticFit& fit);

// Pure part of the pipeline; leaves the timestamp empty.
AnalysisReport build_report(const AlignedPair& pair, const ReportConfig& config, const std::string& host_file,
                            const std::string& sub_file);

// Loads both CSV files, aligns, optionally fits logistics, estimates B and
// classifies. Upstream errors propagate as techevo::Error with file context.
AnalysisReport run_pipeline(const std::string& host_csv, const std::string& sub_csv, const ReportConfig& config);

// As run_pipeline, also handing back the aligned data for plotting.
struct PipelineRun {
    AlignedPair pair;
    AnalysisReport report;
};
PipelineRun run_pipeline_detailed(const std::string& host_csv, const std::string& sub_csv, const ReportConfig& config);

Json report_to_json(const AnalysisReport& report);  // without the digest field
AnalysisReport report_from_json(const Json& j);

// SHA-256 (hex) of the canonical report text with the timestamp removed.
std::string report_digest(const AnalysisReport& report);

// Canonical JSON text including the "digest" field.
std::string serialize_report(const AnalysisReport& report);
AnalysisReport parse_report(std::string_view text);

// "***" below 1%, "**" below 5%, "*" below 10%, otherwise empty.
std::string_view significance_stars(double p);

// "0.35*** (0.02)": estimate and standard error to two decimals.
std::string format_coefficient_cell(double estimate, double se, double p);

// Coefficient table: Constant alpha, Evolutionary coefficient beta=B,
// R2 adj. (St. Err. of the Estimate), F (sign.), n.
std::string emit_table(const AnalysisReport& report);

struct PlotFiles {
    std::string csv;
    std::string svg;
};

// Observed series, plus the fitted S-curve when one is given.
PlotFiles emit_plot_data(const FmtSeries& series, const std::optional<LogisticParams>& fitted);

// Aligned rows with the fitted power law A * H^B; SVG on log-log axes.
PlotFiles emit_evolution_plot(const AlignedPair& pair, const EvolutionFit& fit);

}  // namespace techevo
