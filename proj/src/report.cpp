#include "techevo/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <vector>

#include "techevo/error.hpp"

namespace techevo {

namespace {

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string fixed(double v, int decimals) {
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

// Two decimals, switching to scientific notation for very large magnitudes.
std::string statistic(double v) {
    if (std::isfinite(v) && std::fabs(v) >= 1e6) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2e", v);
        return buf;
    }
    return fixed(v, 2);
}

std::string format_p(double p) {
    if (p < 0.0005) return "<0.001";
    return fixed(p, 3);
}

std::string sha256_hex(std::string_view text) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(kHex[md[i] >> 4]);
        out.push_back(kHex[md[i] & 0xF]);
    }
    return out;
}

// Field access with a MalformedReport error naming the missing key.
const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::MalformedReport, std::string("missing field '") + key + "'");
    return j.at(key);
}

double real_field(const Json& j, const char* key) { return real_from_json(field(j, key)); }

std::size_t count_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() && !v.is_number_integer())
        throw Error(ErrorCode::MalformedReport, std::string("field '") + key + "' is not an integer");
    return v.get<std::size_t>();
}

std::string text_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw Error(ErrorCode::MalformedReport, std::string("field '") + key + "' is not a string");
    return v.get<std::string>();
}

Json series_json(const SeriesInfo& s) {
    return Json{{"file", s.file}, {"series", s.series}, {"n", s.n},
                {"t_min", real_to_json(s.t_min)}, {"t_max", real_to_json(s.t_max)}};
}

SeriesInfo series_from_json(const Json& j) {
    return {text_field(j, "file"), text_field(j, "series"), count_field(j, "n"), real_field(j, "t_min"),
            real_field(j, "t_max")};
}

Json logistic_json(const LogisticSummary& s) {
    return Json{{"a", real_to_json(s.params.intercept())},
                {"b", real_to_json(s.params.rate())},
                {"k", real_to_json(s.params.capacity())},
                {"inflection_t", real_to_json(s.params.inflection_time())},
                {"sse_linearized", real_to_json(s.sse_linearized)},
                {"r2_linearized", real_to_json(s.r2_linearized)},
                {"k_search_evaluations", s.k_search_evaluations}};
}

LogisticSummary logistic_from_json(const Json& j) {
    return {LogisticParams(real_field(j, "a"), real_field(j, "b"), real_field(j, "k")),
            real_field(j, "sse_linearized"), real_field(j, "r2_linearized"), count_field(j, "k_search_evaluations")};
}

Json evolution_json(const EvolutionFit& f) {
    return Json{{"n", f.n},
                {"log_a", real_to_json(f.log_a)},
                {"a", real_to_json(f.a)},
                {"b", real_to_json(f.b)},
                {"se_log_a", real_to_json(f.se_log_a)},
                {"se_b", real_to_json(f.se_b)},
                {"t_log_a", real_to_json(f.t_log_a)},
                {"p_log_a", real_to_json(f.p_log_a)},
                {"t_b", real_to_json(f.t_b)},
                {"p_b", real_to_json(f.p_b)},
                {"t_b_vs_1", real_to_json(f.t_b_vs_1)},
                {"p_b_vs_1", real_to_json(f.p_b_vs_1)},
                {"r2", real_to_json(f.r2)},
                {"r2_adj", real_to_json(f.r2_adj)},
                {"f_stat", real_to_json(f.f_stat)},
                {"p_f", real_to_json(f.p_f)},
                {"see", real_to_json(f.see)},
                {"sse", real_to_json(f.sse)}};
}

EvolutionFit evolution_from_json(const Json& j) {
    EvolutionFit f;
    f.n = count_field(j, "n");
    f.log_a = real_field(j, "log_a");
    f.a = real_field(j, "a");
    f.b = real_field(j, "b");
    f.se_log_a = real_field(j, "se_log_a");
    f.se_b = real_field(j, "se_b");
    f.t_log_a = real_field(j, "t_log_a");
    f.p_log_a = real_field(j, "p_log_a");
    f.t_b = real_field(j, "t_b");
    f.p_b = real_field(j, "p_b");
    f.t_b_vs_1 = real_field(j, "t_b_vs_1");
    f.p_b_vs_1 = real_field(j, "p_b_vs_1");
    f.r2 = real_field(j, "r2");
    f.r2_adj = real_field(j, "r2_adj");
    f.f_stat = real_field(j, "f_stat");
    f.p_f = real_field(j, "p_f");
    f.see = real_field(j, "see");
    f.sse = real_field(j, "sse");
    return f;
}

Pathway pathway_from_name(const std::string& name) {
    for (Pathway p : {Pathway::Underdevelopment, Pathway::Parallel, Pathway::Development, Pathway::Inconclusive})
        if (pathway_name(p) == name) return p;
    throw Error(ErrorCode::MalformedReport, "unknown pathway label '" + name + "'");
}

}  // namespace

SeriesInfo describe(const FmtSeries& series, std::string file) {
    return {std::move(file), series.name(), series.size(), series.t_min(), series.t_max()};
}

LogisticSummary summarize(const LogisticFit& fit) {
    return {fit.params, fit.sse_linearized, fit.r2_linearized, fit.k_search_trace.size()};
}

AnalysisReport build_report(const AlignedPair& pair, const ReportConfig& config, const std::string& host_file,
                            const std::string& sub_file) {
    AnalysisReport r;
    r.host = describe(pair.host, std::filesystem::path(host_file).filename().string());
    r.sub = describe(pair.sub, std::filesystem::path(sub_file).filename().string());
    r.aligned_n = pair.rows.size();
    if (config.fit_logistic) {
        KSearchConfig search;
        search.factor_max = config.k_search_factor;
        auto fit_one = [&](const FmtSeries& s, const std::string& file) {
            try {
                return summarize(fit_logistic(s, search));
            } catch (const Error& e) {
                throw Error(e.code(), file + ": " + e.detail());
            }
        };
        r.logistic_fits = LogisticPairSummary{fit_one(pair.host, host_file), fit_one(pair.sub, sub_file)};
    }
    r.evolution = estimate_evolution(pair);
    r.pathway = classify_pathway(r.evolution, config.alpha);
    r.provenance.config = config;
    return r;
}

PipelineRun run_pipeline_detailed(const std::string& host_csv, const std::string& sub_csv, const ReportConfig& config) {
    if (!(config.alpha > 0.0 && config.alpha < 1.0))
        throw Error(ErrorCode::InvalidAlpha, "alpha must lie in (0, 1), got " + std::to_string(config.alpha));
    const FmtSeries host = load_fmt_csv(host_csv);
    const FmtSeries sub = load_fmt_csv(sub_csv);
    AlignedPair pair = align(host, sub);
    AnalysisReport r = build_report(pair, config, host_csv, sub_csv);
    r.provenance.timestamp = utc_now();
    return {std::move(pair), std::move(r)};
}

AnalysisReport run_pipeline(const std::string& host_csv, const std::string& sub_csv, const ReportConfig& config) {
    return run_pipeline_detailed(host_csv, sub_csv, config).report;
}

Json report_to_json(const AnalysisReport& r) {
    Json j;
    j["schema"] = kReportSchema;
    j["inputs"] = Json{{"host", series_json(r.host)}, {"sub", series_json(r.sub)}, {"aligned_n", r.aligned_n}};
    j["logistic_fits"] = r.logistic_fits
                             ? Json{{"host", logistic_json(r.logistic_fits->host)},
                                    {"sub", logistic_json(r.logistic_fits->sub)}}
                             : Json(nullptr);
    j["evolution"] = evolution_json(r.evolution);
    j["pathway"] = Json{{"label", pathway_name(r.pathway.label)},
                        {"alpha", real_to_json(r.pathway.alpha)},
                        {"b", real_to_json(r.pathway.b)},
                        {"p_b_vs_1", real_to_json(r.pathway.p_b_vs_1)},
                        {"test", "two-sided t, H0: B = 1"}};
    const ReportConfig& c = r.provenance.config;
    j["provenance"] = Json{{"tool_version", r.provenance.tool_version},
                           {"config", Json{{"alpha", real_to_json(c.alpha)},
                                           {"k_search_factor", real_to_json(c.k_search_factor)},
                                           {"fit_logistic", c.fit_logistic}}},
                           {"timestamp", r.provenance.timestamp}};
    return j;
}

AnalysisReport report_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("schema") || j.at("schema") != kReportSchema)
        throw Error(ErrorCode::MalformedReport, "not a " + std::string(kReportSchema) + " document");
    AnalysisReport r;
    const Json& inputs = field(j, "inputs");
    r.host = series_from_json(field(inputs, "host"));
    r.sub = series_from_json(field(inputs, "sub"));
    r.aligned_n = count_field(inputs, "aligned_n");
    const Json& fits = field(j, "logistic_fits");
    if (!fits.is_null())
        r.logistic_fits = LogisticPairSummary{logistic_from_json(field(fits, "host")), logistic_from_json(field(fits, "sub"))};
    r.evolution = evolution_from_json(field(j, "evolution"));
    const Json& pw = field(j, "pathway");
    r.pathway = PathwayClass{pathway_from_name(text_field(pw, "label")), real_field(pw, "alpha"), real_field(pw, "b"),
                             real_field(pw, "p_b_vs_1")};
    const Json& prov = field(j, "provenance");
    const Json& cfg = field(prov, "config");
    r.provenance.tool_version = text_field(prov, "tool_version");
    r.provenance.config.alpha = real_field(cfg, "alpha");
    r.provenance.config.k_search_factor = real_field(cfg, "k_search_factor");
    const Json& fl = field(cfg, "fit_logistic");
    if (!fl.is_boolean()) throw Error(ErrorCode::MalformedReport, "field 'fit_logistic' is not a boolean");
    r.provenance.config.fit_logistic = fl.get<bool>();
    r.provenance.timestamp = text_field(prov, "timestamp");
    return r;
}

std::string report_digest(const AnalysisReport& report) {
    Json j = report_to_json(report);
    j["provenance"].erase("timestamp");
    return sha256_hex(dump_json(j));
}

std::string serialize_report(const AnalysisReport& report) {
    Json j = report_to_json(report);
    j["digest"] = report_digest(report);
    return dump_json(j);
}

AnalysisReport parse_report(std::string_view text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::MalformedReport, "invalid JSON");
    return report_from_json(j);
}

std::string_view significance_stars(double p) {
    if (p < 0.01) return "***";
    if (p < 0.05) return "**";
    if (p < 0.10) return "*";
    return "";
}

std::string format_coefficient_cell(double estimate, double se, double p) {
    return fixed(estimate, 2) + std::string(significance_stars(p)) + " (" + fixed(se, 2) + ")";
}

std::string emit_table(const AnalysisReport& report) {
    const EvolutionFit& f = report.evolution;
    const std::vector<std::vector<std::string>> rows = {
        {"", "Constant alpha", "Evolutionary coefficient beta=B", "R2 adj.", "F", "n"},
        {"", "(St. Err.)", "(St. Err.)", "(St. Err. of the Estimate)", "(sign.)", ""},
        {report.sub.series, format_coefficient_cell(f.log_a, f.se_log_a, f.p_log_a),
         format_coefficient_cell(f.b, f.se_b, f.p_b), fixed(f.r2_adj, 2) + " (" + fixed(f.see, 2) + ")",
         statistic(f.f_stat) + " (" + format_p(f.p_f) + ")", std::to_string(f.n)},
    };
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

    std::string out = "Dependent variable: log " + report.sub.series + "; explanatory variable: log " +
                      report.host.series + "\n";
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += row[c];
            line.append(width[c] - row[c].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    out += "Note: *** p<0.01, ** p<0.05, * p<0.10 (two-sided t tests); natural logs.\n";
    out += "Pathway: " + std::string(pathway_name(report.pathway.label)) + " (alpha=" +
           format_real(report.pathway.alpha) + ", p for H0 B=1: " + format_p(report.pathway.p_b_vs_1) + ")\n";
    return out;
}

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 48.0;

struct Axis {
    double lo;
    double hi;
    double map(double v, double out_lo, double out_hi) const {
        const double span = hi > lo ? hi - lo : 1.0;
        return out_lo + (v - lo) / span * (out_hi - out_lo);
    }
};

Axis padded(double lo, double hi) {
    const double pad = hi > lo ? 0.05 * (hi - lo) : 1.0;
    return {lo - pad, hi + pad};
}

std::string svg_open(const std::string& title, const std::string& x_label, const std::string& y_label) {
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 400\" width=\"640\" height=\"400\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";
    s += "<line x1=\"48\" y1=\"352\" x2=\"592\" y2=\"352\" stroke=\"black\"/>\n";
    s += "<line x1=\"48\" y1=\"48\" x2=\"48\" y2=\"352\" stroke=\"black\"/>\n";
    auto escape = [](const std::string& in) {
        std::string o;
        for (char c : in) {
            if (c == '<') o += "&lt;";
            else if (c == '>') o += "&gt;";
            else if (c == '&') o += "&amp;";
            else if (c == '"') o += "&quot;";
            else o += c;
        }
        return o;
    };
    s += "<text x=\"320\" y=\"28\" text-anchor=\"middle\" font-size=\"14\">" + escape(title) + "</text>\n";
    s += "<text x=\"320\" y=\"388\" text-anchor=\"middle\" font-size=\"12\">" + escape(x_label) + "</text>\n";
    s += "<text x=\"14\" y=\"200\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 14 200)\">" +
         escape(y_label) + "</text>\n";
    return s;
}

struct Xy {
    double x;
    double y;
};

std::string svg_points(const std::vector<Xy>& pts, const Axis& ax, const Axis& ay) {
    std::string s = "<g fill=\"steelblue\">\n";
    for (const auto& p : pts) {
        s += "<circle cx=\"" + fixed(ax.map(p.x, kMargin, kWidth - kMargin), 2) + "\" cy=\"" +
             fixed(ay.map(p.y, kHeight - kMargin, kMargin), 2) + "\" r=\"3\"/>\n";
    }
    return s + "</g>\n";
}

std::string svg_polyline(const std::vector<Xy>& pts, const Axis& ax, const Axis& ay) {
    std::string s = "<polyline fill=\"none\" stroke=\"firebrick\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += " ";
        s += fixed(ax.map(pts[i].x, kMargin, kWidth - kMargin), 2) + "," +
             fixed(ay.map(pts[i].y, kHeight - kMargin, kMargin), 2);
    }
    return s + "\"/>\n";
}

constexpr int kCurveSamples = 200;

}  // namespace

PlotFiles emit_plot_data(const FmtSeries& series, const std::optional<LogisticParams>& fitted) {
    PlotFiles out;
    out.csv = fitted ? "t,observed,fitted\n" : "t,observed\n";
    std::vector<Xy> observed;
    double y_max = series.max_value();
    for (const auto& p : series.points()) {
        out.csv += format_real(p.t) + "," + format_real(p.value);
        if (fitted) out.csv += "," + format_real(logistic_value(*fitted, p.t));
        out.csv += "\n";
        observed.push_back({p.t, p.value});
    }
    std::vector<Xy> curve;
    if (fitted) {
        const double step = (series.t_max() - series.t_min()) / (kCurveSamples - 1);
        for (int i = 0; i < kCurveSamples; ++i) {
            const double t = series.t_min() + step * i;
            curve.push_back({t, logistic_value(*fitted, t)});
            y_max = std::max(y_max, curve.back().y);
        }
    }
    const Axis ax = padded(series.t_min(), series.t_max());
    const Axis ay{0.0, y_max * 1.05};
    out.svg = svg_open(series.name(), "t", series.unit().empty() ? "value" : series.unit());
    out.svg += svg_points(observed, ax, ay);
    if (fitted) out.svg += svg_polyline(curve, ax, ay);
    out.svg += "</svg>\n";
    return out;
}

PlotFiles emit_evolution_plot(const AlignedPair& pair, const EvolutionFit& fit) {
    PlotFiles out;
    out.csv = "t,host,sub,fitted_sub\n";
    std::vector<Xy> observed;
    double x_lo = std::log(pair.rows.front().host), x_hi = x_lo;
    double y_lo = std::log(pair.rows.front().sub), y_hi = y_lo;
    for (const auto& r : pair.rows) {
        out.csv += format_real(r.t) + "," + format_real(r.host) + "," + format_real(r.sub) + "," +
                   format_real(fit.a * std::pow(r.host, fit.b)) + "\n";
        const Xy p{std::log(r.host), std::log(r.sub)};
        observed.push_back(p);
        x_lo = std::min(x_lo, p.x);
        x_hi = std::max(x_hi, p.x);
        y_lo = std::min(y_lo, p.y);
        y_hi = std::max(y_hi, p.y);
    }
    const std::vector<Xy> line = {{x_lo, fit.log_a + fit.b * x_lo}, {x_hi, fit.log_a + fit.b * x_hi}};
    for (const auto& p : line) {
        y_lo = std::min(y_lo, p.y);
        y_hi = std::max(y_hi, p.y);
    }
    const Axis ax = padded(x_lo, x_hi);
    const Axis ay = padded(y_lo, y_hi);
    out.svg = svg_open("log " + pair.sub.name() + " vs log " + pair.host.name() + " (B=" + fixed(fit.b, 3) + ")",
                       "log " + pair.host.name(), "log " + pair.sub.name());
    out.svg += svg_points(observed, ax, ay);
    out.svg += svg_polyline(line, ax, ay);
    out.svg += "</svg>\n";
    return out;
}

}  // namespace techevo
