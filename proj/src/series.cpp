#include "techevo/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "techevo/error.hpp"

namespace techevo {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && ws(s.front())) s.remove_prefix(1);
    while (!s.empty() && ws(s.back())) s.remove_suffix(1);
    return s;
}

bool parse_real(std::string_view text, double& out) {
    text = trim(text);
    if (text.empty()) return false;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out, std::chars_format::general);
    return ec == std::errc{} && ptr == last && std::isfinite(out);
}

void append_real(std::string& out, double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
}

}  // namespace

FmtSeries::FmtSeries(std::string name, std::string unit, std::vector<FmtPoint> points)
    : name_(std::move(name)), unit_(std::move(unit)), points_(std::move(points)) {
    if (points_.empty()) throw Error(ErrorCode::TooFewPoints, "series '" + name_ + "' is empty");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& p = points_[i];
        if (!std::isfinite(p.t) || !std::isfinite(p.value))
            throw Error(ErrorCode::MalformedRow, "series '" + name_ + "' has a non-finite point");
        if (p.value <= 0.0)
            throw Error(ErrorCode::NonPositiveValue, "series '" + name_ + "' has value <= 0 at t=" + std::to_string(p.t));
        if (i > 0 && !(points_[i - 1].t < p.t)) {
            if (points_[i - 1].t == p.t)
                throw Error(ErrorCode::DuplicateTimestamp, "series '" + name_ + "' repeats t=" + std::to_string(p.t));
            throw Error(ErrorCode::MalformedRow, "series '" + name_ + "' is not sorted by t");
        }
    }
}

double FmtSeries::max_value() const noexcept {
    double m = points_.front().value;
    for (const auto& p : points_) m = std::max(m, p.value);
    return m;
}

std::vector<double> FmtSeries::times() const {
    std::vector<double> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(p.t);
    return out;
}

std::vector<double> FmtSeries::values() const {
    std::vector<double> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(p.value);
    return out;
}

FmtSeries parse_fmt_csv(std::string_view raw_text, std::string series_name, std::string unit) {
    // UTF-8 byte order mark
    if (raw_text.substr(0, 3) == "\xEF\xBB\xBF") raw_text.remove_prefix(3);

    struct Row {
        FmtPoint point;
        std::size_t line;
    };
    std::vector<Row> rows;
    bool header_seen = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= raw_text.size()) {
        std::size_t nl = raw_text.find('\n', pos);
        if (nl == std::string_view::npos) nl = raw_text.size();
        std::string_view line = trim(raw_text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (line.empty()) continue;

        const std::size_t comma = line.find(',');
        if (!header_seen) {
            if (comma == std::string_view::npos || trim(line.substr(0, comma)) != "t" ||
                trim(line.substr(comma + 1)) != "value")
                throw Error(ErrorCode::MalformedRow, "line " + std::to_string(line_no) + ": expected header 't,value'");
            header_seen = true;
            continue;
        }
        FmtPoint p;
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos ||
            !parse_real(line.substr(0, comma), p.t) || !parse_real(line.substr(comma + 1), p.value))
            throw Error(ErrorCode::MalformedRow,
                        "line " + std::to_string(line_no) + ": expected two decimal numbers, got '" + std::string(line) + "'");
        if (p.value <= 0.0)
            throw Error(ErrorCode::NonPositiveValue,
                        "line " + std::to_string(line_no) + ": value must be > 0, got '" + std::string(line) + "'");
        rows.push_back({p, line_no});
    }
    if (!header_seen) throw Error(ErrorCode::MalformedRow, "line 1: expected header 't,value'");

    std::stable_sort(rows.begin(), rows.end(), [](const Row& l, const Row& r) { return l.point.t < r.point.t; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].point.t == rows[i - 1].point.t)
            throw Error(ErrorCode::DuplicateTimestamp,
                        "line " + std::to_string(std::max(rows[i].line, rows[i - 1].line)) + ": timestamp repeated");
    }
    if (rows.size() < kMinFitPoints)
        throw Error(ErrorCode::TooFewPoints,
                    std::to_string(rows.size()) + " data rows, need at least " + std::to_string(kMinFitPoints));

    std::vector<FmtPoint> points;
    points.reserve(rows.size());
    for (const auto& r : rows) points.push_back(r.point);
    return FmtSeries(std::move(series_name), std::move(unit), std::move(points));
}

FmtSeries load_fmt_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_fmt_csv(buf.str(), std::filesystem::path(path).stem().string());
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.detail());
    }
}

std::string to_csv(const FmtSeries& series) {
    std::string out = "t,value\n";
    for (const auto& p : series.points()) {
        append_real(out, p.t);
        out.push_back(',');
        append_real(out, p.value);
        out.push_back('\n');
    }
    return out;
}

AlignedPair align(const FmtSeries& host, const FmtSeries& sub) {
    std::vector<AlignedRow> rows;
    const auto hp = host.points();
    const auto sp = sub.points();
    std::size_t i = 0, j = 0;
    while (i < hp.size() && j < sp.size()) {
        if (hp[i].t < sp[j].t) {
            ++i;
        } else if (sp[j].t < hp[i].t) {
            ++j;
        } else {
            rows.push_back({hp[i].t, hp[i].value, sp[j].value});
            ++i;
            ++j;
        }
    }
    if (rows.size() < kMinFitPoints)
        throw Error(ErrorCode::InsufficientOverlap, "'" + host.name() + "' and '" + sub.name() + "' share " +
                                                        std::to_string(rows.size()) + " timestamps, need at least " +
                                                        std::to_string(kMinFitPoints));
    return AlignedPair{host, sub, std::move(rows)};
}

}  // namespace techevo
