#pragma once
// Functional Measure of Technology (FMT) series: ingestion, validation and
// alignment of a host technology trace H(t) with a subsystem trace P(t).

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace techevo {

struct FmtPoint {
    double t = 0.0;
    double value = 0.0;  // FMT level, > 0

    friend bool operator==(const FmtPoint&, const FmtPoint&) = default;
};

// Immutable after construction. Points are strictly increasing in t and every
// value is finite and positive; the constructor throws otherwise.
class FmtSeries {
public:
    FmtSeries(std::string name, std::string unit, std::vector<FmtPoint> points);

    const std::string& name() const noexcept { return name_; }
    const std::string& unit() const noexcept { return unit_; }
    std::span<const FmtPoint> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }

    double max_value() const noexcept;
    double t_min() const noexcept { return points_.front().t; }
    double t_max() const noexcept { return points_.back().t; }

    std::vector<double> times() const;
    std::vector<double> values() const;

    friend bool operator==(const FmtSeries&, const FmtSeries&) = default;

private:
    std::string name_;
    std::string unit_;
    std::vector<FmtPoint> points_;
};

// Minimum number of points any fitting operation accepts.
inline constexpr std::size_t kMinFitPoints = 3;

// Parses `t,value` CSV text (LF or CRLF, dot decimal separator). Rows are
// sorted by t. Throws Error{MalformedRow|NonPositiveValue|DuplicateTimestamp|
// TooFewPoints}; messages carry the 1-based line number where one applies.
FmtSeries parse_fmt_csv(std::string_view raw_text, std::string series_name, std::string unit = {});

// Reads and parses a CSV file; the series is named after the file stem.
FmtSeries load_fmt_csv(const std::string& path);

// Shortest round-trip decimal text for every number, LF line endings.
std::string to_csv(const FmtSeries& series);

struct AlignedRow {
    double t = 0.0;
    double host = 0.0;
    double sub = 0.0;
};

struct AlignedPair {
    FmtSeries host;
    FmtSeries sub;
    std::vector<AlignedRow> rows;  // timestamps present in both, ascending
};

// Exact-equality intersection on t. Throws InsufficientOverlap below 3 rows.
AlignedPair align(const FmtSeries& host, const FmtSeries& sub);

}  // namespace techevo
