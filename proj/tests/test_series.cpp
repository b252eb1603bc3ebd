#include <doctest.h>

#include <random>
#include <string>

#include "techevo/error.hpp"
#include "techevo/series.hpp"

using namespace techevo;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected techevo::Error");
    return ErrorCode::Io;
}

FmtSeries make(std::vector<double> t, std::vector<double> v, std::string name = "s") {
    std::vector<FmtPoint> pts;
    for (std::size_t i = 0; i < t.size(); ++i) pts.push_back({t[i], v[i]});
    return FmtSeries(std::move(name), "", std::move(pts));
}

}  // namespace

TEST_CASE("parse_fmt_csv reads a minimal file") {
    const FmtSeries s = parse_fmt_csv("t,value\n0,1\n1,2\n2,4", "x");
    REQUIRE(s.size() == 3);
    CHECK(s.points()[2] == FmtPoint{2.0, 4.0});
    CHECK(s.name() == "x");
}

TEST_CASE("parse_fmt_csv accepts CRLF, blank lines and unsorted rows") {
    const FmtSeries s = parse_fmt_csv("t,value\r\n2,4\r\n\r\n0,1\r\n1,2.5\r\n", "x");
    REQUIRE(s.size() == 3);
    CHECK(s.points()[0].t == 0.0);
    CHECK(s.points()[1].value == 2.5);
    CHECK(s.points()[2].t == 2.0);
}

TEST_CASE("parse_fmt_csv rejects invalid input") {
    CHECK(code_of([] { parse_fmt_csv("t,value\n0,1\n0,2", "x"); }) == ErrorCode::DuplicateTimestamp);
    CHECK(code_of([] { parse_fmt_csv("t,value\n0,-1\n1,2\n2,3", "x"); }) == ErrorCode::NonPositiveValue);
    CHECK(code_of([] { parse_fmt_csv("t,value\n0,0\n1,2\n2,3", "x"); }) == ErrorCode::NonPositiveValue);
    CHECK(code_of([] { parse_fmt_csv("t,value\n0,1\n1,2", "x"); }) == ErrorCode::TooFewPoints);
    CHECK(code_of([] { parse_fmt_csv("time,level\n0,1\n1,2\n2,3", "x"); }) == ErrorCode::MalformedRow);
    CHECK(code_of([] { parse_fmt_csv("t,value\n0,1\n1,2,3\n2,3", "x"); }) == ErrorCode::MalformedRow);
    CHECK(code_of([] { parse_fmt_csv("t,value\n0,1\n1,abc\n2,3", "x"); }) == ErrorCode::MalformedRow);
    CHECK(code_of([] { parse_fmt_csv("t,value\n0,1\n1,1,5\n2,3", "x"); }) == ErrorCode::MalformedRow);
    CHECK(code_of([] { parse_fmt_csv("t,value\n0,1\n1,inf\n2,3", "x"); }) == ErrorCode::MalformedRow);
    CHECK(code_of([] { parse_fmt_csv("", "x"); }) == ErrorCode::MalformedRow);
}

TEST_CASE("parse errors name the offending line") {
    try {
        parse_fmt_csv("t,value\n0,1\n1,2\n2,x\n", "x");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MalformedRow);
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("decimal comma is not a decimal separator") {
    CHECK(code_of([] { parse_fmt_csv("t,value\n0,1\n1,\"2,5\"\n2,3", "x"); }) == ErrorCode::MalformedRow);
}

TEST_CASE("FmtSeries constructor enforces its invariants") {
    CHECK(code_of([] { make({0, 1, 1}, {1, 2, 3}); }) == ErrorCode::DuplicateTimestamp);
    CHECK(code_of([] { make({0, 2, 1}, {1, 2, 3}); }) == ErrorCode::MalformedRow);
    CHECK(code_of([] { make({0, 1, 2}, {1, -2, 3}); }) == ErrorCode::NonPositiveValue);
}

TEST_CASE("load_fmt_csv reports a missing path") {
    try {
        load_fmt_csv("/nonexistent/dir/host.csv");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Io);
        CHECK(std::string(e.what()).find("/nonexistent/dir/host.csv") != std::string::npos);
    }
}

TEST_CASE("parse after serialize is the identity") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> step(1e-3, 5.0);
    std::lognormal_distribution<double> level(0.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<FmtPoint> pts;
        double t = std::uniform_real_distribution<double>(-1e4, 1e4)(rng);
        const int n = 3 + static_cast<int>(rng() % 40);
        for (int i = 0; i < n; ++i) {
            pts.push_back({t, level(rng)});
            t += step(rng);
        }
        const FmtSeries s("s", "", pts);
        CHECK(parse_fmt_csv(to_csv(s), "s") == s);
    }
}

TEST_CASE("align intersects on exact timestamps") {
    const FmtSeries host = make({0, 1, 2, 3}, {1, 2, 3, 4}, "h");
    const FmtSeries sub = make({1, 2, 3, 4}, {5, 6, 7, 8}, "p");
    const AlignedPair pair = align(host, sub);
    REQUIRE(pair.rows.size() == 3);
    CHECK(pair.rows[0].t == 1.0);
    CHECK(pair.rows[0].host == 2.0);
    CHECK(pair.rows[0].sub == 5.0);
    CHECK(pair.rows[2].t == 3.0);

    const AlignedPair same = align(host, host);
    CHECK(same.rows.size() == host.size());

    CHECK(code_of([] { align(make({0, 1}, {1, 2}), make({5, 6}, {1, 2})); }) == ErrorCode::InsufficientOverlap);
}

TEST_CASE("align is symmetric in rows") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> ta, tb;
        for (int t = 0; t < 60; ++t) {
            if (rng() % 3) ta.push_back(t);
            if (rng() % 3) tb.push_back(t);
        }
        const FmtSeries a = make(ta, std::vector<double>(ta.size(), 1.0));
        const FmtSeries b = make(tb, std::vector<double>(tb.size(), 2.0));
        const AlignedPair ab = align(a, b);
        const AlignedPair ba = align(b, a);
        REQUIRE(ab.rows.size() == ba.rows.size());
        for (std::size_t i = 0; i < ab.rows.size(); ++i) CHECK(ab.rows[i].t == ba.rows[i].t);
    }
}
