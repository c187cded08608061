#include "doctest.h"

#include <cmath>
#include <sstream>

#include "minq/scan_io.hpp"
#include "minq/version.hpp"

using namespace minq;

namespace {
std::vector<SalemRecord> sample_records() {
    return {
        {1, 2.0 * M_PI, 0.12345678901234567, 1.5e-17, 9.999999999999e-7},
        {2, 4.0 * M_PI, -0.0078125, -3.2e-12, 1e-8},
        {3, 6.0 * M_PI, 1.0 / 3.0, 0.0, 2.5e-9},
    };
}
}  // namespace

TEST_CASE("csv round trip is bit exact") {
    auto records = sample_records();
    ScanMeta meta{1e-6, 64, kVersion};
    std::ostringstream out;
    emit_scan(records, meta, ScanFormat::csv, out);

    std::string text = out.str();
    CHECK(text.find("# tol=") == 0);
    CHECK(text.find("n,t,d_n,f_s,bound\n") != std::string::npos);

    std::istringstream in(text);
    auto parsed = parse_scan_csv(in);
    REQUIRE(parsed.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(parsed[i].n == records[i].n);
        CHECK(parsed[i].t == records[i].t);
        CHECK(parsed[i].d_n == records[i].d_n);
        CHECK(parsed[i].f_s_val == records[i].f_s_val);
        CHECK(parsed[i].bound == records[i].bound);
    }
}

TEST_CASE("single record gives header plus one row") {
    std::ostringstream out;
    emit_scan({sample_records()[0]}, ScanMeta{1e-6, 64, kVersion}, ScanFormat::csv, out);
    std::string text = out.str();
    int lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == 3);  // comment, header, row
}

TEST_CASE("json mirrors the field names") {
    std::ostringstream out;
    emit_scan(sample_records(), ScanMeta{1e-8, 32, kVersion}, ScanFormat::json, out);
    std::string text = out.str();
    CHECK(text.find("\"d_n\"") != std::string::npos);
    CHECK(text.find("\"f_s\"") != std::string::npos);
    CHECK(text.find("\"bound\"") != std::string::npos);
    CHECK(text.find("\"max_depth\": 32") != std::string::npos);
}

TEST_CASE("empty scans are refused") {
    std::ostringstream out;
    CHECK_THROWS_AS(emit_scan({}, ScanMeta{1e-6, 64, kVersion}, ScanFormat::csv, out),
                    std::runtime_error);
    CHECK_THROWS_AS(write_scan_file({}, ScanMeta{1e-6, 64, kVersion}, ScanFormat::csv,
                                    "/tmp/minq_empty_scan.csv"),
                    std::runtime_error);
    CHECK_THROWS_AS(write_scan_file(sample_records(), ScanMeta{1e-6, 64, kVersion},
                                    ScanFormat::csv, "/nonexistent-dir/x.csv"),
                    std::runtime_error);
}
