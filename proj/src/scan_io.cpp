#include "minq/scan_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace minq {

namespace {

std::string full_precision(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void emit_scan(const std::vector<SalemRecord>& records, const ScanMeta& meta, ScanFormat format,
               std::ostream& out) {
    if (records.empty()) throw std::runtime_error("emit_scan: no records");
    if (format == ScanFormat::csv) {
        out << "# tol=" << full_precision(meta.tol) << " max_depth=" << meta.max_depth
            << " version=" << meta.version << "\n";
        out << "n,t,d_n,f_s,bound\n";
        for (const auto& r : records) {
            out << r.n << ',' << full_precision(r.t) << ',' << full_precision(r.d_n) << ','
                << full_precision(r.f_s_val) << ',' << full_precision(r.bound) << "\n";
        }
        return;
    }
    nlohmann::json j;
    j["meta"] = {{"tol", meta.tol}, {"max_depth", meta.max_depth}, {"version", meta.version}};
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        arr.push_back({{"n", r.n},
                       {"t", r.t},
                       {"d_n", r.d_n},
                       {"f_s", r.f_s_val},
                       {"bound", r.bound}});
    }
    j["records"] = std::move(arr);
    out << j.dump(2) << "\n";
}

void write_scan_file(const std::vector<SalemRecord>& records, const ScanMeta& meta,
                     ScanFormat format, const std::string& path) {
    if (records.empty())
        throw std::runtime_error("write_scan_file: refusing to write empty scan to " + path);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_scan_file: cannot open " + path);
    emit_scan(records, meta, format, out);
    out.flush();
    if (!out) throw std::runtime_error("write_scan_file: write failed for " + path);
}

std::vector<SalemRecord> parse_scan_csv(std::istream& in) {
    std::vector<SalemRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'n') continue;
        SalemRecord r;
        if (std::sscanf(line.c_str(), "%" SCNu64 ",%lg,%lg,%lg,%lg", &r.n, &r.t, &r.d_n,
                        &r.f_s_val, &r.bound) == 5)
            out.push_back(r);
    }
    return out;
}

}  // namespace minq
