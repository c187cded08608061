#pragma once

/**
 * @file scan_io.hpp
 * @brief Reproducible serialization of Salem coefficient scans.
 *
 * CSV columns are exactly `n,t,d_n,f_s,bound` rendered with 17 significant
 * digits (doubles round-trip bit-exactly); a leading comment line records
 * tol, max_depth and the code version. JSON mirrors the field names.
 */

#include <iosfwd>
#include <string>
#include <vector>

#include "minq/fourier.hpp"

namespace minq {

struct ScanMeta {
    double tol = 0;
    int max_depth = 0;
    std::string version;
};

enum class ScanFormat { csv, json };

void emit_scan(const std::vector<SalemRecord>& records, const ScanMeta& meta, ScanFormat format,
               std::ostream& out);

/// Writes to path; throws std::runtime_error on empty records or I/O
/// failure (mentioning the path).
void write_scan_file(const std::vector<SalemRecord>& records, const ScanMeta& meta,
                     ScanFormat format, const std::string& path);

/// Parses the CSV form back (comment lines ignored).
std::vector<SalemRecord> parse_scan_csv(std::istream& in);

}  // namespace minq
