#ifndef CLASSVIZ_REPORT_HPP
#define CLASSVIZ_REPORT_HPP

#include <span>
#include <string>
#include <vector>

#include "classviz/ast.hpp"
#include "classviz/metrics.hpp"

namespace classviz {

struct ReportEntry {
    std::string qualified_name;
    std::string simple_name;
    TypeKind kind = TypeKind::Class;
    std::string file;
    int start_line = 0;
    int end_line = 0;
    int nom = 0;
    int noa = 0;
    int loc = 0;

    friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct MetricsReport {
    std::string root;
    LocMode loc_mode = LocMode::Sloc;
    std::vector<ReportEntry> entries;        // sorted by qualified name
    std::vector<Diagnostic> diagnostics;
};

enum class ReportFormat { Json, Csv };

// Zips classes with their metrics (same order and length) into a report.
MetricsReport build_report(std::string root, LocMode mode,
                           std::span<const ClassUnit> classes,
                           std::span<const ClassMetrics> metrics,
                           std::vector<Diagnostic> diagnostics);

// JSON: one object {root, loc_mode, classes: [...], diagnostics: [...]} with
// stable key order and no trailing whitespace. CSV: fixed header plus one
// row per entry, RFC-style quoting, LF line endings. Both byte-deterministic.
std::string write_report(const MetricsReport& report, ReportFormat format);

}  // namespace classviz

#endif
