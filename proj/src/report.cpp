#include "classviz/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace classviz {

MetricsReport build_report(std::string root, LocMode mode,
                           std::span<const ClassUnit> classes,
                           std::span<const ClassMetrics> metrics,
                           std::vector<Diagnostic> diagnostics) {
    if (classes.size() != metrics.size()) {
        throw std::logic_error("class list and metrics list differ in length");
    }
    MetricsReport report;
    report.root = std::move(root);
    report.loc_mode = mode;
    report.diagnostics = std::move(diagnostics);
    report.entries.reserve(classes.size());
    for (size_t i = 0; i < classes.size(); ++i) {
        const ClassUnit& unit = classes[i];
        const ClassMetrics& m = metrics[i];
        ReportEntry entry;
        entry.qualified_name = unit.qualified_name;
        entry.simple_name = unit.simple_name;
        entry.kind = unit.kind;
        entry.file = unit.file;
        entry.start_line = unit.span.start_line;
        entry.end_line = unit.span.end_line;
        entry.nom = m.nom;
        entry.noa = m.noa;
        entry.loc = m.loc;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

namespace {

std::string csv_field(const std::string& value) {
    bool needs_quoting = value.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quoting) {
        return value;
    }
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

std::string write_csv(const MetricsReport& report) {
    std::ostringstream out;
    out << "qualified_name,simple_name,kind,file,start_line,end_line,"
           "nom,noa,loc\n";
    for (const ReportEntry& e : report.entries) {
        out << csv_field(e.qualified_name) << ',' << csv_field(e.simple_name)
            << ',' << to_string(e.kind) << ',' << csv_field(e.file) << ','
            << e.start_line << ',' << e.end_line << ',' << e.nom << ','
            << e.noa << ',' << e.loc << '\n';
    }
    return std::move(out).str();
}

std::string write_json(const MetricsReport& report) {
    nlohmann::ordered_json doc;
    doc["root"] = report.root;
    doc["loc_mode"] = std::string(to_string(report.loc_mode));
    doc["classes"] = nlohmann::ordered_json::array();
    for (const ReportEntry& e : report.entries) {
        nlohmann::ordered_json entry;
        entry["qualified_name"] = e.qualified_name;
        entry["simple_name"] = e.simple_name;
        entry["kind"] = std::string(to_string(e.kind));
        entry["file"] = e.file;
        entry["start_line"] = e.start_line;
        entry["end_line"] = e.end_line;
        entry["nom"] = e.nom;
        entry["noa"] = e.noa;
        entry["loc"] = e.loc;
        doc["classes"].push_back(std::move(entry));
    }
    doc["diagnostics"] = nlohmann::ordered_json::array();
    for (const Diagnostic& d : report.diagnostics) {
        nlohmann::ordered_json entry;
        entry["path"] = d.path;
        entry["message"] = d.message;
        doc["diagnostics"].push_back(std::move(entry));
    }
    return doc.dump(2);
}

}  // namespace

std::string write_report(const MetricsReport& report, ReportFormat format) {
    return format == ReportFormat::Json ? write_json(report)
                                        : write_csv(report);
}

}  // namespace classviz
