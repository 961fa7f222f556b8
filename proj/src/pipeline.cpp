#include "classviz/pipeline.hpp"

#include <algorithm>
#include <fstream>

#include "classviz/glob.hpp"
#include "classviz/report.hpp"
#include "classviz/structure_xml.hpp"
#include "classviz/walker.hpp"

namespace classviz {

namespace fs = std::filesystem;

namespace {

bool write_file(const fs::path& path, const std::string& content,
                std::ostream& err) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        err << "error: cannot write " << path.generic_string() << "\n";
        return false;
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
        err << "error: failed writing " << path.generic_string() << "\n";
        return false;
    }
    return true;
}

bool selected(const ClassUnit& unit, std::span<const std::string> patterns) {
    if (patterns.empty()) {
        return true;
    }
    for (const std::string& p : patterns) {
        if (glob_match(p, unit.simple_name) ||
            glob_match(p, unit.qualified_name)) {
            return true;
        }
    }
    return false;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.emit_svg && !config.emit_json && !config.emit_csv) {
        err << "error: no output formats enabled\n";
        return 2;
    }
    if (config.columns < 1) {
        err << "error: columns must be at least 1\n";
        return 2;
    }

    Extraction extraction;
    try {
        ExtractionOptions options;
        options.include = config.include;
        options.exclude = config.exclude;
        extraction = extract_classes(config.root, options);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec && !fs::is_directory(config.out_dir)) {
        err << "error: cannot create output directory "
            << config.out_dir.generic_string() << ": " << ec.message() << "\n";
        return 1;
    }

    if (config.export_xml_path) {
        std::string doc = export_xml(extraction.classes, extraction.sources);
        if (!write_file(*config.export_xml_path, doc, err)) {
            return 1;
        }
    }

    std::vector<ClassUnit> chosen;
    for (const ClassUnit& unit : extraction.classes) {
        if (selected(unit, config.select)) {
            chosen.push_back(unit);
        }
    }
    if (chosen.empty()) {
        err << "warning: no classes matched the selection\n";
    }

    SourceMap source_map = make_source_map(extraction.sources);
    std::vector<ClassMetrics> metrics;
    try {
        metrics = compute_metrics(chosen, source_map, config.loc_mode);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    for (size_t i = 0; i < chosen.size(); ++i) {
        out << chosen[i].qualified_name << ": methods=" << metrics[i].nom
            << " attributes=" << metrics[i].noa << " loc=" << metrics[i].loc
            << "\n";
    }

    MetricsReport report =
        build_report(config.root.generic_string(), config.loc_mode, chosen,
                     metrics, extraction.diagnostics);
    if (config.emit_json &&
        !write_file(config.out_dir / "report.json",
                    write_report(report, ReportFormat::Json), err)) {
        return 1;
    }
    if (config.emit_csv &&
        !write_file(config.out_dir / "report.csv",
                    write_report(report, ReportFormat::Csv), err)) {
        return 1;
    }

    if (config.emit_svg && !chosen.empty()) {
        ChartStyle style;
        style.caption_position = config.caption_position;
        style.scale_mode = config.scale_mode;

        long long global_ceiling = 1;
        for (const ClassMetrics& m : metrics) {
            global_ceiling = std::max<long long>(
                global_ceiling, std::max({m.nom, m.noa, m.loc}));
        }
        std::vector<ChartSpec> charts;
        charts.reserve(chosen.size());
        for (size_t i = 0; i < chosen.size(); ++i) {
            long long ceiling =
                config.scale_mode == ScaleMode::Global
                    ? global_ceiling
                    : std::max<long long>(
                          1, std::max({metrics[i].nom, metrics[i].noa,
                                       metrics[i].loc}));
            ChartSpec chart = build_chart(metrics[i], style, ceiling);
            if (config.qualified_captions) {
                chart.class_name = chosen[i].qualified_name;
            }
            charts.push_back(std::move(chart));
        }
        for (size_t i = 0; i < charts.size(); ++i) {
            fs::path file =
                config.out_dir / (chosen[i].qualified_name + ".svg");
            if (!write_file(file, render_svg(charts[i], style), err)) {
                return 1;
            }
        }
        if (!write_file(config.out_dir / "grid.svg",
                        render_grid(charts, style, config.columns), err)) {
            return 1;
        }
    }

    bool file_failures = false;
    for (const Diagnostic& d : extraction.diagnostics) {
        err << "note: " << d.path << ": " << d.message << "\n";
        if (d.kind == DiagnosticKind::FileError) {
            file_failures = true;
        }
    }
    if (config.strict && file_failures) {
        return 1;
    }
    return 0;
}

}  // namespace classviz
