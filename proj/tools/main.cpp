// classviz: extracts classes from a Java source tree, computes per-class
// size metrics (methods, attributes, lines of code) and renders each
// selected class as a three-cone chart, with JSON/CSV reports.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "classviz/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "classviz - class size metrics and cone charts for Java source "
        "trees"};

    classviz::RunConfig config;
    std::string root;
    std::string out_dir = "classviz-out";
    std::vector<std::string> formats = {"svg", "json", "csv"};
    std::string loc_mode = "sloc";
    std::string scale = "per-chart";
    std::string caption = "above";
    std::string export_xml_path;

    app.add_option("--root", root, "Source tree to analyze")
        ->required();
    app.add_option("--include", config.include,
                   "Glob patterns of files to parse (default **/*.java)");
    app.add_option("--exclude", config.exclude,
                   "Glob patterns of files to skip");
    app.add_option("--select", config.select,
                   "Class name patterns to chart (simple or qualified name; "
                   "default: all classes)")
        ->delimiter(',');
    app.add_option("--loc-mode", loc_mode,
                   "Line counting: sloc (non-blank, non-comment) or physical")
        ->check(CLI::IsMember({"sloc", "physical"}));
    app.add_option("--scale", scale,
                   "Cone height scaling: per-chart or global")
        ->check(CLI::IsMember({"per-chart", "global"}));
    app.add_option("--caption", caption, "Class name position: above or below")
        ->check(CLI::IsMember({"above", "below"}));
    app.add_option("--columns", config.columns, "Charts per grid row")
        ->check(CLI::Range(1, 1000000));
    app.add_option("--out", out_dir, "Output directory")
        ->capture_default_str();
    app.add_option("--format", formats,
                   "Outputs to produce: svg, json, csv (comma separated)")
        ->delimiter(',')
        ->check(CLI::IsMember({"svg", "json", "csv"}));
    app.add_flag("--strict", config.strict,
                 "Fail (exit 1) when any file cannot be parsed");
    app.add_option("--export-xml", export_xml_path,
                   "Also write the parsed structure as XML to this path");
    app.add_flag("--qualified-names", config.qualified_captions,
                 "Caption charts with qualified instead of simple names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    config.root = root;
    config.out_dir = out_dir;
    config.loc_mode = classviz::loc_mode_from_string(loc_mode);
    config.scale_mode = scale == "global" ? classviz::ScaleMode::Global
                                          : classviz::ScaleMode::PerChart;
    config.caption_position = caption == "below"
                                  ? classviz::CaptionPosition::Below
                                  : classviz::CaptionPosition::Above;
    config.emit_svg = false;
    config.emit_json = false;
    config.emit_csv = false;
    for (const std::string& f : formats) {
        if (f == "svg") config.emit_svg = true;
        if (f == "json") config.emit_json = true;
        if (f == "csv") config.emit_csv = true;
    }
    if (!export_xml_path.empty()) {
        config.export_xml_path = export_xml_path;
    }

    return classviz::run(config, std::cout, std::cerr);
}
