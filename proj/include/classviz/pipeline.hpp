#ifndef CLASSVIZ_PIPELINE_HPP
#define CLASSVIZ_PIPELINE_HPP

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "classviz/chart.hpp"
#include "classviz/metrics.hpp"

namespace classviz {

struct RunConfig {
    std::filesystem::path root;
    std::vector<std::string> include{"**/*.java"};
    std::vector<std::string> exclude;
    // Glob patterns matched against simple or qualified class names;
    // empty selects every extracted class.
    std::vector<std::string> select;
    LocMode loc_mode = LocMode::Sloc;
    ScaleMode scale_mode = ScaleMode::PerChart;
    CaptionPosition caption_position = CaptionPosition::Above;
    bool qualified_captions = false;
    int columns = 3;
    std::filesystem::path out_dir = "classviz-out";
    bool emit_svg = true;
    bool emit_json = true;
    bool emit_csv = true;
    bool strict = false;
    std::optional<std::filesystem::path> export_xml_path;
};

// Runs extraction -> metrics -> selection -> charts/reports and writes the
// outputs under config.out_dir: one <qualified_name>.svg per selected class
// plus grid.svg, and report.json / report.csv, gated by the format switches.
// Prints one summary line per selected class to `out`, warnings and
// diagnostics to `err`.
//
// Exit status: 0 on success (an empty selection is a success with a
// warning), 1 when output cannot be written or when strict mode saw any
// file-level failure, 2 on configuration errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace classviz

#endif
