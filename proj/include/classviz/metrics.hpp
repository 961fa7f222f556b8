#ifndef CLASSVIZ_METRICS_HPP
#define CLASSVIZ_METRICS_HPP

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "classviz/ast.hpp"
#include "classviz/source.hpp"

namespace classviz {

// How lines of code are counted over a class span.
//   Physical: every line in the span.
//   Sloc:     lines carrying at least one token outside comments; blank and
//             comment-only lines are skipped, code with a trailing comment
//             counts.
enum class LocMode { Physical, Sloc };

std::string_view to_string(LocMode mode);
LocMode loc_mode_from_string(std::string_view text);

struct ClassMetrics {
    std::string class_ref;     // qualified name
    std::string simple_name;
    int nom = 0;               // methods + constructors, direct members only
    int noa = 0;               // field declarators + enum constants
    int loc = 0;
    LocMode loc_mode = LocMode::Sloc;

    friend bool operator==(const ClassMetrics&, const ClassMetrics&) = default;
};

// Direct members of kind method or constructor. Members of nested types are
// never included: they belong to the nested ClassUnit.
int count_methods(const ClassUnit& unit);

// Direct field declarators plus enum constants; each declarator in a
// multi-declarator field declaration counts separately.
int count_attributes(const ClassUnit& unit);

// Lines of code over the class span. Throws std::logic_error when the span
// lies outside the file, which indicates a parser defect.
int count_loc(const ClassUnit& unit, const SourceFile& src, LocMode mode);

// Keyed by SourceFile::path, pointing into an existing collection.
using SourceMap = std::unordered_map<std::string, const SourceFile*>;

SourceMap make_source_map(std::span<const SourceFile> sources);

// One ClassMetrics per input class, in input order. Throws
// std::runtime_error when a class's file is missing from the lookup.
std::vector<ClassMetrics> compute_metrics(std::span<const ClassUnit> classes,
                                          const SourceMap& sources,
                                          LocMode mode);

}  // namespace classviz

#endif
