#include "classviz/metrics.hpp"

#include <stdexcept>

#include "classviz/lexer.hpp"

namespace classviz {

std::string_view to_string(LocMode mode) {
    return mode == LocMode::Physical ? "physical" : "sloc";
}

LocMode loc_mode_from_string(std::string_view text) {
    if (text == "physical") return LocMode::Physical;
    if (text == "sloc") return LocMode::Sloc;
    throw std::invalid_argument("unknown LOC mode: " + std::string(text));
}

int count_methods(const ClassUnit& unit) {
    int n = 0;
    for (const Member& m : unit.members) {
        if (m.kind == MemberKind::Method || m.kind == MemberKind::Constructor) {
            ++n;
        }
    }
    return n;
}

int count_attributes(const ClassUnit& unit) {
    int n = 0;
    for (const Member& m : unit.members) {
        if (m.kind == MemberKind::FieldDeclarator ||
            m.kind == MemberKind::EnumConstant) {
            ++n;
        }
    }
    return n;
}

namespace {

void check_span(const ClassUnit& unit, const SourceFile& src) {
    if (unit.span.start_line < 1 || unit.span.end_line < unit.span.start_line ||
        unit.span.end_line > src.line_count) {
        throw std::logic_error("class span of " + unit.qualified_name +
                               " lies outside " + src.path);
    }
}

int count_sloc(const Span& span, const std::vector<std::uint8_t>& has_code) {
    int n = 0;
    for (int line = span.start_line; line <= span.end_line; ++line) {
        if (has_code[static_cast<size_t>(line) - 1]) {
            ++n;
        }
    }
    return n;
}

}  // namespace

int count_loc(const ClassUnit& unit, const SourceFile& src, LocMode mode) {
    check_span(unit, src);
    if (mode == LocMode::Physical) {
        return unit.span.line_count();
    }
    LexResult lexed = lex(src);
    return count_sloc(unit.span, lexed.line_has_code);
}

SourceMap make_source_map(std::span<const SourceFile> sources) {
    SourceMap map;
    for (const SourceFile& src : sources) {
        map.emplace(src.path, &src);
    }
    return map;
}

std::vector<ClassMetrics> compute_metrics(std::span<const ClassUnit> classes,
                                          const SourceMap& sources,
                                          LocMode mode) {
    // Line classification is per file; lex each file once.
    std::unordered_map<std::string, std::vector<std::uint8_t>> line_cache;
    std::vector<ClassMetrics> out;
    out.reserve(classes.size());
    for (const ClassUnit& unit : classes) {
        auto found = sources.find(unit.file);
        if (found == sources.end()) {
            throw std::runtime_error("no source available for class " +
                                     unit.qualified_name + " (file " +
                                     unit.file + ")");
        }
        const SourceFile& src = *found->second;
        check_span(unit, src);
        ClassMetrics m;
        m.class_ref = unit.qualified_name;
        m.simple_name = unit.simple_name;
        m.nom = count_methods(unit);
        m.noa = count_attributes(unit);
        m.loc_mode = mode;
        if (mode == LocMode::Physical) {
            m.loc = unit.span.line_count();
        } else {
            auto cached = line_cache.find(unit.file);
            if (cached == line_cache.end()) {
                cached = line_cache
                             .emplace(unit.file,
                                      lex(src).line_has_code)
                             .first;
            }
            m.loc = count_sloc(unit.span, cached->second);
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace classviz
