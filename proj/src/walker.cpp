#include "classviz/walker.hpp"

#include <algorithm>
#include <stdexcept>

#include "classviz/glob.hpp"
#include "classviz/parser.hpp"

namespace classviz {

namespace fs = std::filesystem;

Extraction extract_classes(const fs::path& root,
                           const ExtractionOptions& options) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw std::runtime_error("root is not a readable directory: " +
                                 root.generic_string());
    }

    std::vector<std::string> rel_paths;
    for (fs::recursive_directory_iterator it(root, ec), end; it != end;
         it.increment(ec)) {
        if (ec) {
            throw std::runtime_error("cannot walk " + root.generic_string() +
                                     ": " + ec.message());
        }
        if (!it->is_regular_file()) {
            continue;
        }
        std::string rel = it->path().lexically_relative(root).generic_string();
        if (!options.include.empty() &&
            !glob_match_any(options.include, rel)) {
            continue;
        }
        if (glob_match_any(options.exclude, rel)) {
            continue;
        }
        rel_paths.push_back(std::move(rel));
    }
    std::sort(rel_paths.begin(), rel_paths.end());

    Extraction result;
    for (const std::string& rel : rel_paths) {
        SourceFile src;
        try {
            src = load_source(root / rel);
        } catch (const SourceError& e) {
            result.diagnostics.push_back(
                {DiagnosticKind::FileError, rel, e.what()});
            continue;
        }
        src.path = rel;
        try {
            std::vector<ClassUnit> units = parse_source(src);
            for (ClassUnit& u : units) {
                result.classes.push_back(std::move(u));
            }
            result.sources.push_back(std::move(src));
        } catch (const ParseError& e) {
            result.diagnostics.push_back(
                {DiagnosticKind::FileError, rel,
                 std::string(e.what()) + " (line " + std::to_string(e.line()) +
                     ")"});
        }
    }

    std::sort(result.classes.begin(), result.classes.end(),
              [](const ClassUnit& a, const ClassUnit& b) {
                  if (a.qualified_name != b.qualified_name) {
                      return a.qualified_name < b.qualified_name;
                  }
                  if (a.file != b.file) {
                      return a.file < b.file;
                  }
                  return a.span.start_line < b.span.start_line;
              });
    for (size_t i = 1; i < result.classes.size(); ++i) {
        const ClassUnit& a = result.classes[i - 1];
        const ClassUnit& b = result.classes[i];
        if (a.qualified_name == b.qualified_name) {
            result.diagnostics.push_back(
                {DiagnosticKind::Warning, b.file,
                 "duplicate qualified name " + b.qualified_name +
                     " (also declared in " + a.file + ")"});
        }
    }
    return result;
}

}  // namespace classviz
