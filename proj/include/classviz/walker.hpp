#ifndef CLASSVIZ_WALKER_HPP
#define CLASSVIZ_WALKER_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "classviz/ast.hpp"
#include "classviz/source.hpp"

namespace classviz {

struct ExtractionOptions {
    // An empty include list means "every file".
    std::vector<std::string> include{"**/*.java"};
    std::vector<std::string> exclude;
};

struct Extraction {
    // Successfully loaded and parsed files, sorted by relative path.
    std::vector<SourceFile> sources;
    // All extracted classes, sorted by qualified name (byte-wise).
    std::vector<ClassUnit> classes;
    // Decode/parse failures and analysis warnings.
    std::vector<Diagnostic> diagnostics;
};

// Walks `root` recursively, parses every file matching the include globs and
// not matching the exclude globs, and returns the merged result. Paths in
// the result are '/'-separated and relative to root, so output is stable
// across machines; enumeration order never affects the result.
// Throws std::runtime_error when root is not a readable directory.
Extraction extract_classes(const std::filesystem::path& root,
                           const ExtractionOptions& options = {});

}  // namespace classviz

#endif
