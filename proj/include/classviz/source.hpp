#ifndef CLASSVIZ_SOURCE_HPP
#define CLASSVIZ_SOURCE_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace classviz {

// A loaded source file. `text` is UTF-8 with line endings normalized to LF;
// `line_count` is the number of physical lines (0 for an empty file).
struct SourceFile {
    std::string path;        // as given to the loader (or a relative display path)
    std::string text;
    int line_count = 0;
};

class SourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Number of physical lines; a trailing fragment without '\n' counts as a line.
int count_lines(std::string_view text);

// Normalizes CRLF/CR to LF, validates UTF-8 and computes the line count.
// Throws SourceError naming the path and byte offset on invalid UTF-8.
SourceFile source_from_bytes(std::string path, std::string raw);

// Reads a file from disk and runs it through source_from_bytes.
// Throws SourceError when the file cannot be read.
SourceFile load_source(const std::filesystem::path& path);

// Views of the individual lines of `text`, without their '\n' terminators.
std::vector<std::string_view> split_lines(std::string_view text);

}  // namespace classviz

#endif
