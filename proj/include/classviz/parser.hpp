#ifndef CLASSVIZ_PARSER_HPP
#define CLASSVIZ_PARSER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "classviz/ast.hpp"
#include "classviz/source.hpp"

namespace classviz {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line)
        : std::runtime_error(message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Extracts every named class, interface and enum declaration from one file,
// in declaration order (enclosing types before the types they contain).
// Anonymous classes never produce a ClassUnit; named types found inside
// method bodies, initializers or anonymous class bodies do.
// Throws ParseError on unbalanced braces.
std::vector<ClassUnit> parse_source(const SourceFile& src);

}  // namespace classviz

#endif
