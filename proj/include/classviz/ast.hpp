#ifndef CLASSVIZ_AST_HPP
#define CLASSVIZ_AST_HPP

#include <string>
#include <string_view>
#include <vector>

namespace classviz {

// 1-based inclusive physical line range within one source file.
struct Span {
    int start_line = 0;
    int end_line = 0;

    bool contains(const Span& other) const {
        return start_line <= other.start_line && other.end_line <= end_line;
    }
    int line_count() const { return end_line - start_line + 1; }

    friend bool operator==(const Span&, const Span&) = default;
};

enum class TypeKind { Class, Interface, Enum };

enum class MemberKind {
    Method,
    Constructor,
    FieldDeclarator,
    EnumConstant,
    NestedType,
    Initializer,
};

std::string_view to_string(TypeKind kind);
std::string_view to_string(MemberKind kind);
TypeKind type_kind_from_string(std::string_view text);
MemberKind member_kind_from_string(std::string_view text);

// A direct member of one class body. Field declarations with several
// comma-separated declarators produce one Member per declarator.
struct Member {
    MemberKind kind = MemberKind::Method;
    std::string name;      // empty for initializer blocks
    Span span;

    friend bool operator==(const Member&, const Member&) = default;
};

// One parsed class, interface or enum declaration. Nested and local types
// get their own ClassUnit; `members` holds direct members only.
struct ClassUnit {
    std::string file;              // path relative to the analysis root
    std::string simple_name;
    std::string qualified_name;    // package + enclosing types + simple name
    TypeKind kind = TypeKind::Class;
    Span span;                     // declaration keyword line .. closing brace line
    int nesting_depth = 0;         // 0 = top level
    std::vector<Member> members;

    friend bool operator==(const ClassUnit&, const ClassUnit&) = default;
};

enum class DiagnosticKind {
    FileError,    // a file failed to decode or parse and was skipped
    Warning,      // analysis-level notes (duplicate names etc.)
};

struct Diagnostic {
    DiagnosticKind kind = DiagnosticKind::FileError;
    std::string path;
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

}  // namespace classviz

#endif
