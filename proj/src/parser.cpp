#include "classviz/parser.hpp"

#include <array>
#include <optional>
#include <string_view>

#include "classviz/lexer.hpp"

namespace classviz {

namespace {

using sv = std::string_view;

bool is_modifier(sv text) {
    static constexpr std::array<sv, 12> kModifiers = {
        "public",    "protected",    "private", "static",
        "final",     "abstract",     "native",  "synchronized",
        "transient", "volatile",     "strictfp", "default",
    };
    for (sv m : kModifiers) {
        if (text == m) {
            return true;
        }
    }
    return false;
}

// The parser walks the token stream with explicit brace matching. It only
// understands declaration headers: type declarations, member signatures and
// field declarator lists. Statement and expression syntax is skipped over
// by balanced-bracket walking, with a scan for named local types.
class Parser {
public:
    Parser(const SourceFile& src, const LexResult& lexed)
        : file_(src.path), tokens_(lexed.tokens) {}

    std::vector<ClassUnit> run() {
        while (!eof()) {
            const Token& t = peek();
            if (t.kind == TokenKind::Identifier && t.text == "package" &&
                package_.empty() && nesting_names_.empty()) {
                next();
                package_ = read_dotted_name();
                continue;
            }
            if (type_keyword_kind()) {
                parse_type_decl();
                continue;
            }
            if (is_punct('(') || is_punct('[')) {
                walk_balanced();
                continue;
            }
            if (is_punct('{')) {
                walk_balanced();
                continue;
            }
            if (is_punct('}')) {
                throw ParseError("unmatched '}'", t.line);
            }
            next();
        }
        return std::move(units_);
    }

private:
    // --- token cursor -----------------------------------------------------

    bool eof() const { return index_ >= tokens_.size(); }

    const Token& peek(size_t ahead = 0) const {
        static const Token kEof{TokenKind::Punct, sv{}, 0};
        return index_ + ahead < tokens_.size() ? tokens_[index_ + ahead] : kEof;
    }

    const Token& prev() const {
        static const Token kNone{TokenKind::Punct, sv{}, 0};
        return index_ > 0 ? tokens_[index_ - 1] : kNone;
    }

    void next() { ++index_; }

    bool is_punct(char c, size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == TokenKind::Punct && t.text.size() == 1 && t.text[0] == c;
    }

    bool is_ident(sv text, size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == TokenKind::Identifier && t.text == text;
    }

    int line_here() const {
        return eof() ? (tokens_.empty() ? 1 : tokens_.back().line) : peek().line;
    }

    // --- small helpers ----------------------------------------------------

    std::string read_dotted_name() {
        std::string name;
        while (!eof() && peek().kind == TokenKind::Identifier) {
            name.append(peek().text);
            next();
            if (is_punct('.')) {
                name.push_back('.');
                next();
            } else {
                break;
            }
        }
        return name;
    }

    // Recognizes a type declaration keyword at the cursor. Returns the kind,
    // or nullopt. Handles the `X.class` literal and `@interface`.
    std::optional<TypeKind> type_keyword_kind() const {
        if (peek().kind != TokenKind::Identifier) {
            return std::nullopt;
        }
        sv text = peek().text;
        if (text == "class") {
            if (prev().kind == TokenKind::Punct && prev().text == sv(".")) {
                return std::nullopt;  // Foo.class literal
            }
            return TypeKind::Class;
        }
        if (text == "interface") {
            return TypeKind::Interface;
        }
        if (text == "enum") {
            return TypeKind::Enum;
        }
        return std::nullopt;
    }

    // Consumes one annotation: '@' qualified-name [ '(' ... ')' ].
    // The cursor must be at '@'. Returns false when the '@' actually starts
    // an annotation type declaration (`@interface`), leaving the cursor on
    // the `interface` keyword.
    bool consume_annotation() {
        next();  // '@'
        if (is_ident("interface")) {
            return false;
        }
        read_dotted_name();
        if (is_punct('(')) {
            walk_balanced();
        }
        return true;
    }

    // Skips a balanced '<...>' group in a type position.
    void walk_angles() {
        int open_line = line_here();
        int depth = 0;
        while (!eof()) {
            if (is_punct('<')) {
                ++depth;
                next();
            } else if (is_punct('>')) {
                --depth;
                next();
                if (depth == 0) {
                    return;
                }
            } else if (is_punct('(') || is_punct('[')) {
                walk_balanced();
            } else if (is_punct(';') || is_punct('{') || is_punct('}')) {
                // Malformed generics; stop without consuming.
                return;
            } else {
                next();
            }
        }
        throw ParseError("unterminated '<' group", open_line);
    }

    // Consumes a balanced ( ), [ ] or { } group starting at the cursor.
    // Named type declarations inside are parsed into their own ClassUnits
    // (this is how local classes and types inside anonymous bodies are
    // found). Returns the line of the closing bracket.
    int walk_balanced() {
        const Token& open = peek();
        char open_char = open.text[0];
        char close_char = open_char == '(' ? ')' : open_char == '[' ? ']' : '}';
        int open_line = open.line;
        next();
        int close_line = open_line;
        while (!eof()) {
            if (type_keyword_kind()) {
                parse_type_decl();
                continue;
            }
            if (is_punct('@') && is_ident("interface", 1)) {
                next();
                parse_type_decl();
                continue;
            }
            const Token& t = peek();
            if (t.kind == TokenKind::Punct && t.text.size() == 1) {
                char c = t.text[0];
                if (c == '(' || c == '[' || c == '{') {
                    walk_balanced();
                    continue;
                }
                if (c == close_char) {
                    close_line = t.line;
                    next();
                    return close_line;
                }
                if (c == ')' || c == ']' || c == '}') {
                    throw ParseError(
                        std::string("mismatched '") + c + "'", t.line);
                }
            }
            next();
        }
        throw ParseError(std::string("unbalanced '") + open_char + "'",
                         open_line);
    }

    // --- type declarations --------------------------------------------------

    // Cursor is on the `class` / `interface` / `enum` keyword.
    void parse_type_decl() {
        TypeKind kind = *type_keyword_kind();
        if (prev().kind == TokenKind::Punct && prev().text == sv("@")) {
            kind = TypeKind::Interface;  // annotation type
        }
        int start_line = peek().line;
        next();
        if (eof() || peek().kind != TokenKind::Identifier) {
            throw ParseError("expected type name", start_line);
        }
        std::string simple_name(peek().text);
        next();

        std::string qualified;
        if (!package_.empty()) {
            qualified = package_ + ".";
        }
        for (const std::string& enclosing : nesting_names_) {
            qualified += enclosing + ".";
        }
        qualified += simple_name;

        size_t unit_index = units_.size();
        ClassUnit unit;
        unit.file = file_;
        unit.simple_name = simple_name;
        unit.qualified_name = qualified;
        unit.kind = kind;
        unit.span.start_line = start_line;
        unit.nesting_depth = static_cast<int>(nesting_names_.size());
        units_.push_back(std::move(unit));

        if (is_punct('<')) {
            walk_angles();
        }
        // extends / implements clause: scan to the body brace.
        while (!eof() && !is_punct('{')) {
            if (is_punct('<')) {
                walk_angles();
            } else if (is_punct('(')) {
                walk_balanced();
            } else if (is_punct(';') || is_punct('}')) {
                throw ParseError("expected body of type " + simple_name,
                                 line_here());
            } else {
                next();
            }
        }
        if (eof()) {
            throw ParseError("expected body of type " + simple_name,
                             start_line);
        }

        nesting_names_.push_back(simple_name);
        std::vector<Member> members;
        int end_line = kind == TypeKind::Enum
                           ? parse_enum_body(simple_name, members)
                           : parse_class_body(simple_name, members);
        nesting_names_.pop_back();

        units_[unit_index].span.end_line = end_line;
        units_[unit_index].members = std::move(members);
    }

    // Cursor is on the body '{'. Returns the closing brace line.
    int parse_class_body(const std::string& simple_name,
                         std::vector<Member>& members) {
        int open_line = peek().line;
        next();
        while (!eof()) {
            if (is_punct('}')) {
                int close = peek().line;
                next();
                return close;
            }
            if (is_punct(';')) {
                next();
                continue;
            }
            parse_member(simple_name, members);
        }
        throw ParseError("unbalanced '{'", open_line);
    }

    // Enum bodies start with a constant list, then optionally `;` and
    // ordinary members. Constant bodies are anonymous classes: they are
    // walked (named types inside still get extracted) but contribute no
    // members to the enum itself.
    int parse_enum_body(const std::string& simple_name,
                        std::vector<Member>& members) {
        int open_line = peek().line;
        next();
        bool in_constants = true;
        while (in_constants && !eof()) {
            int const_start = line_here();
            while (is_punct('@')) {
                if (!consume_annotation()) {
                    throw ParseError("unexpected '@interface' in enum constants",
                                     line_here());
                }
            }
            if (is_punct('}')) {
                int close = peek().line;
                next();
                return close;
            }
            if (is_punct(';')) {
                next();
                break;
            }
            if (peek().kind != TokenKind::Identifier) {
                throw ParseError("expected enum constant", line_here());
            }
            Member constant;
            constant.kind = MemberKind::EnumConstant;
            constant.name = std::string(peek().text);
            constant.span.start_line = const_start;
            int last_line = peek().line;
            next();
            if (is_punct('(')) {
                last_line = walk_balanced();
            }
            if (is_punct('{')) {
                last_line = walk_balanced();
            }
            constant.span.end_line = last_line;
            members.push_back(std::move(constant));
            if (is_punct(',')) {
                next();
            } else if (is_punct(';')) {
                next();
                in_constants = false;
            }
            // A '}' is handled at the top of the loop.
        }
        while (!eof()) {
            if (is_punct('}')) {
                int close = peek().line;
                next();
                return close;
            }
            if (is_punct(';')) {
                next();
                continue;
            }
            parse_member(simple_name, members);
        }
        throw ParseError("unbalanced '{'", open_line);
    }

    // --- members ------------------------------------------------------------

    void parse_member(const std::string& simple_name,
                      std::vector<Member>& members) {
        int member_start = line_here();

        // Annotations and modifiers.
        while (!eof()) {
            if (is_punct('@')) {
                if (!consume_annotation()) {
                    parse_nested_type(members);
                    return;
                }
                continue;
            }
            if (peek().kind == TokenKind::Identifier && is_modifier(peek().text)) {
                next();
                continue;
            }
            break;
        }

        if (eof()) {
            throw ParseError("unexpected end of file in class body", member_start);
        }
        if (type_keyword_kind()) {
            parse_nested_type(members);
            return;
        }
        if (is_punct('{')) {
            Member init;
            init.kind = MemberKind::Initializer;
            init.span.start_line = member_start;
            init.span.end_line = walk_balanced();
            members.push_back(std::move(init));
            return;
        }
        if (is_punct('<')) {
            walk_angles();  // generic method type parameters
        }
        if (type_keyword_kind()) {
            parse_nested_type(members);  // e.g. rare `<T>`-less fallthrough
            return;
        }

        // Scan the declaration header until the decisive token: '(' means a
        // method or constructor, '=' ',' ';' mean a field declarator list.
        std::vector<sv> header_idents;
        sv last_ident;
        int angle_depth = 0;
        while (!eof()) {
            const Token& t = peek();
            if (t.kind == TokenKind::Identifier) {
                if (angle_depth == 0) {
                    last_ident = t.text;
                    header_idents.push_back(t.text);
                }
                next();
                continue;
            }
            if (t.kind == TokenKind::Punct && t.text.size() == 1) {
                char c = t.text[0];
                if (c == '<') {
                    ++angle_depth;
                    next();
                    continue;
                }
                if (c == '>') {
                    if (angle_depth > 0) {
                        --angle_depth;
                    }
                    next();
                    continue;
                }
                if (angle_depth == 0) {
                    if (c == '(') {
                        parse_method_tail(simple_name, members, member_start,
                                          header_idents, last_ident);
                        return;
                    }
                    if (c == '=' || c == ',' || c == ';') {
                        parse_field_tail(members, member_start, last_ident);
                        return;
                    }
                    if (c == '{') {
                        // Not a recognizable member; treat as a stray block.
                        walk_balanced();
                        return;
                    }
                    if (c == '}') {
                        throw ParseError("unexpected '}' in member declaration",
                                         t.line);
                    }
                }
                if (c == '[') {
                    walk_balanced();
                    continue;
                }
                next();
                continue;
            }
            next();
        }
        throw ParseError("unexpected end of file in member declaration",
                         member_start);
    }

    void parse_nested_type(std::vector<Member>& members) {
        size_t child_index = units_.size();
        parse_type_decl();
        Member nested;
        nested.kind = MemberKind::NestedType;
        nested.name = units_[child_index].simple_name;
        nested.span = units_[child_index].span;
        members.push_back(std::move(nested));
    }

    // Cursor is on the parameter list '('. A declaration is a constructor
    // when its name equals the enclosing class name and no return type
    // precedes it (a lone header identifier).
    void parse_method_tail(const std::string& simple_name,
                           std::vector<Member>& members, int member_start,
                           const std::vector<sv>& header_idents,
                           sv name) {
        Member m;
        m.kind = (name == simple_name && header_idents.size() == 1)
                     ? MemberKind::Constructor
                     : MemberKind::Method;
        m.name = std::string(name);
        m.span.start_line = member_start;

        int end_line = walk_balanced();  // parameters
        while (!eof()) {
            if (is_ident("throws")) {
                next();
                continue;
            }
            if (is_punct('@')) {
                if (!consume_annotation()) {
                    throw ParseError("unexpected '@interface' after parameters",
                                     line_here());
                }
                continue;
            }
            if (is_punct(',') || is_punct('.') ||
                peek().kind == TokenKind::Identifier) {
                next();  // exception list / dotted names
                continue;
            }
            if (is_punct('<')) {
                walk_angles();  // generic exception types
                continue;
            }
            if (is_punct('[')) {
                walk_balanced();  // archaic `int foo()[]` array suffix
                continue;
            }
            if (is_ident("default")) {
                next();
                continue;
            }
            if (is_punct(';')) {
                end_line = peek().line;
                next();
                break;
            }
            if (is_punct('{')) {
                end_line = walk_balanced();  // body
                break;
            }
            if (is_punct('(')) {
                walk_balanced();  // annotation element default arguments
                continue;
            }
            const Token& t = peek();
            if (t.kind == TokenKind::Punct && t.text == sv("}")) {
                throw ParseError("unexpected '}' after method header", t.line);
            }
            next();
        }
        m.span.end_line = end_line;
        members.push_back(std::move(m));
    }

    // Cursor is on the decisive '=' ',' or ';' of a field declaration; the
    // declarator name for the first declarator was captured by the caller.
    // Each comma-separated declarator yields one FieldDeclarator member
    // sharing the whole statement span.
    void parse_field_tail(std::vector<Member>& members, int member_start,
                          sv first_name) {
        std::vector<std::string> names;
        if (!first_name.empty()) {
            names.emplace_back(first_name);
        }
        int end_line = line_here();
        bool in_initializer = is_punct('=');
        sv pending_ident;
        if (in_initializer) {
            next();
        }
        while (!eof()) {
            const Token& t = peek();
            if (t.kind == TokenKind::Punct && t.text.size() == 1) {
                char c = t.text[0];
                if (c == ';') {
                    if (!in_initializer && !pending_ident.empty()) {
                        names.emplace_back(pending_ident);
                    }
                    end_line = t.line;
                    next();
                    break;
                }
                if (c == ',') {
                    if (!in_initializer && !pending_ident.empty()) {
                        names.emplace_back(pending_ident);
                    } else if (in_initializer) {
                        in_initializer = false;
                    }
                    pending_ident = sv{};
                    next();
                    continue;
                }
                if (c == '=') {
                    if (!pending_ident.empty()) {
                        names.emplace_back(pending_ident);
                        pending_ident = sv{};
                    }
                    in_initializer = true;
                    next();
                    continue;
                }
                if (c == '(' || c == '[' || c == '{') {
                    walk_balanced();
                    continue;
                }
                if (c == '}' || c == ')' || c == ']') {
                    throw ParseError("unexpected closing bracket in field "
                                     "declaration", t.line);
                }
                if (c == '<' && prev().kind == TokenKind::Punct &&
                    prev().text == sv(".")) {
                    walk_angles();  // explicit type arguments: Foo.<T>bar()
                    continue;
                }
                next();
                continue;
            }
            if (t.kind == TokenKind::Identifier) {
                if (t.text == "new") {
                    // `new Qualified<Type, Args>(...)`: skip the generic
                    // argument list so its commas don't split declarators.
                    next();
                    read_dotted_name();
                    if (is_punct('<')) {
                        walk_angles();
                    }
                    continue;
                }
                if (!in_initializer) {
                    pending_ident = t.text;
                }
                next();
                continue;
            }
            next();
        }
        if (names.empty()) {
            return;  // malformed; nothing nameable to record
        }
        for (const std::string& n : names) {
            Member field;
            field.kind = MemberKind::FieldDeclarator;
            field.name = n;
            field.span = {member_start, end_line};
            members.push_back(std::move(field));
        }
    }

    std::string file_;
    const std::vector<Token>& tokens_;
    size_t index_ = 0;
    std::string package_;
    std::vector<std::string> nesting_names_;
    std::vector<ClassUnit> units_;
};

}  // namespace

std::vector<ClassUnit> parse_source(const SourceFile& src) {
    LexResult lexed = lex(src);
    return Parser(src, lexed).run();
}

}  // namespace classviz
