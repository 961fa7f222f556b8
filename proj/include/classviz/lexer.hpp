#ifndef CLASSVIZ_LEXER_HPP
#define CLASSVIZ_LEXER_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "classviz/source.hpp"

namespace classviz {

enum class TokenKind {
    Identifier,   // identifiers and keywords alike
    Number,
    Punct,        // one significant character
    String,       // "..." or """...""" text block
    CharLiteral,
};

struct Token {
    TokenKind kind = TokenKind::Punct;
    std::string_view text;   // view into the SourceFile text
    int line = 0;            // 1-based line of the first character
};

// Token stream plus per-line classification. line_has_code[i] is true when
// physical line i+1 carries at least one token outside comments; comment-only
// and blank lines stay false.
struct LexResult {
    std::vector<Token> tokens;
    std::vector<std::uint8_t> line_has_code;
};

// Scans normalized source text. Comments, string literals (including text
// blocks) and character literals are handled here so that downstream brace
// matching never sees their contents.
LexResult lex(const SourceFile& src);

}  // namespace classviz

#endif
