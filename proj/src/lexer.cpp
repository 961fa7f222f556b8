#include "classviz/lexer.hpp"

namespace classviz {

namespace {

bool is_ident_start(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
           c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(unsigned char c) {
    return c >= '0' && c <= '9';
}

class Scanner {
public:
    explicit Scanner(const SourceFile& src)
        : text_(src.text), result_{} {
        result_.line_has_code.assign(static_cast<size_t>(src.line_count), 0);
    }

    LexResult run() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\f') {
                ++pos_;
            } else if (c == '/' && peek(1) == '/') {
                skip_line_comment();
            } else if (c == '/' && peek(1) == '*') {
                skip_block_comment();
            } else if (c == '"') {
                if (peek(1) == '"' && peek(2) == '"') {
                    scan_text_block();
                } else {
                    scan_string();
                }
            } else if (c == '\'') {
                scan_char_literal();
            } else if (is_digit(c)) {
                scan_number();
            } else if (is_ident_start(c)) {
                scan_identifier();
            } else {
                emit(TokenKind::Punct, pos_, pos_ + 1, line_);
                ++pos_;
            }
        }
        return std::move(result_);
    }

private:
    char peek(size_t ahead) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    void mark_code(int line) {
        size_t idx = static_cast<size_t>(line) - 1;
        if (idx < result_.line_has_code.size()) {
            result_.line_has_code[idx] = 1;
        }
    }

    void emit(TokenKind kind, size_t begin, size_t end, int start_line) {
        Token tok;
        tok.kind = kind;
        tok.text = std::string_view(text_).substr(begin, end - begin);
        tok.line = start_line;
        result_.tokens.push_back(tok);
        for (int l = start_line; l <= line_; ++l) {
            mark_code(l);
        }
    }

    void skip_line_comment() {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
            ++pos_;
        }
    }

    void skip_block_comment() {
        pos_ += 2;
        while (pos_ < text_.size()) {
            if (text_[pos_] == '*' && peek(1) == '/') {
                pos_ += 2;
                return;
            }
            if (text_[pos_] == '\n') {
                ++line_;
            }
            ++pos_;
        }
        // Unterminated block comment runs to end of file.
    }

    void scan_string() {
        size_t begin = pos_;
        int start_line = line_;
        ++pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\\' && pos_ + 1 < text_.size()) {
                pos_ += 2;
                continue;
            }
            if (c == '"') {
                ++pos_;
                break;
            }
            if (c == '\n') {
                // Unterminated string literal; recover at end of line.
                break;
            }
            ++pos_;
        }
        emit(TokenKind::String, begin, pos_, start_line);
    }

    void scan_text_block() {
        size_t begin = pos_;
        int start_line = line_;
        pos_ += 3;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\\' && pos_ + 1 < text_.size()) {
                pos_ += 2;
                continue;
            }
            if (c == '"' && peek(1) == '"' && peek(2) == '"') {
                pos_ += 3;
                break;
            }
            if (c == '\n') {
                ++line_;
            }
            ++pos_;
        }
        emit(TokenKind::String, begin, pos_, start_line);
    }

    void scan_char_literal() {
        size_t begin = pos_;
        int start_line = line_;
        ++pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\\' && pos_ + 1 < text_.size()) {
                pos_ += 2;
                continue;
            }
            if (c == '\'') {
                ++pos_;
                break;
            }
            if (c == '\n') {
                break;
            }
            ++pos_;
        }
        emit(TokenKind::CharLiteral, begin, pos_, start_line);
    }

    void scan_number() {
        size_t begin = pos_;
        while (pos_ < text_.size()) {
            unsigned char c = text_[pos_];
            if (is_ident_part(c) || c == '.') {
                ++pos_;
                // Exponent signs: 1e+5, 0x1p-3. Numbers are opaque here, so
                // occasionally swallowing an operator sign is harmless.
                if ((c == 'e' || c == 'E' || c == 'p' || c == 'P') &&
                    (peek(0) == '+' || peek(0) == '-')) {
                    ++pos_;
                }
            } else {
                break;
            }
        }
        emit(TokenKind::Number, begin, pos_, line_);
    }

    void scan_identifier() {
        size_t begin = pos_;
        while (pos_ < text_.size() &&
               is_ident_part(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        emit(TokenKind::Identifier, begin, pos_, line_);
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    LexResult result_;
};

}  // namespace

LexResult lex(const SourceFile& src) {
    return Scanner(src).run();
}

}  // namespace classviz
