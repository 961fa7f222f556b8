#include "classviz/xml.hpp"

namespace classviz::xml {

std::string escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

const std::string* Node::attr(std::string_view key) const {
    for (const auto& [k, v] : attrs) {
        if (k == key) {
            return &v;
        }
    }
    return nullptr;
}

namespace {

class Reader {
public:
    explicit Reader(std::string_view doc) : doc_(doc) {}

    Node parse_document() {
        skip_prolog();
        Node root = parse_element();
        skip_misc();
        if (pos_ != doc_.size()) {
            fail("content after document element");
        }
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw XmlError("XML error at offset " + std::to_string(pos_) + ": " +
                       what);
    }

    char peek(size_t ahead = 0) const {
        return pos_ + ahead < doc_.size() ? doc_[pos_ + ahead] : '\0';
    }

    bool starts_with(std::string_view s) const {
        return doc_.substr(pos_, s.size()) == s;
    }

    void skip_ws() {
        while (pos_ < doc_.size() &&
               (doc_[pos_] == ' ' || doc_[pos_] == '\t' || doc_[pos_] == '\n' ||
                doc_[pos_] == '\r')) {
            ++pos_;
        }
    }

    void skip_comment() {
        pos_ += 4;  // "<!--"
        size_t end = doc_.find("-->", pos_);
        if (end == std::string_view::npos) {
            fail("unterminated comment");
        }
        pos_ = end + 3;
    }

    void skip_prolog() {
        skip_ws();
        if (starts_with("<?xml")) {
            size_t end = doc_.find("?>", pos_);
            if (end == std::string_view::npos) {
                fail("unterminated XML declaration");
            }
            pos_ = end + 2;
        }
        skip_misc();
    }

    void skip_misc() {
        while (true) {
            skip_ws();
            if (starts_with("<!--")) {
                skip_comment();
            } else {
                return;
            }
        }
    }

    bool is_name_char(char c) const {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
               (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.' ||
               c == ':';
    }

    std::string read_name() {
        size_t begin = pos_;
        while (pos_ < doc_.size() && is_name_char(doc_[pos_])) {
            ++pos_;
        }
        if (pos_ == begin) {
            fail("expected a name");
        }
        return std::string(doc_.substr(begin, pos_ - begin));
    }

    std::string decode_entities(std::string_view raw) {
        std::string out;
        out.reserve(raw.size());
        for (size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != '&') {
                out.push_back(raw[i]);
                continue;
            }
            size_t semi = raw.find(';', i);
            if (semi == std::string_view::npos) {
                fail("unterminated entity reference");
            }
            std::string_view entity = raw.substr(i + 1, semi - i - 1);
            if (entity == "amp") {
                out.push_back('&');
            } else if (entity == "lt") {
                out.push_back('<');
            } else if (entity == "gt") {
                out.push_back('>');
            } else if (entity == "quot") {
                out.push_back('"');
            } else if (entity == "apos") {
                out.push_back('\'');
            } else if (!entity.empty() && entity[0] == '#') {
                unsigned long cp = 0;
                try {
                    cp = entity[1] == 'x'
                             ? std::stoul(std::string(entity.substr(2)), nullptr, 16)
                             : std::stoul(std::string(entity.substr(1)));
                } catch (const std::exception&) {
                    fail("bad character reference");
                }
                append_utf8(out, cp);
            } else {
                fail("unknown entity &" + std::string(entity) + ";");
            }
            i = semi;
        }
        return out;
    }

    static void append_utf8(std::string& out, unsigned long cp) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }

    Node parse_element() {
        if (peek() != '<') {
            fail("expected element");
        }
        ++pos_;
        Node node;
        node.name = read_name();
        while (true) {
            skip_ws();
            if (peek() == '/' && peek(1) == '>') {
                pos_ += 2;
                return node;
            }
            if (peek() == '>') {
                ++pos_;
                break;
            }
            std::string key = read_name();
            for (const auto& [k, v] : node.attrs) {
                if (k == key) {
                    fail("duplicate attribute " + key);
                }
            }
            skip_ws();
            if (peek() != '=') {
                fail("expected '=' after attribute name");
            }
            ++pos_;
            skip_ws();
            char quote = peek();
            if (quote != '"' && quote != '\'') {
                fail("expected quoted attribute value");
            }
            ++pos_;
            size_t begin = pos_;
            while (pos_ < doc_.size() && doc_[pos_] != quote) {
                if (doc_[pos_] == '<') {
                    fail("'<' in attribute value");
                }
                ++pos_;
            }
            if (pos_ >= doc_.size()) {
                fail("unterminated attribute value");
            }
            std::string value =
                decode_entities(doc_.substr(begin, pos_ - begin));
            ++pos_;
            node.attrs.emplace_back(std::move(key), std::move(value));
        }

        // Content.
        while (true) {
            size_t begin = pos_;
            while (pos_ < doc_.size() && doc_[pos_] != '<') {
                ++pos_;
            }
            if (pos_ > begin) {
                node.text += decode_entities(doc_.substr(begin, pos_ - begin));
            }
            if (pos_ >= doc_.size()) {
                fail("unterminated element <" + node.name + ">");
            }
            if (starts_with("<!--")) {
                skip_comment();
                continue;
            }
            if (peek(1) == '/') {
                pos_ += 2;
                std::string closing = read_name();
                if (closing != node.name) {
                    fail("mismatched closing tag </" + closing +
                         "> for <" + node.name + ">");
                }
                skip_ws();
                if (peek() != '>') {
                    fail("malformed closing tag");
                }
                ++pos_;
                return node;
            }
            node.children.push_back(parse_element());
        }
    }

    std::string_view doc_;
    size_t pos_ = 0;
};

}  // namespace

Node parse(std::string_view doc) {
    return Reader(doc).parse_document();
}

}  // namespace classviz::xml
