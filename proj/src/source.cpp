#include "classviz/source.hpp"

#include <fstream>
#include <sstream>

namespace classviz {

int count_lines(std::string_view text) {
    if (text.empty()) {
        return 0;
    }
    int lines = 0;
    for (char c : text) {
        if (c == '\n') {
            ++lines;
        }
    }
    if (text.back() != '\n') {
        ++lines;
    }
    return lines;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start < text.size()) {
        size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

namespace {

std::string normalize_newlines(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        char c = raw[i];
        if (c == '\r') {
            if (i + 1 < raw.size() && raw[i + 1] == '\n') {
                ++i;
            }
            out.push_back('\n');
        } else {
            out.push_back(c);
        }
    }
    return out;
}

// Returns the byte offset of the first invalid UTF-8 sequence, or npos.
size_t find_invalid_utf8(std::string_view text) {
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        unsigned char b = static_cast<unsigned char>(text[i]);
        size_t need;
        unsigned cp_min;
        if (b < 0x80) {
            i += 1;
            continue;
        } else if ((b & 0xE0) == 0xC0) {
            need = 1;
            cp_min = 0x80;
        } else if ((b & 0xF0) == 0xE0) {
            need = 2;
            cp_min = 0x800;
        } else if ((b & 0xF8) == 0xF0) {
            need = 3;
            cp_min = 0x10000;
        } else {
            return i;
        }
        unsigned cp = b & (0x3F >> need);
        for (size_t k = 1; k <= need; ++k) {
            if (i + k >= n) {
                return i;
            }
            unsigned char cont = static_cast<unsigned char>(text[i + k]);
            if ((cont & 0xC0) != 0x80) {
                return i;
            }
            cp = (cp << 6) | (cont & 0x3F);
        }
        if (cp < cp_min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            return i;
        }
        i += need + 1;
    }
    return std::string_view::npos;
}

}  // namespace

SourceFile source_from_bytes(std::string path, std::string raw) {
    // Tolerate a UTF-8 BOM; everything after it must still validate.
    std::string_view view = raw;
    if (view.size() >= 3 && view.substr(0, 3) == "\xEF\xBB\xBF") {
        view.remove_prefix(3);
    }
    size_t bad = find_invalid_utf8(view);
    if (bad != std::string_view::npos) {
        std::ostringstream msg;
        msg << path << ": invalid UTF-8 at byte offset "
            << (bad + (view.data() - raw.data()));
        throw SourceError(msg.str());
    }
    SourceFile src;
    src.path = std::move(path);
    src.text = normalize_newlines(view);
    src.line_count = count_lines(src.text);
    return src;
}

SourceFile load_source(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw SourceError(path.generic_string() + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw SourceError(path.generic_string() + ": read error");
    }
    return source_from_bytes(path.generic_string(), std::move(buf).str());
}

}  // namespace classviz
