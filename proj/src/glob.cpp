#include "classviz/glob.hpp"

namespace classviz {

namespace {

// Matches a character class starting at pattern[pi] (past the '[').
// On success sets `matched` and returns the index past the closing ']';
// returns npos for an unterminated class.
size_t match_class(std::string_view pattern, size_t pi, char c, bool& matched) {
    bool negate = false;
    if (pi < pattern.size() && (pattern[pi] == '!' || pattern[pi] == '^')) {
        negate = true;
        ++pi;
    }
    bool hit = false;
    bool first = true;
    while (pi < pattern.size() && (pattern[pi] != ']' || first)) {
        first = false;
        char lo = pattern[pi];
        if (pi + 2 < pattern.size() && pattern[pi + 1] == '-' &&
            pattern[pi + 2] != ']') {
            char hi = pattern[pi + 2];
            if (c >= lo && c <= hi) {
                hit = true;
            }
            pi += 3;
        } else {
            if (c == lo) {
                hit = true;
            }
            ++pi;
        }
    }
    if (pi >= pattern.size()) {
        return std::string_view::npos;
    }
    matched = hit != negate;
    return pi + 1;
}

bool match_from(std::string_view pattern, size_t pi, std::string_view path,
                size_t si) {
    while (pi < pattern.size()) {
        char pc = pattern[pi];
        if (pc == '*') {
            bool globstar = pi + 1 < pattern.size() && pattern[pi + 1] == '*';
            if (globstar) {
                size_t rest = pi + 2;
                // "**/" may consume nothing at all.
                if (rest < pattern.size() && pattern[rest] == '/') {
                    if (match_from(pattern, rest + 1, path, si)) {
                        return true;
                    }
                }
                if (match_from(pattern, rest, path, si)) {
                    return true;
                }
                for (size_t k = si; k < path.size(); ++k) {
                    if (match_from(pattern, rest, path, k + 1)) {
                        return true;
                    }
                }
                return false;
            }
            // Single star: try every extension that does not cross '/'.
            if (match_from(pattern, pi + 1, path, si)) {
                return true;
            }
            for (size_t k = si; k < path.size() && path[k] != '/'; ++k) {
                if (match_from(pattern, pi + 1, path, k + 1)) {
                    return true;
                }
            }
            return false;
        }
        if (si >= path.size()) {
            return false;
        }
        if (pc == '?') {
            if (path[si] == '/') {
                return false;
            }
            ++pi;
            ++si;
            continue;
        }
        if (pc == '[') {
            bool matched = false;
            size_t after = match_class(pattern, pi + 1, path[si], matched);
            if (after == std::string_view::npos) {
                // Unterminated class matches a literal '['.
                if (path[si] != '[') {
                    return false;
                }
                ++pi;
                ++si;
                continue;
            }
            if (!matched || path[si] == '/') {
                return false;
            }
            pi = after;
            ++si;
            continue;
        }
        if (pc == '\\' && pi + 1 < pattern.size()) {
            ++pi;
            pc = pattern[pi];
        }
        if (pc != path[si]) {
            return false;
        }
        ++pi;
        ++si;
    }
    return si == path.size();
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view path) {
    return match_from(pattern, 0, path, 0);
}

bool glob_match_any(std::span<const std::string> patterns,
                    std::string_view path) {
    for (const std::string& p : patterns) {
        if (glob_match(p, path)) {
            return true;
        }
    }
    return false;
}

}  // namespace classviz
