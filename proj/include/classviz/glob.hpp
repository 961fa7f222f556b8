#ifndef CLASSVIZ_GLOB_HPP
#define CLASSVIZ_GLOB_HPP

#include <span>
#include <string>
#include <string_view>

namespace classviz {

// Shell-style glob matching against '/'-separated paths.
//   *    matches any run of characters except '/'
//   ?    matches one character except '/'
//   [..] character class, '!' negates, ranges allowed
//   **   matches any run of characters including '/'; "**/" also matches
//        the empty prefix, so "**/*.java" covers files at the root.
bool glob_match(std::string_view pattern, std::string_view path);

// True when any pattern in the list matches. An empty list never matches.
bool glob_match_any(std::span<const std::string> patterns, std::string_view path);

}  // namespace classviz

#endif
