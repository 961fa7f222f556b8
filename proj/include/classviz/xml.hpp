#ifndef CLASSVIZ_XML_HPP
#define CLASSVIZ_XML_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace classviz::xml {

class XmlError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Escapes text for use in element content or double-quoted attributes.
std::string escape(std::string_view text);

struct Node {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attrs;
    std::vector<Node> children;
    std::string text;  // concatenated character data

    // Attribute value or nullptr.
    const std::string* attr(std::string_view key) const;
};

// Parses a small XML subset: one root element, attributes, character data,
// comments, an optional XML declaration, and the five predefined entities
// plus numeric character references. Throws XmlError when the document is
// not well-formed. Sufficient for the documents this tool emits.
Node parse(std::string_view doc);

}  // namespace classviz::xml

#endif
