#include "classviz/structure_xml.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "classviz/xml.hpp"

namespace classviz {

std::string export_xml(std::span<const ClassUnit> classes,
                       std::span<const SourceFile> sources) {
    // Group classes by file, keeping declaration order within each file.
    std::map<std::string, std::vector<const ClassUnit*>> by_file;
    for (const SourceFile& src : sources) {
        by_file.emplace(src.path, std::vector<const ClassUnit*>{});
    }
    for (const ClassUnit& unit : classes) {
        by_file[unit.file].push_back(&unit);
    }
    for (auto& [file, list] : by_file) {
        std::sort(list.begin(), list.end(),
                  [](const ClassUnit* a, const ClassUnit* b) {
                      if (a->span.start_line != b->span.start_line) {
                          return a->span.start_line < b->span.start_line;
                      }
                      return a->qualified_name < b->qualified_name;
                  });
    }
    std::map<std::string, const SourceFile*> source_by_path;
    for (const SourceFile& src : sources) {
        source_by_path.emplace(src.path, &src);
    }

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<structure>\n";
    for (const auto& [file, list] : by_file) {
        out << "  <file path=\"" << xml::escape(file) << "\"";
        auto src = source_by_path.find(file);
        if (src != source_by_path.end()) {
            out << " lines=\"" << src->second->line_count << "\"";
        }
        out << ">\n";
        for (const ClassUnit* unit : list) {
            out << "    <class name=\"" << xml::escape(unit->simple_name)
                << "\" qualified=\"" << xml::escape(unit->qualified_name)
                << "\" kind=\"" << to_string(unit->kind) << "\" start=\""
                << unit->span.start_line << "\" end=\"" << unit->span.end_line
                << "\"";
            if (unit->members.empty()) {
                out << "/>\n";
                continue;
            }
            out << ">\n";
            for (const Member& m : unit->members) {
                out << "      <member kind=\"" << to_string(m.kind)
                    << "\" name=\"" << xml::escape(m.name) << "\" lines=\""
                    << m.span.start_line << "-" << m.span.end_line << "\"/>\n";
            }
            out << "    </class>\n";
        }
        out << "  </file>\n";
    }
    out << "</structure>\n";
    return std::move(out).str();
}

namespace {

int to_int(const std::string& text) {
    return std::stoi(text);
}

Span parse_lines_attr(const std::string& text) {
    size_t dash = text.find('-');
    if (dash == std::string::npos) {
        throw xml::XmlError("bad lines attribute: " + text);
    }
    return {std::stoi(text.substr(0, dash)), std::stoi(text.substr(dash + 1))};
}

const std::string& require_attr(const xml::Node& node, std::string_view key) {
    const std::string* value = node.attr(key);
    if (value == nullptr) {
        throw xml::XmlError("missing attribute '" + std::string(key) +
                            "' on <" + node.name + ">");
    }
    return *value;
}

}  // namespace

std::vector<ClassUnit> read_structure_xml(std::string_view doc) {
    xml::Node root = xml::parse(doc);
    if (root.name != "structure") {
        throw xml::XmlError("expected <structure> root, found <" + root.name +
                            ">");
    }
    std::vector<ClassUnit> units;
    for (const xml::Node& file : root.children) {
        if (file.name != "file") {
            throw xml::XmlError("expected <file>, found <" + file.name + ">");
        }
        const std::string& path = require_attr(file, "path");
        for (const xml::Node& cls : file.children) {
            if (cls.name != "class") {
                throw xml::XmlError("expected <class>, found <" + cls.name +
                                    ">");
            }
            ClassUnit unit;
            unit.file = path;
            unit.simple_name = require_attr(cls, "name");
            unit.qualified_name = require_attr(cls, "qualified");
            unit.kind = type_kind_from_string(require_attr(cls, "kind"));
            unit.span.start_line = to_int(require_attr(cls, "start"));
            unit.span.end_line = to_int(require_attr(cls, "end"));
            for (const xml::Node& member : cls.children) {
                if (member.name != "member") {
                    throw xml::XmlError("expected <member>, found <" +
                                        member.name + ">");
                }
                Member m;
                m.kind = member_kind_from_string(require_attr(member, "kind"));
                m.name = require_attr(member, "name");
                m.span = parse_lines_attr(require_attr(member, "lines"));
                unit.members.push_back(std::move(m));
            }
            units.push_back(std::move(unit));
        }
    }
    return units;
}

}  // namespace classviz
