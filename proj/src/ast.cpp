#include "classviz/ast.hpp"

#include <stdexcept>

namespace classviz {

std::string_view to_string(TypeKind kind) {
    switch (kind) {
        case TypeKind::Class: return "class";
        case TypeKind::Interface: return "interface";
        case TypeKind::Enum: return "enum";
    }
    return "class";
}

std::string_view to_string(MemberKind kind) {
    switch (kind) {
        case MemberKind::Method: return "method";
        case MemberKind::Constructor: return "constructor";
        case MemberKind::FieldDeclarator: return "field_declarator";
        case MemberKind::EnumConstant: return "enum_constant";
        case MemberKind::NestedType: return "nested_type";
        case MemberKind::Initializer: return "initializer";
    }
    return "method";
}

TypeKind type_kind_from_string(std::string_view text) {
    if (text == "class") return TypeKind::Class;
    if (text == "interface") return TypeKind::Interface;
    if (text == "enum") return TypeKind::Enum;
    throw std::invalid_argument("unknown type kind: " + std::string(text));
}

MemberKind member_kind_from_string(std::string_view text) {
    if (text == "method") return MemberKind::Method;
    if (text == "constructor") return MemberKind::Constructor;
    if (text == "field_declarator") return MemberKind::FieldDeclarator;
    if (text == "enum_constant") return MemberKind::EnumConstant;
    if (text == "nested_type") return MemberKind::NestedType;
    if (text == "initializer") return MemberKind::Initializer;
    throw std::invalid_argument("unknown member kind: " + std::string(text));
}

}  // namespace classviz
