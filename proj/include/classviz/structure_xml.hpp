#ifndef CLASSVIZ_STRUCTURE_XML_HPP
#define CLASSVIZ_STRUCTURE_XML_HPP

#include <span>
#include <string>

#include "classviz/ast.hpp"
#include "classviz/source.hpp"

namespace classviz {

// Emits the parsed structure as one XML document:
//
//   <structure>
//     <file path="..." lines="N">
//       <class name="A" qualified="p.A" kind="class" start="1" end="9">
//         <member kind="method" name="m" lines="2-4"/>
//       </class>
//     </file>
//   </structure>
//
// Class elements appear flat under their file, in declaration order; the set
// of class elements is exactly the input list. Output is byte-deterministic:
// UTF-8, LF line endings, two-space indentation, fixed attribute order.
std::string export_xml(std::span<const ClassUnit> classes,
                       std::span<const SourceFile> sources);

// Reads a document produced by export_xml back into ClassUnits (members
// included, nesting_depth left at 0). Used to verify that the exported
// structure agrees with the in-memory extraction.
std::vector<ClassUnit> read_structure_xml(std::string_view doc);

}  // namespace classviz

#endif
