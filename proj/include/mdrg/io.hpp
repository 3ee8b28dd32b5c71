#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "mdrg/certificate.hpp"
#include "mdrg/colored_graph.hpp"
#include "mdrg/scheme.hpp"
#include "mdrg/scheme_classes.hpp"

namespace mdrg {

/// Malformed or unreadable input; the message names the file position or the
/// offending field.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses JSON text; syntax errors are reported as "<origin>:<line>:<column>".
Json parse_json_text(std::string_view text, const std::string& origin);
Json read_json_file(const std::filesystem::path& path);

// File formats. Every document carries a "kind" field on output; on input it
// is optional when the structure is unambiguous.
//
// graph:    {"kind":"graph","m":2,"vertices":["a",...],"edges":[["a","b",1],...]}
// scheme:   {"kind":"scheme","vertices":[...],"classes":[{"tag":"A0","rows":["100",...]},...]}
// tensor:   {"kind":"tensor","tags":["A0",...],"p":[["A1","A1","A0","8/1"],...]}
// table:    {"kind":"distance_table","order":"deglex-sum","D":["0,0",...],"rows":{"x":{"y":"1,0"}}}

Json graph_to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const Json& doc);

Json scheme_to_json(const SchemeClasses& s);
SchemeClasses scheme_from_json(const Json& doc);

Json tensor_to_json(const IntersectionTensor& t);
IntersectionTensor tensor_from_json(const Json& doc);

Json distance_table_to_json(const DistanceTable& table, const std::vector<std::string>& vertex_names);

/// "graph", "scheme" or "tensor", from the kind field or the document shape.
std::string document_kind(const Json& doc);

using SchemeSource = std::variant<ColoredGraph, SchemeClasses, IntersectionTensor>;
SchemeSource scheme_source_from_json(const Json& doc);

} // namespace mdrg
