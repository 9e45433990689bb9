#pragma once

#include "json.hpp"

#include "rwb/class_spec.hpp"
#include "rwb/palette.hpp"
#include "rwb/qf_type.hpp"

namespace rwb {

// Insertion-ordered JSON keeps every report byte-stable.
using Json = nlohmann::ordered_json;

// {"signature":{"relations":[{"name":"<","arity":2}],"constants":[]},
//  "size":3,"tables":{"<":[[0,1],[0,2],[1,2]]},"constant_map":{}}
// All keys present even when empty; tuples are arrays of 0-based indices,
// sorted lexicographically.
Json structure_to_json(const Structure& s);
Structure structure_from_json(const Json& j);

Json signature_to_json(const Signature& sig);
Signature signature_from_json(const Json& j);

// {"name":...,"signature":{...},"forbidden":[...],"checker":null,"notes":""}
Json class_spec_to_json(const ClassSpec& spec);
ClassSpec class_spec_from_json(const Json& j);

// arity 2: {"arity":2,"equal":false,"relations":{"<":[[0,1]],"E":[]}}
// other arities carry the equality partition explicitly.
Json qf_type_to_json(const QfType& t);

// {"A_size":2,"k":2,"assignments":[{"image":[0,1],"color":0},...]}
Json coloring_to_json(int a_size, int k, const std::vector<std::vector<int>>& vertices,
                      const std::vector<int>& coloring);
// returns the colors in vertex order; vertices must match the report
std::vector<int> coloring_from_json(const Json& j, const std::vector<std::vector<int>>& vertices);

// {"arity":2,"default":0,"colormap":[{"tuple":[0,3],"color":1},...]}
Json palette_to_json(const Palette& p);
Palette palette_from_json(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace rwb
