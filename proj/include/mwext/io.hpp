#pragma once

// JSON schemas for fields, point spaces, codes, maps and decompositions.
//
//   field: {"p": 2, "m": 2, "modulus": [1,1,1]}   modulus optional or "auto"
//   space: {"labels": ["a","b"], "measures": ["1", "1/2"]}
//   code:  {"field": {...}, "space": {...}, "rows": [[0,1],[1,1]]}
//   map:   {"domain": <code or path>, "codomain": <code or path>, "matrix": [[...]]}
//
// Field elements are canonical indices. Map matrices are relative to the rows
// as written in the code files. Loader errors carry the offending field name.

#include <filesystem>
#include "json.hpp"
#include <string>

#include "mwext/decompose.hpp"
#include "mwext/linmap.hpp"

namespace mwext {

using json = nlohmann::json;

// Throws ParseError.
json parse_json(const std::string& text);
json load_json_file(const std::filesystem::path& path);

FieldPtr field_from_json(const json& j);
json field_to_json(const Field& f);

PointSpace space_from_json(const json& j);
json space_to_json(const PointSpace& s);

// A "normalize": true entry in the document also enables normalization.
SpacePtr code_from_json(const json& j, bool normalize = false);
json code_to_json(const FunctionSpace& a);

// Relative code paths resolve against base_dir.
LinMap map_from_json(const json& j, const std::filesystem::path& base_dir, bool normalize = false);

// {"h": {"y": "x", ...}, "omega": {"y": 2, ...}} as emitted by decompose.
Decomposition decomposition_from_json(const json& j, const LinMap& h);

std::vector<Elem> elems_from_json(const Field& f, const json& j, const std::string& field_name);
json elems_to_json(std::span<const Elem> v);

// Labels of the points in s.
json labels_json(const PointSpace& space, const PointSet& s);

}  // namespace mwext
