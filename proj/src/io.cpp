#include "mwext/io.hpp"

#include <fstream>
#include <sstream>

#include "mwext/error.hpp"

namespace mwext {
namespace {

[[noreturn]] void schema(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, field + ": " + what, field);
}

const json& require(const json& j, const char* key, const std::string& prefix) {
  if (!j.is_object()) schema(prefix.empty() ? "<root>" : prefix, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(prefix.empty() ? key : prefix + "." + key, "missing");
  return *it;
}

unsigned as_unsigned(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema(field, "expected a non-negative integer");
  return j.get<unsigned>();
}

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

SpacePtr code_at(const json& j, const std::filesystem::path& base_dir, bool normalize, const std::string& field) {
  if (j.is_string()) {
    const std::filesystem::path p = base_dir / j.get<std::string>();
    return code_from_json(load_json_file(p), normalize);
  }
  if (!j.is_object()) schema(field, "expected a code object or a path");
  try {
    return code_from_json(j, normalize);
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), join(field, e.field()));
  }
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'", path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what(), path.string());
  }
}

FieldPtr field_from_json(const json& j) {
  const unsigned p = as_unsigned(require(j, "p", "field"), "field.p");
  unsigned m = 1;
  if (j.contains("m")) m = as_unsigned(j["m"], "field.m");
  std::optional<std::vector<unsigned>> modulus;
  if (j.contains("modulus") && !(j["modulus"].is_string() && j["modulus"] == "auto")) {
    const json& mod = j["modulus"];
    if (!mod.is_array()) schema("field.modulus", "expected a coefficient list or \"auto\"");
    std::vector<unsigned> coeffs;
    for (std::size_t i = 0; i < mod.size(); ++i)
      coeffs.push_back(as_unsigned(mod[i], "field.modulus[" + std::to_string(i) + "]"));
    modulus = std::move(coeffs);
  }
  try {
    return Field::make(p, m, modulus);
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), join("field", e.field()));
  }
}

json field_to_json(const Field& f) {
  json mod = json::array();
  for (unsigned c : f.modulus()) mod.push_back(c);
  return json{{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", mod}};
}

PointSpace space_from_json(const json& j) {
  const json& labels = require(j, "labels", "space");
  const json& measures = require(j, "measures", "space");
  if (!labels.is_array()) schema("space.labels", "expected an array of strings");
  if (!measures.is_array()) schema("space.measures", "expected an array");
  std::vector<std::string> ls;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string()) schema("space.labels[" + std::to_string(i) + "]", "expected a string");
    ls.push_back(labels[i].get<std::string>());
  }
  std::vector<Rational> ms;
  for (std::size_t i = 0; i < measures.size(); ++i) {
    const std::string field = "space.measures[" + std::to_string(i) + "]";
    const json& m = measures[i];
    if (m.is_number_integer()) {
      ms.emplace_back(m.get<long long>());
    } else if (m.is_string()) {
      try {
        ms.push_back(parse_rational(m.get<std::string>()));
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.what(), field);
      }
    } else {
      schema(field, "expected an integer or a \"p/q\" string");
    }
  }
  try {
    return PointSpace(std::move(ls), std::move(ms));
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), join("space", e.field()));
  }
}

json space_to_json(const PointSpace& s) {
  json ms = json::array();
  for (const auto& m : s.measures()) ms.push_back(to_string(m));
  return json{{"labels", s.labels()}, {"measures", ms}};
}

std::vector<Elem> elems_from_json(const Field& f, const json& j, const std::string& field_name) {
  if (!j.is_array()) schema(field_name, "expected an array of field element indices");
  std::vector<Elem> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string field = field_name + "[" + std::to_string(i) + "]";
    const unsigned v = as_unsigned(j[i], field);
    if (v >= f.order()) throw Error(ErrorCode::FieldMismatch, field + ": element index outside " + f.name(), field);
    out.emplace_back(v);
  }
  return out;
}

json elems_to_json(std::span<const Elem> v) {
  json out = json::array();
  for (Elem e : v) out.push_back(e.index());
  return out;
}

SpacePtr code_from_json(const json& j, bool normalize) {
  FieldPtr field = field_from_json(require(j, "field", ""));
  const json& rows = require(j, "rows", "");
  if (!rows.is_array() || rows.empty()) schema("rows", "expected a nonempty array of rows");
  std::vector<std::vector<Elem>> rs;
  for (std::size_t r = 0; r < rows.size(); ++r) rs.push_back(elems_from_json(*field, rows[r], "rows[" + std::to_string(r) + "]"));
  if (j.contains("normalize")) {
    if (!j["normalize"].is_boolean()) schema("normalize", "expected a boolean");
    normalize = normalize || j["normalize"].get<bool>();
  }
  PointSpace space = j.contains("space") ? space_from_json(j["space"]) : PointSpace::uniform(rs.front().size());
  return std::make_shared<const FunctionSpace>(FunctionSpace::make(std::move(field), space, rs, normalize));
}

json code_to_json(const FunctionSpace& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.dim(); ++r) rows.push_back(elems_to_json(a.generator().row(r)));
  return json{{"field", field_to_json(a.field())}, {"space", space_to_json(a.space())}, {"rows", rows}};
}

LinMap map_from_json(const json& j, const std::filesystem::path& base_dir, bool normalize) {
  SpacePtr domain = code_at(require(j, "domain", ""), base_dir, normalize, "domain");
  SpacePtr codomain = code_at(require(j, "codomain", ""), base_dir, normalize, "codomain");
  const json& mj = require(j, "matrix", "");
  if (!mj.is_array()) schema("matrix", "expected an array of rows");
  std::vector<std::vector<Elem>> rows;
  for (std::size_t r = 0; r < mj.size(); ++r)
    rows.push_back(elems_from_json(domain->field(), mj[r], "matrix[" + std::to_string(r) + "]"));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) schema("matrix", "rows differ in length");
  if (!(domain->field() == codomain->field()))
    throw Error(ErrorCode::FieldMismatch, "domain and codomain are over different fields", "codomain.field");
  return LinMap::from_input_basis(domain, codomain, Matrix::from_rows(rows, cols));
}

Decomposition decomposition_from_json(const json& j, const LinMap& h) {
  const FunctionSpace& a = h.domain();
  const FunctionSpace& b = h.codomain();
  const json& hj = require(j, "h", "");
  const json& oj = require(j, "omega", "");
  if (!hj.is_object() || !oj.is_object()) schema("h", "expected objects keyed by codomain labels");
  Decomposition d{Quotient::build(a), Quotient::build(b), {}, {}, {}, false};
  for (PointIndex y = 0; y < b.length(); ++y) {
    const std::string& label = b.space().label(y);
    if (!hj.contains(label) || !hj[label].is_string()) schema("h." + label, "missing point label");
    if (!oj.contains(label)) schema("omega." + label, "missing");
    PointIndex x = 0;
    try {
      x = a.space().index_of(hj[label].get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::UnknownPoint, e.what(), "h." + label);
    }
    const unsigned w = as_unsigned(oj[label], "omega." + label);
    if (w >= a.field().order()) throw Error(ErrorCode::FieldMismatch, "omega outside the field", "omega." + label);
    d.h.push_back(d.domain_classes.class_of(x));
    d.source.push_back(x);
    d.omega.emplace_back(w);
  }
  return d;
}

json labels_json(const PointSpace& space, const PointSet& s) {
  json out = json::array();
  for (PointIndex x : s.points()) out.push_back(space.label(x));
  return out;
}

}  // namespace mwext
