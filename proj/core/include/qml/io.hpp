#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qml/correspondence.hpp"
#include "qml/stability.hpp"
#include "qml/zelevinsky.hpp"

namespace qml::io {

/// Insertion-ordered, so emitted reports keep a fixed key layout.
using Json = nlohmann::ordered_json;

/// Parses text; syntax errors become ParseError carrying "<where>:<line>:<col>".
Json parse_text(const std::string& text, const std::string& where);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);
/// Two-space indented with a trailing newline.
std::string dump(const Json& j);

/// {"vertices": [...], "arrows": [{"id", "src", "dst"}, ...]}
QuiverPtr parse_quiver(const Json& j, const std::string& where);
Json to_json(const Quiver& q);

/// Accepts {"v": n, ...} (every vertex named), an array in vertex order, or
/// the inline form "1,1,2".
DimVector parse_dim(const Json& j, const Quiver& q, const std::string& where);
StabilityParam parse_theta(const Json& j, const Quiver& q, const std::string& where);
/// A comma list, or JSON text when it starts with '{' or '['.
Json inline_vector(const std::string& text);

Json to_json(const Quiver& q, const DimVector& d);
Json to_json(const Quiver& q, const StabilityParam& t);

FieldSpec parse_field(const Json& j, const std::string& where);

/// Residues for F_p; rationals as "n/d" strings (plain integers are accepted on input).
PrimeField::Element parse_element(const Json& j, const PrimeField& f, const std::string& where);
RationalField::Element parse_element(const Json& j, const RationalField& f, const std::string& where);
Json element_to_json(PrimeField::Element e, const PrimeField& f);
Json element_to_json(const RationalField::Element& e, const RationalField& f);

template <class F>
Matrix<F> parse_matrix(const Json& j, const F& field, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  Matrix<F> m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    const std::string rw = where + "/" + std::to_string(r);
    if (!row.is_array() || row.size() != cols) throw ParseError(rw + ": expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_element(row[c], field, rw + "/" + std::to_string(c));
  }
  return m;
}

template <class F>
Json to_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_to_json(m(r, c), m.field()));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// {"dim": {...}, "field": "F2", "maps": {"a1": [[...]], ...}}. Missing maps
/// are allowed only when they are empty (a zero dimension at either end).
template <class F>
Representation<F> parse_rep(const Json& j, QuiverPtr q, const F& field, const std::string& where) {
  if (!j.is_object() || !j.contains("dim")) throw ParseError(where + ": representation needs a \"dim\" member");
  const DimVector dim = parse_dim(j["dim"], *q, where + "/dim");
  const Json maps = j.value("maps", Json::object());
  if (!maps.is_object()) throw ParseError(where + "/maps: expected an object keyed by arrow id");
  for (auto it = maps.begin(); it != maps.end(); ++it)
    if (!q->find_arrow(it.key())) throw ParseError(where + "/maps/" + it.key() + ": unknown arrow");
  std::vector<Matrix<F>> ms;
  for (const auto& a : q->arrows()) {
    const auto rows = static_cast<std::size_t>(dim[a.dst]), cols = static_cast<std::size_t>(dim[a.src]);
    if (!maps.contains(a.id)) {
      if (rows != 0 && cols != 0) throw ParseError(where + "/maps: missing arrow '" + a.id + "'");
      ms.emplace_back(field, rows, cols);
      continue;
    }
    ms.push_back(parse_matrix(maps[a.id], field, rows, cols, where + "/maps/" + a.id));
  }
  return Representation<F>(q, field, dim, std::move(ms));
}

template <class F>
Json to_json(const Representation<F>& m) {
  Json j;
  j["dim"] = to_json(m.quiver(), m.dim());
  j["field"] = m.field().name();
  Json maps = Json::object();
  for (std::size_t a = 0; a < m.quiver().arrow_count(); ++a) maps[m.quiver().arrow(a).id] = to_json(m.map(a));
  j["maps"] = std::move(maps);
  return j;
}

Json to_json(const Quiver& q, const LabeledBasis& labels);

template <class F>
Json to_json(const LabeledRep<F>& r) {
  Json j = to_json(r.rep);
  j["basis"] = to_json(r.rep.quiver(), r.labels);
  return j;
}

template <class F>
Json to_json(const Quiver& q, const Homomorphism<F>& f) {
  Json j = Json::object();
  for (std::size_t v = 0; v < f.components.size(); ++v) j[q.vertex_name(v)] = to_json(f[v]);
  return j;
}

/// Per-vertex RREF bases, with the ambient coordinate labels when given.
Json to_json(const Quiver& q, const SubspaceTuple& t, const LabeledBasis* ambient = nullptr);

Json to_json(const Quiver& q, const StabilityVerdict& v);
Json to_json(const CheckReport& r);
Json to_json(const CorrespondenceReport& r);
Json to_json(const Quiver& q, const ZelevinskyReport& r);

}  // namespace qml::io
