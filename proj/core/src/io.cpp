#include "qml/io.hpp"

#include <fstream>
#include <sstream>

namespace qml::io {

namespace {

std::string location(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j[key];
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

long long integer_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<long long>();
}

std::vector<long long> parse_vertex_vector(const Json& j, const Quiver& q, const std::string& where) {
  std::vector<long long> v(q.vertex_count(), 0);
  if (j.is_string()) return parse_vertex_vector(inline_vector(j.get<std::string>()), q, where);
  if (j.is_array()) {
    if (j.size() != q.vertex_count())
      throw ParseError(where + ": expected " + std::to_string(q.vertex_count()) + " entries, got " +
                       std::to_string(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = integer_at(j[i], where + "/" + std::to_string(i));
    return v;
  }
  if (!j.is_object()) throw ParseError(where + ": expected an object keyed by vertex, an array, or \"1,1,2\"");
  std::vector<bool> seen(q.vertex_count(), false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto idx = q.find_vertex(it.key());
    if (!idx) throw ParseError(where + "/" + it.key() + ": unknown vertex");
    v[*idx] = integer_at(it.value(), where + "/" + it.key());
    seen[*idx] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw ParseError(where + ": missing vertex '" + q.vertex_name(i) + "'");
  return v;
}

Json vertex_object(const Quiver& q, const std::vector<long long>& v) {
  Json j = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i) j[q.vertex_name(i)] = v[i];
  return j;
}

}  // namespace

Json parse_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::string msg = e.what();
    // Keep only nlohmann's description after the "[json.exception.parse_error.N] " prefix.
    if (auto k = msg.find("] "); k != std::string::npos) msg = msg.substr(k + 2);
    throw ParseError(where + ":" + location(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + msg);
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << dump(j);
}

QuiverPtr parse_quiver(const Json& j, const std::string& where) {
  const auto& vs = member(j, "vertices", where);
  if (!vs.is_array()) throw ParseError(where + "/vertices: expected an array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(string_at(vs[i], where + "/vertices/" + std::to_string(i)));
  std::vector<Quiver::ArrowSpec> arrows;
  const Json as = j.value("arrows", Json::array());
  if (!as.is_array()) throw ParseError(where + "/arrows: expected an array");
  for (std::size_t k = 0; k < as.size(); ++k) {
    const std::string w = where + "/arrows/" + std::to_string(k);
    arrows.push_back({string_at(member(as[k], "id", w), w + "/id"), string_at(member(as[k], "src", w), w + "/src"),
                      string_at(member(as[k], "dst", w), w + "/dst")});
  }
  try {
    return make_quiver(std::move(vertices), arrows);
  } catch (const CyclicQuiver&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Json to_json(const Quiver& q) {
  Json j;
  j["vertices"] = q.vertices();
  Json arrows = Json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"id", a.id}, {"src", q.vertex_name(a.src)}, {"dst", q.vertex_name(a.dst)}});
  j["arrows"] = std::move(arrows);
  return j;
}

Json inline_vector(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return parse_text(text, "<inline>");
  Json arr = Json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      arr.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("<inline>: '" + item + "' is not an integer in \"" + text + "\"");
    }
  }
  return arr;
}

DimVector parse_dim(const Json& j, const Quiver& q, const std::string& where) {
  auto v = parse_vertex_vector(j, q, where);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < 0) throw ParseError(where + ": negative dimension at vertex '" + q.vertex_name(i) + "'");
  return DimVector(std::move(v));
}

StabilityParam parse_theta(const Json& j, const Quiver& q, const std::string& where) {
  return StabilityParam(parse_vertex_vector(j, q, where));
}

Json to_json(const Quiver& q, const DimVector& d) { return vertex_object(q, d.values()); }
Json to_json(const Quiver& q, const StabilityParam& t) { return vertex_object(q, t.values()); }

FieldSpec parse_field(const Json& j, const std::string& where) {
  try {
    return FieldSpec::parse(string_at(j, where));
  } catch (const InvalidArgument& e) {
    throw ParseError(where + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

PrimeField::Element parse_element(const Json& j, const PrimeField& f, const std::string& where) {
  return f.from_integer(integer_at(j, where));
}

RationalField::Element parse_element(const Json& j, const RationalField&, const std::string& where) {
  if (j.is_number_integer()) return RationalField::Element(j.get<long long>());
  const std::string s = string_at(j, where);
  try {
    const auto slash = s.find('/');
    const boost::multiprecision::cpp_int num(s.substr(0, slash));
    const boost::multiprecision::cpp_int den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    if (den == 0) throw ParseError(where + ": zero denominator");
    return RationalField::Element(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError(where + ": '" + s + "' is not a rational n/d");
  }
}

Json element_to_json(PrimeField::Element e, const PrimeField&) { return static_cast<unsigned>(e); }

Json element_to_json(const RationalField::Element& e, const RationalField&) {
  return numerator(e).str() + "/" + denominator(e).str();
}

Json to_json(const Quiver& q, const LabeledBasis& labels) {
  Json j = Json::object();
  for (std::size_t v = 0; v < labels.size(); ++v) {
    Json l = Json::array();
    for (const auto& b : labels[v]) l.push_back(label_to_string(q, b));
    j[q.vertex_name(v)] = std::move(l);
  }
  return j;
}

Json to_json(const Quiver& q, const SubspaceTuple& t, const LabeledBasis* ambient) {
  Json j = Json::object();
  for (std::size_t v = 0; v < t.size(); ++v) {
    Json e;
    e["dim"] = t[v].rows();
    e["ambient_dim"] = t[v].cols();
    e["basis"] = to_json(t[v]);
    if (ambient) {
      Json l = Json::array();
      for (const auto& b : ambient->at(v)) l.push_back(label_to_string(q, b));
      e["ambient"] = std::move(l);
    }
    j[q.vertex_name(v)] = std::move(e);
  }
  return j;
}

Json to_json(const Quiver& q, const StabilityVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.verdict);
  j["semistable"] = v.semistable();
  j["stable"] = v.stable();
  if (v.witness) {
    Json w;
    w["dim"] = to_json(q, v.witness->dim);
    w["theta_value"] = v.witness->theta_value;
    w["subspaces"] = to_json(q, v.witness->subspaces);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const CheckReport& r) {
  Json j;
  j["name"] = r.name;
  j["passed"] = r.passed();
  j["checked"] = r.checked;
  j["failure_count"] = r.failure_total;
  Json fs = Json::array();
  for (const auto& f : r.failures) fs.push_back({{"index", f.index}, {"point", f.point}, {"detail", f.detail}});
  j["failures"] = std::move(fs);
  Json counts = Json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  j["counts"] = std::move(counts);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const CorrespondenceReport& r) {
  Json j;
  j["quiver"] = r.quiver;
  j["alpha"] = r.alpha.values();
  j["theta"] = r.theta.values();
  j["field"] = r.field;
  j["passed"] = r.passed();
  j["representations"] = r.representations;
  j["group_order"] = r.group_order;
  j["bipartite"] = r.bipartite;
  Json loci = Json::array();
  for (const auto& l : r.loci) {
    Json lj;
    lj["locus"] = l.locus;
    lj["asserted"] = l.asserted;
    lj["points"] = l.points;
    lj["rep_orbits"] = l.rep_orbits;
    lj["phi_points"] = l.phi_points;
    lj["phi_orbits"] = l.phi_orbits;
    lj["psi_points"] = l.psi_points;
    lj["psi_orbits"] = l.psi_orbits;
    Json ps = Json::array();
    for (const auto& p : l.pairings)
      ps.push_back({{"rep_orbit", p.rep_orbit},
                    {"phi_orbit", p.phi_orbit},
                    {"psi_orbit", p.psi_orbit},
                    {"representative", p.representative},
                    {"phi_point", p.phi_point},
                    {"psi_point", p.psi_point}});
    lj["pairings"] = std::move(ps);
    loci.push_back(std::move(lj));
  }
  j["loci"] = std::move(loci);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const Quiver& q, const ZelevinskyReport& r) {
  Json j;
  j["map"] = to_string(r.which);
  j["alpha"] = to_json(q, r.alpha);
  j["field"] = r.field;
  j["passed"] = r.passed();
  j["representations"] = r.representations;
  j["flags_total"] = r.flags_total;
  j["target_flags"] = r.target_flags;
  j["image_size"] = r.image_size;
  j["injective"] = r.injective;
  j["into_target"] = r.into_target;
  j["onto_target"] = r.onto_target;
  j["checks"] = Json::array({to_json(r.membership), to_json(r.agreement), to_json(r.equivariance)});
  return j;
}

}  // namespace qml::io
