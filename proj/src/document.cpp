#include "mesacurve/document.hpp"

#include <limits>
#include <regex>
#include <set>

namespace mesacurve {
namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  throw DocumentError(ErrorCode::SchemaError, path, msg);
}

[[noreturn]] void integrity(const std::string& path, const std::string& msg) {
  throw DocumentError(ErrorCode::IntegrityError, path, msg);
}

const json& field(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(path, std::string("missing field \"") + key + "\"");
  return *it;
}

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
}

void expect_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array");
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) schema(path + "." + key, "unknown field");
  }
}

Integer parse_integer(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    static const std::regex digits(R"(-?\d+)");
    const auto s = j.get<std::string>();
    if (std::regex_match(s, digits)) return Integer(s);
  }
  schema(path, "expected an integer");
}

long parse_long(const json& j, const std::string& path) {
  const Integer x = parse_integer(j, path);
  if (x > std::numeric_limits<long>::max() || x < std::numeric_limits<long>::min()) {
    schema(path, "integer out of range");
  }
  return x.convert_to<long>();
}

long parse_id(const json& j, const std::string& path) {
  const long id = parse_long(j, path);
  if (id < 0) schema(path, "ids must be non-negative");
  return id;
}

long parse_key(const std::string& key, const std::string& path) {
  static const std::regex digits(R"(\d+)");
  if (!std::regex_match(key, digits)) schema(path, "object key must be an integer id");
  return parse_long(json(key), path);
}

Rational parse_rational_at(const json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "rationals must be strings such as \"3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    schema(path, e.what());
  }
}

ProjectivePoint parse_point_at(const json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "coordinates must be strings (rational or \"inf\")");
  try {
    return parse_point(j.get<std::string>());
  } catch (const Error& e) {
    schema(path, e.what());
  }
}

std::vector<Integer> parse_vector(const json& j, const std::string& path,
                                  std::size_t rank, const std::string& what) {
  expect_array(j, path);
  if (j.size() != rank) {
    schema(path, what + " has " + std::to_string(j.size()) + " entries, expected " +
                     std::to_string(rank));
  }
  std::vector<Integer> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_integer(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

DualGraph parse_graph(const json& j, std::size_t rank) {
  const auto& jv = field(j, "$", "vertices");
  expect_array(jv, "$.vertices");
  std::vector<Vertex> vertices;
  std::set<VertexId> vertex_ids;
  std::set<MarkingId> marking_ids;
  for (std::size_t i = 0; i < jv.size(); ++i) {
    const std::string path = "$.vertices[" + std::to_string(i) + "]";
    expect_object(jv[i], path);
    reject_unknown(jv[i], path, {"id", "genus", "markings"});
    Vertex v;
    v.id = parse_id(field(jv[i], path, "id"), path + ".id");
    v.genus = parse_long(field(jv[i], path, "genus"), path + ".genus");
    if (v.genus < 0) schema(path + ".genus", "genus must be non-negative");
    if (!vertex_ids.insert(v.id).second) {
      integrity(path + ".id", "duplicate vertex id " + std::to_string(v.id));
    }
    if (jv[i].contains("markings")) {
      const auto& jm = jv[i]["markings"];
      expect_array(jm, path + ".markings");
      for (std::size_t k = 0; k < jm.size(); ++k) {
        const std::string mp = path + ".markings[" + std::to_string(k) + "]";
        expect_object(jm[k], mp);
        reject_unknown(jm[k], mp, {"id"});
        const MarkingId h = parse_id(field(jm[k], mp, "id"), mp + ".id");
        if (!marking_ids.insert(h).second) {
          integrity(mp + ".id", "duplicate marking id " + std::to_string(h));
        }
        v.markings.push_back(h);
      }
    }
    vertices.push_back(std::move(v));
  }
  if (vertices.empty()) schema("$.vertices", "a curve needs at least one vertex");

  const auto& je = field(j, "$", "edges");
  expect_array(je, "$.edges");
  std::vector<Edge> edges;
  std::set<EdgeId> edge_ids;
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string path = "$.edges[" + std::to_string(i) + "]";
    expect_object(je[i], path);
    reject_unknown(je[i], path, {"id", "ends", "delta"});
    Edge e;
    e.id = parse_id(field(je[i], path, "id"), path + ".id");
    if (!edge_ids.insert(e.id).second) {
      integrity(path + ".id", "duplicate edge id " + std::to_string(e.id));
    }
    const auto& ends = field(je[i], path, "ends");
    if (!ends.is_array() || ends.size() != 2) {
      schema(path + ".ends", "expected two vertex ids");
    }
    e.v = parse_id(ends[0], path + ".ends[0]");
    e.w = parse_id(ends[1], path + ".ends[1]");
    for (int k = 0; k < 2; ++k) {
      const VertexId x = k ? e.w : e.v;
      if (!vertex_ids.count(x)) {
        integrity(path + ".ends[" + std::to_string(k) + "]",
                  "edge " + std::to_string(e.id) + " names unknown vertex " +
                      std::to_string(x));
      }
    }
    try {
      e.delta = MonoidElement(parse_vector(field(je[i], path, "delta"), path + ".delta",
                                           rank, "delta of edge " + std::to_string(e.id)));
    } catch (const DocumentError&) {
      throw;
    } catch (const Error& err) {
      schema(path + ".delta", err.what());
    }
    edges.push_back(std::move(e));
  }
  try {
    return DualGraph(rank, std::move(vertices), std::move(edges));
  } catch (const DocumentError&) {
    throw;
  } catch (const Error& err) {
    integrity("$", err.what());
  }
}

PLFunction parse_pl(const json& j, const DualGraph& g) {
  PLFunction pl;
  if (!j.contains("pl")) return pl;
  const auto& jp = j["pl"];
  expect_object(jp, "$.pl");
  reject_unknown(jp, "$.pl", {"vertex_values", "marking_slopes"});
  if (jp.contains("vertex_values")) {
    const auto& vv = jp["vertex_values"];
    expect_object(vv, "$.pl.vertex_values");
    for (const auto& [key, value] : vv.items()) {
      const std::string path = "$.pl.vertex_values." + key;
      const VertexId v = parse_key(key, path);
      if (!g.has_vertex(v)) integrity(path, "value given for unknown vertex " + key);
      pl.vertex_values[v] =
          GroupElement(parse_vector(value, path, g.rank(), "value of vertex " + key));
    }
  }
  if (jp.contains("marking_slopes")) {
    const auto& ms = jp["marking_slopes"];
    expect_object(ms, "$.pl.marking_slopes");
    for (const auto& [key, value] : ms.items()) {
      const std::string path = "$.pl.marking_slopes." + key;
      const MarkingId h = parse_key(key, path);
      if (!g.has_marking(h)) integrity(path, "slope given for unknown marking " + key);
      pl.marking_slopes[h] = parse_integer(value, path);
    }
  }
  return pl;
}

ExplicitCurve parse_geometry(const json& jg, const DualGraph& g) {
  ExplicitCurve curve;
  expect_object(jg, "$.geometry");
  reject_unknown(jg, "$.geometry", {"vertices", "edges"});
  static const std::regex point_key(R"(([eha])(\d+))");
  if (jg.contains("vertices")) {
    const auto& jv = jg["vertices"];
    expect_object(jv, "$.geometry.vertices");
    for (const auto& [key, value] : jv.items()) {
      const std::string path = "$.geometry.vertices." + key;
      const VertexId v = parse_key(key, path);
      if (!g.has_vertex(v)) integrity(path, "geometry given for unknown vertex " + key);
      expect_object(value, path);
      reject_unknown(value, path, {"model", "coords"});
      const auto& model = field(value, path, "model");
      if (model != "P1") schema(path + ".model", "only the model \"P1\" is supported");
      ComponentModel cm;
      const auto& coords = field(value, path, "coords");
      expect_object(coords, path + ".coords");
      for (const auto& [pk, pv] : coords.items()) {
        const std::string cp = path + ".coords." + pk;
        std::smatch m;
        if (!std::regex_match(pk, m, point_key)) {
          schema(cp, "point keys are e<edge>, h<marking> or a<auxiliary>");
        }
        const long id = parse_long(json(m[2].str()), cp);
        const char kind = m[1].str()[0];
        if (kind == 'h') {
          if (!g.has_marking(id) || g.marking_owner(id) != v) {
            integrity(cp, "marking " + m[2].str() + " is not on vertex " + key);
          }
          cm.coords[SpecialPoint::marking(id)] = parse_point_at(pv, cp);
        } else if (kind == 'a') {
          cm.coords[SpecialPoint::auxiliary(id)] = parse_point_at(pv, cp);
        } else {
          if (!g.has_edge(id) || !g.edge(id).touches(v)) {
            integrity(cp, "edge " + m[2].str() + " does not meet vertex " + key);
          }
          const auto& e = g.edge(id);
          if (e.is_loop()) {
            if (!pv.is_array() || pv.size() != 2) {
              schema(cp, "a loop needs two coordinates");
            }
            cm.coords[SpecialPoint::edge_end(id, 0)] = parse_point_at(pv[0], cp + "[0]");
            cm.coords[SpecialPoint::edge_end(id, 1)] = parse_point_at(pv[1], cp + "[1]");
          } else {
            cm.coords[end_at(e, v)] = parse_point_at(pv, cp);
          }
        }
      }
      curve.components[v] = std::move(cm);
    }
  }
  if (jg.contains("edges")) {
    const auto& je = jg["edges"];
    expect_object(je, "$.geometry.edges");
    for (const auto& [key, value] : je.items()) {
      const std::string path = "$.geometry.edges." + key;
      const EdgeId e = parse_key(key, path);
      if (!g.has_edge(e)) integrity(path, "gluing unit given for unknown edge " + key);
      expect_object(value, path);
      reject_unknown(value, path, {"alpha"});
      const Rational a = parse_rational_at(field(value, path, "alpha"), path + ".alpha");
      if (a == 0) schema(path + ".alpha", "gluing units must be nonzero");
      curve.alpha[e] = a;
    }
  }
  try {
    validate_geometry(g, curve);
  } catch (const Error& err) {
    integrity("$.geometry", err.what());
  }
  return curve;
}

DocumentOptions parse_options(const json& j) {
  DocumentOptions o;
  if (!j.contains("options")) return o;
  const auto& jo = j["options"];
  expect_object(jo, "$.options");
  reject_unknown(jo, "$.options", {"truncation", "mode"});
  if (jo.contains("truncation")) {
    const long n = parse_long(jo["truncation"], "$.options.truncation");
    if (n < 1) schema("$.options.truncation", "truncation must be at least 1");
    o.truncation = static_cast<std::size_t>(n);
  }
  if (jo.contains("mode")) {
    if (!jo["mode"].is_string()) schema("$.options.mode", "expected a string");
    try {
      o.mode = parse_mode(jo["mode"].get<std::string>());
    } catch (const Error& e) {
      schema("$.options.mode", e.what());
    }
  }
  return o;
}

std::string point_string(const ProjectivePoint& p) { return to_string(p); }

}  // namespace

DocumentError::DocumentError(ErrorCode code, std::string path,
                             const std::string& message)
    : Error(code, "at " + path + ": " + message), path_(std::move(path)) {}

CurveDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(ErrorCode::SyntaxError, "$", e.what());
  }
  return document_from_json(j);
}

CurveDocument document_from_json(const nlohmann::json& j) {
  expect_object(j, "$");
  reject_unknown(j, "$", {"format_version", "monoid_rank", "vertices", "edges", "pl",
                          "geometry", "options"});
  CurveDocument doc;
  doc.format_version =
      static_cast<int>(parse_long(field(j, "$", "format_version"), "$.format_version"));
  if (doc.format_version != 1) {
    schema("$.format_version", "unsupported format version " +
                                   std::to_string(doc.format_version));
  }
  const long rank = parse_long(field(j, "$", "monoid_rank"), "$.monoid_rank");
  if (rank < 0) schema("$.monoid_rank", "rank must be non-negative");
  doc.graph = parse_graph(j, static_cast<std::size_t>(rank));
  doc.pl = parse_pl(j, doc.graph);
  if (j.contains("geometry")) doc.geometry = parse_geometry(j["geometry"], doc.graph);
  doc.options = parse_options(j);
  return doc;
}

nlohmann::json integer_to_json(const Integer& x) {
  if (x <= std::numeric_limits<std::int64_t>::max() &&
      x >= std::numeric_limits<std::int64_t>::min()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

nlohmann::json to_json(const MonoidElement& x) {
  json out = json::array();
  for (const auto& c : x.coords()) out.push_back(integer_to_json(c));
  return out;
}

nlohmann::json to_json(const GroupElement& x) {
  json out = json::array();
  for (const auto& c : x.coords()) out.push_back(integer_to_json(c));
  return out;
}

nlohmann::json to_json(const CurveDocument& doc) {
  const auto& g = doc.graph;
  json j;
  j["format_version"] = doc.format_version;
  j["monoid_rank"] = g.rank();
  json vertices = json::array();
  for (const auto& v : g.vertices()) {
    json jv{{"id", v.id}, {"genus", v.genus}};
    json markings = json::array();
    for (auto h : v.markings) markings.push_back(json{{"id", h}});
    jv["markings"] = markings;
    vertices.push_back(jv);
  }
  j["vertices"] = vertices;
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(json{{"id", e.id}, {"ends", {e.v, e.w}}, {"delta", to_json(e.delta)}});
  }
  j["edges"] = edges;

  json values = json::object();
  for (const auto& [v, x] : doc.pl.vertex_values) values[std::to_string(v)] = to_json(x);
  json slopes = json::object();
  for (const auto& [h, n] : doc.pl.marking_slopes) {
    slopes[std::to_string(h)] = integer_to_json(n);
  }
  j["pl"] = json{{"vertex_values", values}, {"marking_slopes", slopes}};

  if (doc.geometry) {
    json gv = json::object();
    for (const auto& [v, model] : doc.geometry->components) {
      json coords = json::object();
      for (const auto& [p, x] : model.coords) {
        switch (p.kind) {
          case SpecialPoint::Kind::Marking:
            coords["h" + std::to_string(p.id)] = point_string(x);
            break;
          case SpecialPoint::Kind::Auxiliary:
            coords["a" + std::to_string(p.id)] = point_string(x);
            break;
          case SpecialPoint::Kind::EdgeEnd: {
            const std::string key = "e" + std::to_string(p.id);
            if (g.edge(p.id).is_loop()) {
              if (!coords.contains(key)) coords[key] = json::array({"", ""});
              coords[key][p.end] = point_string(x);
            } else {
              coords[key] = point_string(x);
            }
            break;
          }
        }
      }
      gv[std::to_string(v)] = json{{"model", "P1"}, {"coords", coords}};
    }
    json ge = json::object();
    for (const auto& [e, a] : doc.geometry->alpha) {
      ge[std::to_string(e)] = json{{"alpha", to_string(a)}};
    }
    j["geometry"] = json{{"vertices", gv}, {"edges", ge}};
  }
  if (doc.options.truncation || doc.options.mode) {
    json o = json::object();
    if (doc.options.truncation) o["truncation"] = *doc.options.truncation;
    if (doc.options.mode) o["mode"] = to_string(*doc.options.mode);
    j["options"] = o;
  }
  return j;
}

std::string serialize(const CurveDocument& doc) { return to_json(doc).dump(2) + "\n"; }

}  // namespace mesacurve
