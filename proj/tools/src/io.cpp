#include "pairvis/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pairvis/errors.hpp"

namespace pairvis {

namespace {

using nlohmann::json;

std::string format_digits(double x, int digits) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidInput, "non-finite number in output");
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string point_text(Point p, int digits) {
  return "[" + format_digits(p.x, digits) + "," + format_digits(p.y, digits) + "]";
}

std::string point_text(Point p) { return point_text(p, 12); }

Point point_from(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorCode::InvalidInput, std::string(what) + " must be a pair of numbers");
  const Point p{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(p.x) || !std::isfinite(p.y))
    throw Error(ErrorCode::InvalidInput, std::string(what) + " is not finite");
  return p;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

double number_field(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw Error(ErrorCode::InvalidInput, std::string(key) + " must be a number");
  return j[key].get<double>();
}

std::string path_text(const GeodesicPath& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.points.size(); ++k) out += (k ? "," : "") + point_text(p.points[k]);
  return out + "]";
}

}  // namespace

std::string format_number(double x) { return format_digits(x, 12); }

Objective::Kind objective_kind_from_string(std::string_view name) {
  if (name == "minmax") return Objective::Kind::MinMax;
  if (name == "minsum") return Objective::Kind::MinSum;
  if (name == "wminmax") return Objective::Kind::WeightedMinMax;
  if (name == "offset") return Objective::Kind::OffsetMinMax;
  throw Error(ErrorCode::InvalidInput, "unknown objective '" + std::string(name) + "'");
}

InstanceFile parse_instance(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "instance must be a JSON object");
  if (!j.contains("polygon") || !j["polygon"].is_array())
    throw Error(ErrorCode::InvalidInput, "instance needs a \"polygon\" array");
  InstanceFile inst;
  for (const json& v : j["polygon"]) inst.polygon.push_back(point_from(v, "polygon vertex"));
  if (j.contains("s")) inst.s = point_from(j["s"], "s");
  if (j.contains("t")) inst.t = point_from(j["t"], "t");
  if (j.contains("objective")) {
    const json& o = j["objective"];
    Objective obj;
    if (o.is_string()) {
      obj.kind = objective_kind_from_string(o.get<std::string>());
    } else if (o.is_object() && o.contains("kind") && o["kind"].is_string()) {
      obj.kind = objective_kind_from_string(o["kind"].get<std::string>());
      obj.lambda = number_field(o, "lambda", obj.lambda);
      obj.alpha = number_field(o, "alpha", obj.alpha);
      obj.beta = number_field(o, "beta", obj.beta);
    } else {
      throw Error(ErrorCode::InvalidInput, "objective must be a name or an object with \"kind\"");
    }
    inst.objective = obj;
  }
  return inst;
}

std::string serialize_instance(const InstanceFile& inst) {
  std::string out = "{\"polygon\":[";
  for (std::size_t k = 0; k < inst.polygon.size(); ++k)
    out += (k ? "," : "") + point_text(inst.polygon[k], 17);
  out += "]";
  if (inst.s) out += ",\"s\":" + point_text(*inst.s, 17);
  if (inst.t) out += ",\"t\":" + point_text(*inst.t, 17);
  if (inst.objective) {
    const Objective& o = *inst.objective;
    out += ",\"objective\":{\"kind\":\"" + to_string(o.kind) + "\",\"lambda\":" +
           format_digits(o.lambda, 17) + ",\"alpha\":" + format_digits(o.alpha, 17) +
           ",\"beta\":" + format_digits(o.beta, 17) + "}";
  }
  return out + "}\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::InvalidInput, "failed writing '" + path + "'");
}

std::string result_json(const SolveResult& r, const Objective& obj) {
  std::string out = "{\"objective\":\"" + to_string(obj.kind) + "\"";
  out += ",\"value\":" + format_number(r.value);
  out += ",\"visible\":" + std::string(r.visible ? "true" : "false");
  out += ",\"ds\":" + format_number(r.ds) + ",\"dt\":" + format_number(r.dt);
  out += ",\"s_star\":" + point_text(r.s_star) + ",\"t_star\":" + point_text(r.t_star);
  out += ",\"chord\":[" + point_text(r.chord.a) + "," + point_text(r.chord.b) + "]";
  if (r.pivot) {
    out += ",\"pivot\":" + point_text(*r.pivot);
    out += ",\"pivot_index\":" + std::to_string(r.pivot_index);
    out += ",\"theta\":" + format_number(r.theta);
  }
  out += ",\"path_s\":" + path_text(r.path_s) + ",\"path_t\":" + path_text(r.path_t);
  return out + "}";
}

std::string answer_json(const QueryAnswer& a) {
  std::string out = "{\"value\":" + format_number(a.value);
  out += ",\"visible\":" + std::string(a.visible ? "true" : "false");
  out += ",\"ds\":" + format_number(a.ds) + ",\"dt\":" + format_number(a.dt);
  out += ",\"s_star\":" + point_text(a.s_star) + ",\"t_star\":" + point_text(a.t_star);
  out += ",\"chord\":[" + point_text(a.chord.a) + "," + point_text(a.chord.b) + "]";
  if (a.pivot) {
    out += ",\"pivot\":" + point_text(*a.pivot);
    out += ",\"pivot_index\":" + std::to_string(a.pivot_index);
    out += ",\"theta\":" + format_number(a.theta);
  }
  return out + "}";
}

std::string event_json(const SweepEvent& e) {
  std::string out = "{\"kind\":\"" + std::string(to_string(e.kind)) + "\"";
  out += ",\"pivot_index\":" + std::to_string(e.pivot_index);
  out += ",\"theta\":" + format_number(e.line.theta);
  out += ",\"x\":" + point_text(e.x) + ",\"x_tilde\":" + point_text(e.x_tilde);
  return out + "}";
}

std::string serialize_query_structure(const QueryStructure& q) {
  std::string out = "{\"format\":\"pairvis-query\",\"version\":" + std::to_string(kQueryFormatVersion);
  out += ",\"polygon\":[";
  const SimplePolygon& poly = q.polygon();
  for (std::size_t k = 0; k < poly.size(); ++k) out += (k ? "," : "") + point_text(poly.vertex(k), 17);
  out += "],\"triangles\":[";
  const auto& tris = q.triangulation().triangles();
  for (std::size_t k = 0; k < tris.size(); ++k) {
    const auto& v = tris[k].v;
    out += (k ? ",[" : "[") + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
           std::to_string(v[2]) + "]";
  }
  return out + "]}\n";
}

QueryStructure parse_query_structure(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || j.value("format", std::string()) != "pairvis-query")
    throw Error(ErrorCode::InvalidInput, "not a query structure file");
  if (!j.contains("version") || !j["version"].is_number_integer())
    throw Error(ErrorCode::InvalidInput, "query structure file has no version");
  const int version = j["version"].get<int>();
  if (version != kQueryFormatVersion)
    throw Error(ErrorCode::VersionMismatch, "query structure version " + std::to_string(version) +
                                                " is not supported (expected " +
                                                std::to_string(kQueryFormatVersion) + ")");
  if (!j.contains("polygon") || !j["polygon"].is_array() || !j.contains("triangles") ||
      !j["triangles"].is_array())
    throw Error(ErrorCode::InvalidInput, "query structure file lacks polygon or triangles");
  std::vector<Point> ring;
  for (const json& v : j["polygon"]) ring.push_back(point_from(v, "polygon vertex"));
  std::vector<std::array<std::uint32_t, 3>> tris;
  for (const json& t : j["triangles"]) {
    if (!t.is_array() || t.size() != 3)
      throw Error(ErrorCode::InvalidInput, "triangle must list three vertex indices");
    std::array<std::uint32_t, 3> a{};
    for (int k = 0; k < 3; ++k) {
      if (!t[k].is_number_unsigned()) throw Error(ErrorCode::InvalidInput, "bad triangle index");
      a[k] = t[k].get<std::uint32_t>();
    }
    tris.push_back(a);
  }
  SimplePolygon poly = SimplePolygon::validate_and_normalize(std::move(ring));
  if (poly.was_reversed())
    throw Error(ErrorCode::InvalidInput, "stored polygon must be counter-clockwise");
  return QueryStructure(poly, std::move(tris));
}

}  // namespace pairvis
