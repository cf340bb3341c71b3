#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <json.hpp>

#include "geom/cli_io.hpp"

namespace geom {

namespace {

using Json = nlohmann::ordered_json;

bool same_pose(const std::optional<Similarity>& x, const std::optional<Similarity>& y) {
  if (x.has_value() != y.has_value()) return false;
  if (!x) return true;
  return x->rotation == y->rotation && x->reflect == y->reflect && x->scale == y->scale &&
         x->translation == y->translation;
}

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ScenarioError(path + "/" + key, "missing field");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ScenarioError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ScenarioError(path, "expected a finite number");
  return v;
}

double number_field(const Json& obj, const std::string& key, const std::string& path) {
  return number(field(obj, key, path), path + "/" + key);
}

double positive_field(const Json& obj, const std::string& key, const std::string& path) {
  const double v = number_field(obj, key, path);
  if (v <= 0.0) throw ScenarioError(path + "/" + key, "must be positive");
  return v;
}

Point point(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw ScenarioError(path, "expected a point [x, y]");
  return {number(j[0], path + "/0"), number(j[1], path + "/1")};
}

Point point_field(const Json& obj, const std::string& key, const std::string& path) {
  return point(field(obj, key, path), path + "/" + key);
}

int integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ScenarioError(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v <= 0 || v > 1'000'000) throw ScenarioError(path, "out of range");
  return static_cast<int>(v);
}

void only_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok) throw ScenarioError(path + "/" + it.key(), "unknown field");
  }
}

Similarity parse_pose(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ScenarioError(path, "expected an object");
  only_keys(j, {"rotation", "reflect", "scale", "translation"}, path);
  Similarity s;
  if (j.contains("rotation")) s.rotation = Angle(number(j["rotation"], path + "/rotation"));
  if (j.contains("reflect")) {
    if (!j["reflect"].is_boolean()) throw ScenarioError(path + "/reflect", "expected true or false");
    s.reflect = j["reflect"].get<bool>();
  }
  if (j.contains("scale")) s.scale = positive_field(j, "scale", path);
  if (j.contains("translation")) s.translation = point(j["translation"], path + "/translation");
  return s;
}

ShapeDef parse_shape(const Json& j, const std::string& path, std::vector<std::string>& warnings) {
  if (!j.is_object()) throw ScenarioError(path, "expected an object");
  const Json& kind = field(j, "kind", path);
  if (!kind.is_string()) throw ScenarioError(path + "/kind", "expected a string");
  ShapeDef s;
  s.kind = kind.get<std::string>();
  if (s.kind == "disk") {
    only_keys(j, {"kind", "pose", "center", "radius"}, path);
    s.center = point_field(j, "center", path);
    s.radius = positive_field(j, "radius", path);
  } else if (s.kind == "ellipse") {
    only_keys(j, {"kind", "pose", "center", "a", "b", "angle"}, path);
    s.center = point_field(j, "center", path);
    s.a = positive_field(j, "a", path);
    s.b = positive_field(j, "b", path);
    if (j.contains("angle")) s.angle = number_field(j, "angle", path);
  } else if (s.kind == "polygon") {
    only_keys(j, {"kind", "pose", "vertices"}, path);
    const Json& v = field(j, "vertices", path);
    if (!v.is_array() || v.empty()) throw ScenarioError(path + "/vertices", "expected a non-empty array of points");
    for (std::size_t i = 0; i < v.size(); ++i) s.vertices.push_back(point(v[i], path + "/vertices/" + std::to_string(i)));
    double area = 0.0;
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      area += cross(s.vertices[i], s.vertices[(i + 1) % s.vertices.size()]);
    }
    if (area < 0.0) {
      std::reverse(s.vertices.begin(), s.vertices.end());
      warnings.push_back(path + ": clockwise polygon reversed to counterclockwise");
    }
  } else if (s.kind == "segment") {
    only_keys(j, {"kind", "pose", "from", "to"}, path);
    s.from = point_field(j, "from", path);
    s.to = point_field(j, "to", path);
  } else if (s.kind == "reuleaux") {
    only_keys(j, {"kind", "pose", "center", "width", "angle"}, path);
    s.center = point_field(j, "center", path);
    s.width = positive_field(j, "width", path);
    if (j.contains("angle")) s.angle = number_field(j, "angle", path);
  } else if (s.kind == "stadium") {
    only_keys(j, {"kind", "pose", "center", "half_length", "radius", "angle"}, path);
    s.center = point_field(j, "center", path);
    s.half_length = number_field(j, "half_length", path);
    if (s.half_length < 0.0) throw ScenarioError(path + "/half_length", "must not be negative");
    s.radius = positive_field(j, "radius", path);
    if (j.contains("angle")) s.angle = number_field(j, "angle", path);
  } else if (s.kind == "support_samples") {
    only_keys(j, {"kind", "pose", "h"}, path);
    const Json& h = field(j, "h", path);
    if (!h.is_array()) throw ScenarioError(path + "/h", "expected an array of numbers");
    for (std::size_t i = 0; i < h.size(); ++i) s.h.push_back(number(h[i], path + "/h/" + std::to_string(i)));
  } else {
    throw ScenarioError(path + "/kind", "unknown kind '" + s.kind + "'");
  }
  if (j.contains("pose")) s.pose = parse_pose(j["pose"], path + "/pose");

  try {
    (void)build_body(s);
  } catch (const InvalidBodyError& e) {
    std::string where = path;
    if (s.kind == "polygon") where += "/vertices";
    if (s.kind == "support_samples") where += "/h";
    throw ScenarioError(where, e.what());
  }
  return s;
}

Json point_json(Point p) { return Json::array({p.x, p.y}); }

Json shape_json(const ShapeDef& s) {
  Json j;
  j["kind"] = s.kind;
  if (s.kind == "disk") {
    j["center"] = point_json(s.center);
    j["radius"] = s.radius;
  } else if (s.kind == "ellipse") {
    j["center"] = point_json(s.center);
    j["a"] = s.a;
    j["b"] = s.b;
    j["angle"] = s.angle;
  } else if (s.kind == "polygon") {
    j["vertices"] = Json::array();
    for (Point p : s.vertices) j["vertices"].push_back(point_json(p));
  } else if (s.kind == "segment") {
    j["from"] = point_json(s.from);
    j["to"] = point_json(s.to);
  } else if (s.kind == "reuleaux") {
    j["center"] = point_json(s.center);
    j["width"] = s.width;
    j["angle"] = s.angle;
  } else if (s.kind == "stadium") {
    j["center"] = point_json(s.center);
    j["half_length"] = s.half_length;
    j["radius"] = s.radius;
    j["angle"] = s.angle;
  } else if (s.kind == "support_samples") {
    j["h"] = s.h;
  }
  if (s.pose) {
    j["pose"] = {{"rotation", s.pose->rotation.value()},
                 {"reflect", s.pose->reflect},
                 {"scale", s.pose->scale},
                 {"translation", point_json(s.pose->translation)}};
  }
  return j;
}

}  // namespace

bool operator==(const ShapeDef& x, const ShapeDef& y) {
  return x.kind == y.kind && x.center == y.center && x.radius == y.radius && x.a == y.a && x.b == y.b &&
         x.width == y.width && x.half_length == y.half_length && x.angle == y.angle && x.vertices == y.vertices &&
         x.from == y.from && x.to == y.to && x.h == y.h && same_pose(x.pose, y.pose);
}

bool operator==(const Scenario& x, const Scenario& y) {
  auto same_triangle = [](const std::optional<Triangle>& a, const std::optional<Triangle>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->a0 == b->a0 && a->a1 == b->a1 && a->a2 == b->a2);
  };
  return x.version == y.version && x.bodies == y.bodies && same_triangle(x.triangle, y.triangle) &&
         x.params == y.params;
}

const ShapeDef* Scenario::find(const std::string& name) const {
  for (const auto& [n, s] : bodies) {
    if (n == name) return &s;
  }
  return nullptr;
}

ConvexBody build_body(const ShapeDef& s) {
  ConvexBody body = [&] {
    if (s.kind == "disk") return ConvexBody::disk(s.center, s.radius);
    if (s.kind == "ellipse") return ConvexBody::ellipse(s.center, s.a, s.b, s.angle);
    if (s.kind == "polygon") return ConvexBody::polygon(s.vertices);
    if (s.kind == "segment") {
      if (s.from == s.to) throw InvalidBodyError("segment endpoints coincide");
      return ConvexBody::segment(s.from, s.to);
    }
    if (s.kind == "reuleaux") return ConvexBody::reuleaux(s.center, s.width, s.angle);
    if (s.kind == "stadium") return ConvexBody::stadium(s.center, s.half_length, s.radius, s.angle);
    if (s.kind == "support_samples") return ConvexBody::support_samples(s.h);
    throw InvalidBodyError("unknown kind '" + s.kind + "'");
  }();
  return s.pose ? body.transformed(*s.pose) : body;
}

Scenario parse_scenario(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ScenarioError("", std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw ScenarioError("", "expected a JSON object");
  only_keys(doc, {"version", "bodies", "triangle", "params"}, "");

  Scenario s;
  if (doc.contains("version")) {
    if (!doc["version"].is_number_integer() || doc["version"].get<int>() != kScenarioVersion) {
      throw ScenarioError("/version", "unsupported version (expected " + std::to_string(kScenarioVersion) + ")");
    }
  }
  const Json& bodies = field(doc, "bodies", "");
  if (!bodies.is_object() || bodies.empty()) throw ScenarioError("/bodies", "expected a non-empty object");
  for (auto it = bodies.begin(); it != bodies.end(); ++it) {
    s.bodies.emplace_back(it.key(), parse_shape(it.value(), "/bodies/" + it.key(), s.warnings));
  }

  if (doc.contains("triangle")) {
    const Json& t = doc["triangle"];
    if (!t.is_array() || t.size() != 3) throw ScenarioError("/triangle", "expected three points");
    try {
      s.triangle = Triangle::make(point(t[0], "/triangle/0"), point(t[1], "/triangle/1"), point(t[2], "/triangle/2"));
    } catch (const PreconditionError& e) {
      throw ScenarioError("/triangle", e.what());
    }
  }

  if (doc.contains("params")) {
    const Json& p = doc["params"];
    if (!p.is_object()) throw ScenarioError("/params", "expected an object");
    only_keys(p, {"body", "other", "tol", "samples", "rotation_steps", "translation_grid"}, "/params");
    for (const char* key : {"body", "other"}) {
      if (!p.contains(key)) continue;
      const std::string path = std::string("/params/") + key;
      if (!p[key].is_string()) throw ScenarioError(path, "expected a body name");
      const std::string name = p[key].get<std::string>();
      if (!s.find(name)) throw ScenarioError(path, "unknown body '" + name + "'");
      (std::string(key) == "body" ? s.params.body : s.params.other) = name;
    }
    if (p.contains("tol")) s.params.tol = positive_field(p, "tol", "/params");
    if (p.contains("samples")) s.params.samples = integer(p["samples"], "/params/samples");
    if (p.contains("rotation_steps")) s.params.rotation_steps = integer(p["rotation_steps"], "/params/rotation_steps");
    if (p.contains("translation_grid")) {
      s.params.translation_grid = integer(p["translation_grid"], "/params/translation_grid");
    }
  }
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  Json doc;
  doc["version"] = s.version;
  doc["bodies"] = Json::object();
  for (const auto& [name, def] : s.bodies) doc["bodies"][name] = shape_json(def);
  if (s.triangle) {
    doc["triangle"] = Json::array({point_json(s.triangle->a0), point_json(s.triangle->a1), point_json(s.triangle->a2)});
  }
  Json p = Json::object();
  if (s.params.body) p["body"] = *s.params.body;
  if (s.params.other) p["other"] = *s.params.other;
  if (s.params.tol) p["tol"] = *s.params.tol;
  if (s.params.samples) p["samples"] = *s.params.samples;
  if (s.params.rotation_steps) p["rotation_steps"] = *s.params.rotation_steps;
  if (s.params.translation_grid) p["translation_grid"] = *s.params.translation_grid;
  if (!p.empty()) doc["params"] = p;
  return doc.dump(2) + "\n";
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* v = std::getenv("GEOM_SEED");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  return (end && *end == '\0') ? static_cast<std::uint64_t>(x) : fallback;
}

}  // namespace geom
