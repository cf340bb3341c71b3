#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "geom/cli_io.hpp"
#include "geom/disk_properties.hpp"

namespace geom {

namespace {

using Json = nlohmann::ordered_json;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string pt(Point p) { return "(" + num(p.x) + ", " + num(p.y) + ")"; }

Json point_json(Point p) { return Json::array({p.x, p.y}); }

Json line_json(const DirectedLine& l) {
  return {{"anchor", point_json(l.anchor())}, {"direction", l.direction().value()}};
}

Json similarity_json(const Similarity& s) {
  return {{"rotation", s.rotation.value()},
          {"reflect", s.reflect},
          {"scale", s.scale},
          {"translation", point_json(s.translation)}};
}

Json witness_json(const CrossingWitness& w, const std::string& k_name, const std::string& kp_name) {
  return {{"t1", line_json(w.t1)},
          {"t2", line_json(w.t2)},
          {"U1", point_json(w.u1)},
          {"U1'", point_json(w.u1_last)},
          {"U2", point_json(w.u2)},
          {"U2'", point_json(w.u2_last)},
          {"first", w.first_is_k ? k_name : kp_name},
          {"margin", w.margin}};
}

std::string witness_text(const CrossingWitness& w, const std::string& k_name, const std::string& kp_name) {
  std::ostringstream os;
  os << "witness:\n";
  os << "  t1: through " << pt(w.t1.anchor()) << " direction " << num(w.t1.direction().value()) << "\n";
  os << "  t2: through " << pt(w.t2.anchor()) << " direction " << num(w.t2.direction().value()) << "\n";
  os << "  U1 " << pt(w.u1) << "  U1' " << pt(w.u1_last) << "\n";
  os << "  U2 " << pt(w.u2) << "  U2' " << pt(w.u2_last) << "\n";
  os << "  first body: " << (w.first_is_k ? k_name : kp_name) << "\n";
  os << "  margin: " << num(w.margin) << "\n";
  return os.str();
}

std::string similarity_text(const Similarity& s) {
  return "rotation " + num(s.rotation.value()) + (s.reflect ? " with reflection" : "") + ", translation " +
         pt(s.translation);
}

struct Context {
  const Scenario& sc;
  const RunFlags& flags;

  std::string name(const std::optional<std::string>& chosen, std::size_t fallback, const char* role) const {
    if (chosen) return *chosen;
    if (sc.bodies.size() <= fallback) {
      throw ScenarioError("/params/" + std::string(role), "command needs at least " + std::to_string(fallback + 1) +
                                                              " bodies");
    }
    return sc.bodies[fallback].first;
  }
  std::string first_name() const { return name(sc.params.body, 0, "body"); }
  std::string second_name() const { return name(sc.params.other, 1, "other"); }

  ConvexBody body(const std::string& n) const {
    const ShapeDef* s = sc.find(n);
    if (!s) throw ScenarioError("/bodies/" + n, "unknown body");
    return build_body(*s);
  }

  Tolerance tolerance(const ConvexBody& a, const ConvexBody& b) const {
    const auto t = flags.tol ? flags.tol : sc.params.tol;
    if (t) return {*t, *t};
    return default_tolerance(a, b);
  }
  int samples() const { return flags.samples.value_or(sc.params.samples.value_or(4096)); }
  SearchConfig search() const {
    SearchConfig cfg;
    cfg.rotation_steps = flags.rotation_steps.value_or(sc.params.rotation_steps.value_or(cfg.rotation_steps));
    cfg.translation_grid = sc.params.translation_grid.value_or(cfg.translation_grid);
    return cfg;
  }
  const Triangle& triangle(const char* command) const {
    if (!sc.triangle) throw ScenarioError("/triangle", std::string("required by ") + command);
    return *sc.triangle;
  }
  SvgScene scene() const {
    SvgScene s;
    for (const auto& [n, def] : sc.bodies) s.bodies.emplace_back(n, build_body(def));
    s.triangle = sc.triangle;
    return s;
  }
};

struct Outcome {
  Json doc;
  std::string text;
  std::optional<SvgScene> svg;
};

Outcome carousel_command(const Context& c) {
  const std::string n0 = c.first_name(), n1 = c.second_name();
  const ConvexBody k0 = c.body(n0), k1 = c.body(n1);
  const Triangle& t = c.triangle("carousel-check");
  const CarouselVerdict v = carousel_check(k0, k1, t, c.tolerance(k0, k1));
  Outcome o;
  o.doc["status"] = to_string(v.result);
  o.doc["bodies"] = {n0, n1};
  std::ostringstream os;
  os << "carousel-check: " << to_string(v.result) << "\n";
  if (v.result == CarouselResult::Sat) {
    os << "satisfied: " << (v.k == 0 ? n1 : n0) << " lies in conv(" << (v.k == 0 ? n0 : n1) << " + T without A"
       << v.j << ")\n";
    o.doc["case"] = {{"j", v.j}, {"k", v.k}};
  }
  os << "  j k  margin           verdict\n";
  Json rows = Json::array();
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 2; ++k) {
      const int i = CarouselVerdict::index(j, k);
      char line[128];
      std::snprintf(line, sizeof line, "  %d %d  %-15s  %s\n", j, k, num(v.margins[i]).c_str(),
                    to_string(v.verdicts[i]).c_str());
      os << line;
      rows.push_back({{"j", j}, {"k", k}, {"margin", v.margins[i]}, {"verdict", to_string(v.verdicts[i])}});
    }
  }
  o.doc["containments"] = rows;
  o.text = os.str();
  SvgScene s = c.scene();
  const auto verts = t.vertices();
  for (int j = 0; j < 3; ++j) {
    const Point others[2] = {verts[(j + 1) % 3], verts[(j + 2) % 3]};
    for (const ConvexBody* k : {&k0, &k1}) s.hulls.push_back(hull_with_points(*k, others).outline());
  }
  o.svg = std::move(s);
  return o;
}

Outcome crossing_command(const Context& c) {
  const std::string n0 = c.first_name(), n1 = c.second_name();
  const ConvexBody k0 = c.body(n0), k1 = c.body(n1);
  const CrossingResult r = crosses(k0, k1, TangentOptions{c.samples(), c.tolerance(k0, k1)});
  Outcome o;
  o.doc["status"] = to_string(r.verdict);
  o.doc["bodies"] = {n0, n1};
  o.text = "find-crossing: " + to_string(r.verdict) + "\n";
  if (r.witness) {
    o.doc["witness"] = witness_json(*r.witness, n0, n1);
    o.text += witness_text(*r.witness, n0, n1);
  }
  if (r.grazing_direction) {
    o.doc["grazing_direction"] = *r.grazing_direction;
    o.text += "grazing common tangent at direction " + num(*r.grazing_direction) + "\n";
  }
  SvgScene s;
  s.bodies = {{n0, k0}, {n1, k1}};
  s.witness = r.witness;
  o.svg = std::move(s);
  return o;
}

Outcome disk_test_command(const Context& c) {
  const std::string n0 = c.first_name();
  const ConvexBody k = c.body(n0);
  const DiskTestResult r = disk_test(k, c.search());
  Outcome o;
  o.doc["status"] = r.found ? "WITNESS_FOUND" : "NO_WITNESS_FOUND";
  o.doc["body"] = n0;
  o.doc["resolution"] = r.resolution;
  o.doc["screened"] = r.screened;
  o.doc["refined"] = r.refined;
  if (!r.found) {
    o.text = "disk-test: NO_WITNESS_FOUND at resolution " + r.resolution + "\n";
    SvgScene s;
    s.bodies = {{n0, k}};
    o.svg = std::move(s);
    return o;
  }
  const std::string copy = n0 + "'";
  o.doc["phi"] = similarity_json(r.phi);
  o.doc["witness"] = witness_json(*r.witness, n0, copy);
  o.text = "disk-test: WITNESS_FOUND at resolution " + r.resolution + "\nphi: " + similarity_text(r.phi) + "\n" +
           witness_text(*r.witness, n0, copy);
  SvgScene s;
  s.bodies = {{n0, k}, {copy, k.transformed(r.phi)}};
  s.witness = r.witness;
  o.svg = std::move(s);
  return o;
}

Outcome properties_command(const Context& c) {
  const std::string n0 = c.first_name();
  const ConvexBody k = c.body(n0);
  const auto reports = property_ladder(k, c.tolerance(k, k));
  bool fail = false, unknown = false;
  Json rows = Json::array();
  std::ostringstream os;
  for (const auto& r : reports) {
    fail = fail || r.verdict == PropertyVerdict::Fail;
    unknown = unknown || r.verdict == PropertyVerdict::Unknown;
    os << "  (" << r.id << ") " << r.name << ": " << to_string(r.verdict) << "  magnitude " << num(r.magnitude)
       << "\n      " << r.details << "\n";
    Json row = {{"id", r.id}, {"name", r.name}, {"verdict", to_string(r.verdict)}, {"magnitude", r.magnitude},
                {"details", r.details}};
    if (r.witness.direction) row["direction"] = *r.witness.direction;
    if (r.witness.normal) row["normal"] = *r.witness.normal;
    row["points"] = Json::array();
    for (Point p : r.witness.points) row["points"].push_back(point_json(p));
    rows.push_back(row);
  }
  const std::string status = fail ? "VIOLATED" : (unknown ? "UNKNOWN" : "HOLDS");
  Outcome o;
  o.doc["status"] = status;
  o.doc["body"] = n0;
  o.doc["properties"] = rows;
  o.text = "properties: " + status + "\n" + os.str();
  if (const PropertyReport* f = first_failure(reports)) o.text += "first failure: (" + f->id + ")\n";
  SvgScene s;
  s.bodies = {{n0, k}};
  o.svg = std::move(s);
  return o;
}

Outcome falsify_command(const Context& c) {
  const std::string n0 = c.first_name();
  const ConvexBody k = c.body(n0);
  Outcome o;
  o.doc["body"] = n0;
  std::optional<FalsifyResult> r;
  try {
    r = carousel_falsify(k, c.search());
  } catch (const ConstructionFailedError& e) {
    o.doc["status"] = "UNKNOWN";
    o.doc["reason"] = e.what();
    o.text = std::string("falsify: UNKNOWN\n") + e.what() + "\n";
    return o;
  }
  if (!r) {
    o.doc["status"] = "NO_WITNESS_FOUND";
    o.text = "falsify: NO_WITNESS_FOUND (the disk test found no crossing copy)\n";
    SvgScene s;
    s.bodies = {{n0, k}};
    o.svg = std::move(s);
    return o;
  }
  const std::string copy = n0 + "'";
  o.doc["status"] = to_string(r->verdict.result);
  o.doc["phi"] = similarity_json(r->phi);
  o.doc["triangle"] = Json::array({point_json(r->triangle.a0), point_json(r->triangle.a1), point_json(r->triangle.a2)});
  o.doc["margins"] = r->verdict.margins;
  o.doc["witness"] = witness_json(r->witness, n0, copy);
  std::ostringstream os;
  os << "falsify: " << to_string(r->verdict.result) << "\n";
  os << "phi: " << similarity_text(r->phi) << "\n";
  os << "triangle: " << pt(r->triangle.a0) << " " << pt(r->triangle.a1) << " " << pt(r->triangle.a2) << "\n";
  os << "margins:";
  for (double m : r->verdict.margins) os << " " << num(m);
  os << "\n" << witness_text(r->witness, n0, copy);
  o.text = os.str();
  SvgScene s;
  s.bodies = {{n0, k}, {copy, r->k1}};
  s.triangle = r->triangle;
  s.witness = r->witness;
  o.svg = std::move(s);
  return o;
}

Outcome render_command(const Context& c) {
  Outcome o;
  o.doc["status"] = "RENDERED";
  o.text = "render: RENDERED " + std::to_string(c.sc.bodies.size()) + " bodies\n";
  o.svg = c.scene();
  return o;
}

}  // namespace

int exit_code_for_status(std::string_view status) {
  for (const char* s : {"HOLDS", "SAT", "NO_CROSS", "NO_WITNESS_FOUND", "RENDERED"}) {
    if (status == s) return 0;
  }
  for (const char* s : {"VIOLATED", "UNSAT", "CROSS", "WITNESS_FOUND"}) {
    if (status == s) return 1;
  }
  if (status == "UNKNOWN") return 2;
  return 64;
}

RunResult run(const std::string& command, const Scenario& scenario, const RunFlags& flags) {
  const Context c{scenario, flags};
  Outcome o;
  try {
    if (command == "carousel-check") {
      o = carousel_command(c);
    } else if (command == "find-crossing") {
      o = crossing_command(c);
    } else if (command == "disk-test") {
      o = disk_test_command(c);
    } else if (command == "properties") {
      o = properties_command(c);
    } else if (command == "falsify") {
      o = falsify_command(c);
    } else if (command == "render") {
      o = render_command(c);
    } else {
      throw ScenarioError("", "unknown command '" + command + "'");
    }
  } catch (const std::exception& e) {
    // Scenario problems and violated preconditions such as a body outside
    // the triangle are input errors; other geometric failures are inconclusive.
    const bool input = dynamic_cast<const ScenarioError*>(&e) || dynamic_cast<const InvalidBodyError*>(&e) ||
                       dynamic_cast<const PreconditionError*>(&e);
    if (!input && !dynamic_cast<const GeometryError*>(&e)) throw;
    const std::string status = input ? "INPUT_ERROR" : "UNKNOWN";
    o = Outcome{};
    o.doc["status"] = status;
    o.doc["error"] = e.what();
    o.text = command + ": " + status + "\nerror: " + e.what() + "\n";
  }
  Json doc;
  doc["command"] = command;
  for (auto it = o.doc.begin(); it != o.doc.end(); ++it) doc[it.key()] = it.value();
  if (!scenario.warnings.empty()) doc["warnings"] = scenario.warnings;

  RunResult r;
  r.status = doc["status"].get<std::string>();
  r.exit_code = exit_code_for_status(r.status);
  if (flags.json) {
    r.report = doc.dump(2) + "\n";
  } else {
    r.report = o.text;
    for (const auto& w : scenario.warnings) r.report += "warning: " + w + "\n";
  }
  if (flags.svg && o.svg) r.svg = render_svg(*o.svg);
  return r;
}

}  // namespace geom
