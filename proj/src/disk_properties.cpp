#include "geom/disk_properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "numeric.hpp"

namespace geom {

std::string to_string(PropertyVerdict v) {
  switch (v) {
    case PropertyVerdict::Pass: return "PASS";
    case PropertyVerdict::Fail: return "FAIL";
    case PropertyVerdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

// Acceptance thresholds for one body. A sampled body has faces of length
// about r * spacing and touch-point midpoints accurate to about r * spacing^2.
struct Slack {
  double dist;
  double flat;
  double angle;
  double radius;
};

Slack slack_for(const ConvexBody& k, const Tolerance& tol) {
  const double sp = k.sample_spacing();
  const double r = k.radius_about(k.reference_center());
  const double base = tol.eps_geom * std::max(1.0, r);
  return {base + 4.0 * r * sp * sp, base + 2.0 * r * sp, tol.eps_angle + 1.5 * sp, r};
}

PropertyReport make_report(std::string id, std::string name) {
  PropertyReport r;
  r.id = std::move(id);
  r.name = std::move(name);
  return r;
}

std::string fmt_point(Point p) {
  std::ostringstream os;
  os.precision(9);
  os << "(" << p.x << ", " << p.y << ")";
  return os.str();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(9);
  os << x;
  return os.str();
}

// Prefers the larger value; near-ties go to the smaller wrapped angle so the
// reported witness does not depend on the order of the scan.
bool worse(double value, double angle, double best_value, double best_angle) {
  const double scale = 1e-9 * std::max(1.0, std::abs(best_value));
  if (value > best_value + scale) return true;
  if (value < best_value - scale) return false;
  return wrap_angle(angle) < wrap_angle(best_angle);
}

// Inward normal chord from p1. `mismatch` is the signed offset, along the
// opposite supporting line, from the far end of the chord to that line's
// touch point; it changes sign where a diagonal sits.
struct Probe {
  bool valid = false;
  double mismatch = 0.0;
  std::optional<Diagonal> diag;
};

// Distance from p to the boundary along direction angle d: the smallest
// (h(w) - <p, u(w)>) / <u(d), u(w)> over normals w facing the ray.
double ray_exit(const ConvexBody& k, Point p, double d) {
  auto f = [&](double w) {
    const double den = std::cos(w - d);
    if (den <= 1e-12) return std::numeric_limits<double>::infinity();
    return std::max(0.0, k.support(w) - dot(p, unit(w))) / den;
  };
  constexpr int n = 360;
  const double lo = d - kPi / 2;
  const double step = kPi / n;
  int best = 1;
  double best_v = f(lo + step);
  for (int i = 2; i < n; ++i) {
    const double v = f(lo + step * i);
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  const double w = detail::golden_min(f, lo + step * (best - 1), lo + step * (best + 1), 100);
  return std::min(best_v, f(w));
}

Probe probe_from(const ConvexBody& k, Point p1, double nu, const Slack& s, const Tolerance& tol) {
  const double t = ray_exit(k, p1, nu + kPi);
  if (!(t > s.dist) || !std::isfinite(t)) return {};
  const Point p2 = p1 - t * unit(nu);
  Probe out;
  out.valid = true;
  out.mismatch = cross(unit(nu), k.face(nu + kPi, tol.eps_geom).mid() - p2);
  const double gap = k.support(nu + kPi) - dot(p2, unit(nu + kPi));
  if (gap <= s.dist) out.diag = Diagonal{p1, p2};
  return out;
}

Probe probe_at(const ConvexBody& k, double nu, const Slack& s, const Tolerance& tol) {
  const Face f = k.face(nu, tol.eps_geom);
  if (f.length() > s.flat) return {};
  return probe_from(k, f.mid(), nu, s, tol);
}

struct Corner {
  Point p;
  NormalCone cone;
};

std::vector<Corner> corners(const ConvexBody& k, const Slack& s) {
  std::vector<Point> cand;
  if (const auto* poly = std::get_if<PolygonShape>(&k.representation())) {
    cand = poly->vertices;
  } else if (const auto* smp = std::get_if<SampledShape>(&k.representation())) {
    cand = smp->vertices;
  } else {
    constexpr int n = 2048;
    std::vector<Point> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = k.support_point(kTwoPi * i / n);
    for (int i = 0; i < n; ++i) {
      if (distance(pts[i], pts[(i + 1) % n]) > s.dist) continue;
      if (!cand.empty() && distance(cand.back(), pts[i]) <= s.dist) continue;
      cand.push_back(pts[i]);
    }
    while (cand.size() > 1 && distance(cand.back(), cand.front()) <= s.dist) cand.pop_back();
  }
  std::vector<Corner> out;
  for (Point p : cand) {
    if (auto c = k.normal_cone(p, s.dist)) out.push_back({p, *c});
  }
  return out;
}

std::vector<double> flat_normals(const ConvexBody& k) {
  std::vector<double> out;
  auto edges = [&](const std::vector<Point>& v) {
    for (std::size_t i = 0; i < v.size() && v.size() > 1; ++i) {
      out.push_back(normal_of_direction(angle_of(v[(i + 1) % v.size()] - v[i])));
    }
  };
  if (const auto* poly = std::get_if<PolygonShape>(&k.representation())) {
    edges(poly->vertices);
  } else if (const auto* smp = std::get_if<SampledShape>(&k.representation())) {
    edges(smp->vertices);
  } else if (const auto* a = std::get_if<AnalyticShape>(&k.representation())) {
    if (a->kind == AnalyticKind::Segment || a->kind == AnalyticKind::Stadium) {
      out.push_back(a->pose.map_angle(kPi / 2));
      out.push_back(a->pose.map_angle(-kPi / 2));
    }
  } else {
    // Hull: chords between support points at neighbouring grid normals.
    constexpr int n = 2048;
    std::vector<Point> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = k.support_point(kTwoPi * i / n);
    for (int i = 0; i < n; ++i) {
      const Point d = pts[(i + 1) % n] - pts[i];
      if (norm(d) > 0.0) out.push_back(normal_of_direction(angle_of(d)));
    }
  }
  return out;
}

// Diagonals with starting normal in [0, span): grid normals where one exists,
// plus bisected sign changes of the mismatch between grid normals.
std::vector<std::pair<double, Diagonal>> scan_diagonals(const ConvexBody& k, double span, int n,
                                                        const Tolerance& tol) {
  const Slack s = slack_for(k, tol);
  std::vector<Probe> grid(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) grid[static_cast<std::size_t>(i)] = probe_at(k, span * i / n, s, tol);
  std::vector<std::pair<double, Diagonal>> out;
  for (int i = 0; i < n; ++i) {
    const Probe& a = grid[static_cast<std::size_t>(i)];
    const Probe& b = grid[static_cast<std::size_t>(i) + 1];
    if (a.diag) {
      out.emplace_back(span * i / n, *a.diag);
      continue;
    }
    if (!a.valid || !b.valid || b.diag || (a.mismatch < 0.0) == (b.mismatch < 0.0)) continue;
    auto f = [&](double nu) {
      const Probe p = probe_at(k, nu, s, tol);
      return p.valid ? p.mismatch : 0.0;
    };
    const double root = detail::bisect_root(f, span * i / n, span * (i + 1) / n, a.mismatch, 60, 1e-14);
    const Probe p = probe_at(k, root, s, tol);
    if (p.diag) out.emplace_back(root, *p.diag);
  }
  return out;
}

double segment_distance(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return distance(p, a + t * d);
}

}  // namespace

PropertyReport check_perpendicularly_opposed(const ConvexBody& k, double theta, const Tolerance& tol) {
  auto r = make_report("9", "perpendicularly opposed supporting lines");
  const Slack s = slack_for(k, tol);
  const double nu = normal_of_direction(theta);
  const Point m0 = k.face(nu, tol.eps_geom).mid();
  const Point m1 = k.face(nu + kPi, tol.eps_geom).mid();
  const Point c = m0 - m1;
  const double len = norm(c);
  if (len <= s.dist) {
    r.verdict = PropertyVerdict::Unknown;
    r.details = "parallel supporting lines coincide";
    return r;
  }
  const Point u = unit(nu);
  r.magnitude = std::atan2(std::abs(cross(c, u)), std::abs(dot(c, u)));
  const double allowed = s.angle + (s.dist - tol.eps_geom * std::max(1.0, s.radius)) / len;
  r.verdict = r.magnitude <= allowed ? PropertyVerdict::Pass : PropertyVerdict::Fail;
  r.witness.direction = wrap_angle(theta);
  r.witness.normal = nu;
  r.witness.points = {m0, m1};
  r.details = "theta=" + fmt(wrap_angle(theta)) + " face midpoints " + fmt_point(m0) + " and " + fmt_point(m1) +
              ", chord off perpendicular by " + fmt(r.magnitude) + " rad";
  return r;
}

PropertyReport check_chord_equality(const ConvexBody& k, double theta, const Tolerance& tol) {
  auto r = make_report("10", "opposite faces of equal length");
  const Slack s = slack_for(k, tol);
  const double nu = normal_of_direction(theta);
  const Face f0 = k.face(nu, tol.eps_geom);
  const Face f1 = k.face(nu + kPi, tol.eps_geom);
  r.magnitude = std::abs(f0.length() - f1.length());
  r.verdict = r.magnitude <= s.flat ? PropertyVerdict::Pass : PropertyVerdict::Fail;
  r.witness.direction = wrap_angle(theta);
  r.witness.normal = nu;
  r.witness.points = {f0.first, f0.last, f1.first, f1.last};
  r.details = "theta=" + fmt(wrap_angle(theta)) + " face lengths " + fmt(f0.length()) + " and " + fmt(f1.length());
  return r;
}

PropertyReport check_smoothness(const ConvexBody& k, const Tolerance& tol) {
  auto r = make_report("11", "smooth boundary");
  const Slack s = slack_for(k, tol);
  const Corner* worst = nullptr;
  const auto cs = corners(k, s);
  for (const auto& c : cs) {
    if (!worst || worse(c.cone.width, c.cone.first, worst->cone.width, worst->cone.first)) worst = &c;
  }
  if (!worst) {
    r.verdict = PropertyVerdict::Pass;
    r.details = "no corners";
    return r;
  }
  r.magnitude = worst->cone.width;
  r.witness.normal = worst->cone.first;
  r.witness.points = {worst->p};
  r.verdict = r.magnitude <= s.angle ? PropertyVerdict::Pass : PropertyVerdict::Fail;
  r.details = "widest normal cone " + fmt(r.magnitude) + " rad at " + fmt_point(worst->p);
  return r;
}

PropertyReport check_strict_convexity(const ConvexBody& k, const Tolerance& tol) {
  auto r = make_report("13", "one touch point per supporting line");
  const Slack s = slack_for(k, tol);
  bool any = false;
  double best_nu = 0.0;
  Face best{};
  for (double nu : flat_normals(k)) {
    const Face f = k.face(nu, tol.eps_geom);
    if (!any || worse(f.length(), nu, best.length(), best_nu)) {
      any = true;
      best = f;
      best_nu = wrap_angle(nu);
    }
  }
  if (!any) {
    r.verdict = PropertyVerdict::Pass;
    r.details = "no flat faces";
    return r;
  }
  r.magnitude = best.length();
  r.witness.normal = best_nu;
  r.witness.points = {best.first, best.last};
  r.verdict = r.magnitude <= s.flat ? PropertyVerdict::Pass : PropertyVerdict::Fail;
  r.details = "longest face " + fmt(r.magnitude) + " at normal " + fmt(best_nu);
  return r;
}

std::optional<Diagonal> diagonal_at_normal(const ConvexBody& k, double nu, const Tolerance& tol) {
  return probe_at(k, nu, slack_for(k, tol), tol).diag;
}

std::optional<Diagonal> opposite_point(const ConvexBody& k, Point p, const Tolerance& tol) {
  const Slack s = slack_for(k, tol);
  const auto cone = k.normal_cone(p, s.dist);
  if (!cone) throw PreconditionError("point " + fmt_point(p) + " is not on the boundary");
  if (cone->width > s.angle) return std::nullopt;
  return probe_from(k, p, cone->first + 0.5 * cone->width, s, tol).diag;
}

PropertyReport check_perpendicular_diagonals_bisect(const ConvexBody& k, const Tolerance& tol, int samples) {
  auto r = make_report("21", "perpendicular diagonals halve each other");
  const Slack s = slack_for(k, tol);
  int pairs = 0;
  for (const auto& [nu, d1] : scan_diagonals(k, kPi, samples, tol)) {
    const auto d2 = diagonal_at_normal(k, nu + kPi / 2, tol);
    if (!d2) continue;
    ++pairs;
    const Point x = intersect(DirectedLine::through(d1.p1, d1.p2), DirectedLine::through(d2->p1, d2->p2));
    const double off = std::max(distance(x, d1.mid()), distance(x, d2->mid()));
    if (pairs == 1 || worse(off, nu, r.magnitude, *r.witness.normal)) {
      r.magnitude = off;
      r.witness.normal = nu;
      r.witness.points = {d1.p1, d1.p2, d2->p1, d2->p2, x};
    }
  }
  if (pairs == 0) {
    r.verdict = PropertyVerdict::Unknown;
    r.details = "no perpendicular pair of diagonals found";
    return r;
  }
  r.verdict = r.magnitude <= s.dist ? PropertyVerdict::Pass : PropertyVerdict::Fail;
  r.details = std::to_string(pairs) + " perpendicular pairs; worst intersection is " + fmt(r.magnitude) +
              " from a midpoint at normal " + fmt(*r.witness.normal);
  return r;
}

PropertyReport check_diagonal_symmetry(const ConvexBody& k, const Diagonal& d, const Tolerance& tol) {
  auto r = make_report("23", "symmetric about each diagonal");
  const Slack s = slack_for(k, tol);
  const double dir = angle_of(d.p2 - d.p1);
  const ConvexBody mirrored = k.transformed(Similarity::reflect_across_line(d.p1, dir));
  r.magnitude = body_distance(k, mirrored);
  r.witness.direction = dir;
  r.witness.points = {d.p1, d.p2};
  r.verdict = r.magnitude <= s.dist ? PropertyVerdict::Pass : PropertyVerdict::Fail;
  r.details = "mirror image in " + fmt_point(d.p1) + "-" + fmt_point(d.p2) + " is " + fmt(r.magnitude) + " away";
  return r;
}

PropertyReport check_central_symmetry(const ConvexBody& k, const Tolerance& tol, int samples) {
  auto r = make_report("24", "centrally symmetric");
  const Slack s = slack_for(k, tol);
  for (const auto& [nu, d1] : scan_diagonals(k, kPi, samples, tol)) {
    const auto d2 = diagonal_at_normal(k, nu + kPi / 2, tol);
    if (!d2) continue;
    const Point o = intersect(DirectedLine::through(d1.p1, d1.p2), DirectedLine::through(d2->p1, d2->p2));
    r.magnitude = body_distance(k, k.transformed(Similarity::point_reflection(o)));
    r.witness.normal = nu;
    r.witness.points = {o};
    r.verdict = r.magnitude <= s.dist ? PropertyVerdict::Pass : PropertyVerdict::Fail;
    r.details = "center candidate " + fmt_point(o) + "; point reflection is " + fmt(r.magnitude) + " away";
    return r;
  }
  r.verdict = PropertyVerdict::Unknown;
  r.details = "no perpendicular pair of diagonals found";
  return r;
}

PropertyReport check_diagonals_through_center(const ConvexBody& k, Point o, const Tolerance& tol, int samples) {
  auto r = make_report("25", "every diagonal passes through the center");
  const Slack s = slack_for(k, tol);
  int found = 0;
  for (const auto& [nu, d] : scan_diagonals(k, kPi, samples, tol)) {
    const double off = segment_distance(o, d.p1, d.p2);
    if (found++ == 0 || worse(off, nu, r.magnitude, *r.witness.normal)) {
      r.magnitude = off;
      r.witness.normal = nu;
      r.witness.points = {d.p1, d.p2, o};
    }
  }
  if (found == 0) {
    r.verdict = PropertyVerdict::Unknown;
    r.details = "no diagonals found";
    return r;
  }
  r.verdict = r.magnitude <= s.dist ? PropertyVerdict::Pass : PropertyVerdict::Fail;
  r.details = std::to_string(found) + " diagonals; farthest misses " + fmt_point(o) + " by " + fmt(r.magnitude);
  return r;
}

double radial_ode_residual(double x, double p, double slope) { return std::abs(slope + x / p); }

PropertyReport check_radial_perpendicularity(const ConvexBody& k, Point o, const Tolerance& tol, int samples) {
  auto r = make_report("28", "tangents perpendicular to radii");
  const Slack s = slack_for(k, tol);
  double defect = 0.0, rmin = std::numeric_limits<double>::infinity(), rmax = 0.0, ode = 0.0;
  double defect_nu = 0.0;
  Point pmin{}, pmax{};
  for (int i = 0; i < samples; ++i) {
    const double nu = kTwoPi * i / samples;
    const Point p = k.face(nu, tol.eps_geom).mid();
    const Point v = p - o;
    const Point u = unit(nu);
    const double a = std::atan2(std::abs(cross(v, u)), dot(v, u));
    if (a > defect) {
      defect = a;
      defect_nu = nu;
    }
    const double rad = norm(v);
    if (rad < rmin) {
      rmin = rad;
      pmin = p;
    }
    if (rad > rmax) {
      rmax = rad;
      pmax = p;
    }
    // Lower arc written as y = p(x) around o.
    if (std::sin(nu) < -0.1 && v.y < 0.0) {
      ode = std::max(ode, radial_ode_residual(v.x, v.y, -std::cos(nu) / std::sin(nu)));
    }
  }
  const double spread = rmax - rmin;
  const bool radial_ok = spread <= s.dist;
  const bool angle_ok = defect <= s.angle;
  r.verdict = radial_ok && angle_ok ? PropertyVerdict::Pass : PropertyVerdict::Fail;
  r.magnitude = radial_ok ? defect : spread;
  r.witness.normal = defect_nu;
  r.witness.points = {o, pmin, pmax};
  r.details = "radial spread " + fmt(spread) + ", worst tangent angle defect " + fmt(defect) +
              " rad, ODE residual " + fmt(ode);
  return r;
}

std::vector<PropertyReport> property_ladder(const ConvexBody& k, const Tolerance& tol) {
  std::vector<PropertyReport> out;
  auto first_failing = [&](auto check) {
    PropertyReport worst;
    bool have = false;
    for (double theta : ladder_probe_directions()) {
      auto r = check(k, theta, tol);
      if (r.failed()) return r;
      if (!have || r.magnitude > worst.magnitude) worst = std::move(r);
      have = true;
    }
    return worst;
  };
  auto skipped = [](std::string id, std::string name, const std::string& why) {
    auto r = make_report(std::move(id), std::move(name));
    r.details = "skipped: " + why;
    return r;
  };

  out.push_back(first_failing(check_perpendicularly_opposed));
  out.push_back(first_failing(check_chord_equality));
  out.push_back(check_smoothness(k, tol));
  out.push_back(check_strict_convexity(k, tol));
  const bool regular = !out[2].failed() && !out[3].failed();
  if (!regular) {
    const std::string why = "diagonals need a smooth strictly convex boundary";
    out.push_back(skipped("21", "perpendicular diagonals halve each other", why));
    out.push_back(skipped("23", "symmetric about each diagonal", why));
    out.push_back(skipped("24", "centrally symmetric", why));
    out.push_back(skipped("25", "every diagonal passes through the center", why));
    out.push_back(skipped("28", "tangents perpendicular to radii", why));
    return out;
  }
  out.push_back(check_perpendicular_diagonals_bisect(k, tol));

  PropertyReport sym = make_report("23", "symmetric about each diagonal");
  sym.details = "no diagonals found";
  for (const auto& [nu, d] : scan_diagonals(k, kPi, 16, tol)) {
    auto r = check_diagonal_symmetry(k, d, tol);
    if (sym.verdict == PropertyVerdict::Unknown || r.magnitude > sym.magnitude) sym = std::move(r);
  }
  out.push_back(std::move(sym));

  out.push_back(check_central_symmetry(k, tol));
  const PropertyReport& central = out.back();
  if (central.verdict != PropertyVerdict::Pass) {
    const std::string why = "no center of symmetry";
    out.push_back(skipped("25", "every diagonal passes through the center", why));
    out.push_back(skipped("28", "tangents perpendicular to radii", why));
    return out;
  }
  const Point o = central.witness.points.front();
  out.push_back(check_diagonals_through_center(k, o, tol));
  out.push_back(check_radial_perpendicularity(k, o, tol));
  return out;
}

const PropertyReport* first_failure(const std::vector<PropertyReport>& reports) {
  for (const auto& r : reports) {
    if (r.failed()) return &r;
  }
  return nullptr;
}

}  // namespace geom
