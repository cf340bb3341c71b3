#include "geom/tangency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "geom/kernel.hpp"
#include "numeric.hpp"

namespace geom {

DirectedLine supporting_line(const ConvexBody& body, Angle theta) {
  const double nu = normal_of_direction(theta.value());
  return DirectedLine(body.support_point(nu), theta);
}

SemitangentPair semitangents(const ConvexBody& body, Point p, const Tolerance& tol) {
  const auto cone = body.normal_cone(p, tol.eps_geom);
  if (!cone) throw BoundaryMembershipError("semitangents: point is not on the boundary");
  const double first = direction_of_normal(cone->first);
  if (cone->smooth(tol.eps_angle)) {
    const DirectedLine l(p, Angle(first));
    return {l, l};
  }
  return {DirectedLine(p, Angle(first)), DirectedLine(p, Angle(direction_of_normal(cone->last())))};
}

bool is_secant(const ConvexBody& body, const DirectedLine& line, const Tolerance& tol) {
  if (!body.has_interior()) return false;
  const double nu = line.outward_normal_angle();
  const double c = line.offset();
  return c < body.support(nu) - tol.eps_geom && c > -body.support(nu + kPi) + tol.eps_geom;
}

std::pair<Point, Point> secant_boundary_points(const ConvexBody& body, const DirectedLine& line,
                                               const Tolerance& tol) {
  if (!is_secant(body, line, tol)) throw NotASecantError("line does not pass through the interior");
  if (const auto* poly = std::get_if<PolygonShape>(&body.representation())) {
    const auto& v = poly->vertices;
    double smin = std::numeric_limits<double>::infinity();
    double smax = -smin;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point a = v[i];
      const Point b = v[(i + 1) % v.size()];
      const double da = line.signed_distance(a);
      const double db = line.signed_distance(b);
      if ((da < 0) == (db < 0) && da != 0.0) continue;
      const Point x = da == db ? a : a + (da / (da - db)) * (b - a);
      const double s = dot(x - line.anchor(), line.direction_vector());
      smin = std::min(smin, s);
      smax = std::max(smax, s);
    }
    return {line.at(smin), line.at(smax)};
  }
  // The margin along the line is convex: find its minimum, then both roots.
  const Point c = body.reference_center();
  const double s0 = dot(c - line.anchor(), line.direction_vector());
  const double r = body.radius_about(c) + 1.0;
  auto m = [&](double s) { return point_margin(body, line.at(s)); };
  const double sin = detail::golden_min(m, s0 - r, s0 + r, 90);
  const double min_val = m(sin);
  if (min_val >= -tol.eps_geom) throw NotASecantError("line does not pass through the interior");
  const double s_first = detail::bisect_root(m, sin, s0 - r, min_val, 200, 1e-14);
  const double s_last = detail::bisect_root(m, sin, s0 + r, min_val, 200, 1e-14);
  return {line.at(s_first), line.at(s_last)};
}

ParallelSupport parallel_support_beyond_secant(const ConvexBody& body, const DirectedLine& secant,
                                               const Tolerance& tol) {
  if (!is_secant(body, secant, tol)) throw NotASecantError("line does not pass through the interior");
  const double nu = secant.outward_normal_angle();
  const Face f = body.face(nu, tol.eps_geom);
  return {f.last, DirectedLine(f.last, secant.direction())};
}

namespace {

PointedSupportingLine pointed(Point p, double nu) { return {p, DirectedLine(p, Angle(direction_of_normal(nu)))}; }

std::vector<TraversalSnapshot> polygon_revolution(const PolygonShape& poly, const PointedSupportingLine& start,
                                                  int samples, const Tolerance& tol) {
  const auto& v = poly.vertices;
  const int n = static_cast<int>(v.size());
  std::vector<double> en(n);  // normal of edge k: v[k] -> v[k+1]
  for (int k = 0; k < n; ++k) en[k] = normal_of_direction(angle_of(v[(k + 1) % n] - v[k]));
  auto turn_width = [&](int k) { return wrap_angle(en[k] - en[(k + n - 1) % n]); };

  // Locate the start as (event, progress). Event 2k turns at vertex k through
  // [en[k-1], en[k]]; event 2k+1 slides along edge k.
  const double nu0 = start.line.outward_normal_angle();
  int event = -1;
  double progress = 0.0;
  for (int k = 0; k < n && event < 0; ++k) {
    if (distance(start.point, v[k]) > tol.eps_geom) continue;
    const double off = wrap_angle(nu0 - en[(k + n - 1) % n]);
    const double w = turn_width(k);
    if (off <= w + tol.eps_angle || off >= kTwoPi - tol.eps_angle) {
      if (off >= kTwoPi - tol.eps_angle) {
        event = 2 * k;
      } else if (off >= w - tol.eps_angle) {
        event = 2 * k + 1;
      } else {
        event = 2 * k;
        progress = off;
      }
    }
  }
  for (int k = 0; k < n && event < 0; ++k) {
    if (std::abs(angle_diff(nu0, en[k])) > tol.eps_angle) continue;
    const Point a = v[k];
    const Point b = v[(k + 1) % n];
    const DirectedLine edge(a, Angle(angle_of(b - a)));
    if (std::abs(edge.signed_distance(start.point)) > tol.eps_geom) continue;
    const double f = dot(start.point - a, b - a) / dot(b - a, b - a);
    if (f < -1e-12 || f > 1 + 1e-12) continue;
    event = 2 * k + 1;
    progress = std::clamp(f, 0.0, 1.0);
  }
  if (event < 0) throw PreconditionError("start is not a pointed supporting line of the polygon");

  constexpr int slide_steps = 8;
  const double dnu = kTwoPi / samples;
  std::vector<TraversalSnapshot> out;
  auto emit = [&](int ev, double from, double to) {
    const int k = (ev / 2) % n;
    if (ev % 2 == 0) {
      const double base = en[(k + n - 1) % n];
      for (int j = 1;; ++j) {
        const double off = std::min(to, from + j * dnu);
        if (off > from) out.push_back({pointed(v[k], base + off), TraversalStep::Turn, k});
        if (off >= to) break;
      }
    } else {
      const Point a = v[k];
      const Point b = v[(k + 1) % n];
      for (int j = 1;; ++j) {
        const double f = std::min(to, from + static_cast<double>(j) / slide_steps);
        if (f > from) out.push_back({pointed(a + f * (b - a), en[k]), TraversalStep::Slide, k});
        if (f >= to) break;
      }
    }
  };
  auto length = [&](int ev) { return ev % 2 == 0 ? turn_width((ev / 2) % n) : 1.0; };
  emit(event, progress, length(event));
  for (int i = 1; i < 2 * n; ++i) {
    const int ev = (event + i) % (2 * n);
    emit(ev, 0.0, length(ev));
  }
  if (progress > 0.0) emit(event, 0.0, progress);
  if (!out.empty()) out.back().pointed = start;
  return out;
}

}  // namespace

std::vector<TraversalSnapshot> slide_turn_revolution(const ConvexBody& body, const PointedSupportingLine& start,
                                                     int samples, const Tolerance& tol) {
  if (samples < 4) throw PreconditionError("slide_turn: at least 4 direction samples required");
  const double nu0 = start.line.outward_normal_angle();
  if (std::abs(body.support(nu0) - dot(start.point, unit(nu0))) > tol.eps_geom ||
      std::abs(start.line.signed_distance(start.point)) > tol.eps_geom) {
    throw PreconditionError("start is not a pointed supporting line");
  }
  if (const auto* poly = std::get_if<PolygonShape>(&body.representation()); poly && poly->vertices.size() >= 3) {
    return polygon_revolution(*poly, start, samples, tol);
  }
  std::vector<TraversalSnapshot> out;
  out.reserve(samples);
  for (int j = 1; j < samples; ++j) {
    const double nu = nu0 + kTwoPi * j / samples;
    out.push_back({pointed(body.face(nu, tol.eps_geom).mid(), nu), TraversalStep::Turn, j});
  }
  out.push_back({start, TraversalStep::Turn, 0});
  return out;
}

PointedSupportingLine slide_turn(const ConvexBody& body, const PointedSupportingLine& start,
                                 const std::function<bool(const PointedSupportingLine&)>& stop, int samples,
                                 const Tolerance& tol) {
  for (const auto& snap : slide_turn_revolution(body, start, samples, tol)) {
    if (stop(snap.pointed)) return snap.pointed;
  }
  throw ExhaustedRevolutionError("slide_turn: predicate not satisfied within one revolution");
}

CommonTangentSet common_tangents(const ConvexBody& a, const ConvexBody& b, const TangentOptions& opts) {
  const int m = 4 * std::max(opts.samples, 16);
  const double step = kTwoPi / m;
  auto g = [&](double nu) { return a.support(nu) - b.support(nu); };
  std::vector<double> val(m);
  double scale = 0.0;
  for (int j = 0; j < m; ++j) {
    const double nu = step * j;
    const double ha = a.support(nu);
    const double hb = b.support(nu);
    val[j] = ha - hb;
    scale = std::max({scale, std::abs(ha), std::abs(hb)});
  }
  const double zero = 64 * std::numeric_limits<double>::epsilon() * (1.0 + scale);
  auto sign = [&](double x) { return x > zero ? 1 : (x < -zero ? -1 : 0); };
  std::vector<int> sg(m);
  for (int j = 0; j < m; ++j) sg[j] = sign(val[j]);

  CommonTangentSet out;
  const auto first_nonzero = std::find_if(sg.begin(), sg.end(), [](int s) { return s != 0; });
  if (first_nonzero == sg.end()) {
    out.coincident = true;
    return out;
  }
  const int j0 = static_cast<int>(first_nonzero - sg.begin());

  struct Root {
    double nu;
    bool grazing;
  };
  std::vector<Root> roots;
  auto bisect = [&](double lo, double hi, double glo) {
    return detail::bisect_root(g, lo, hi, glo, 200, 1e-15);
  };

  // Sign changes and zero runs, walking once around from a nonzero sample.
  int prev = j0;
  int kprev = 0;
  for (int k = 1; k <= m; ++k) {
    const int j = (j0 + k) % m;
    if (sg[j] == 0) continue;
    const double lo = step * prev;
    const double hi = lo + step * (k - kprev);
    const int run = k - kprev - 1;  // zero samples strictly between
    if (run == m - 1) {
      // Only one nonzero sample: everything else is a zero run.
      roots.push_back({lo + kPi, true});
    } else if (sg[j] != sg[prev]) {
      roots.push_back({bisect(lo, hi, val[prev]), run >= 2});
    } else if (run > 0) {
      roots.push_back({0.5 * (lo + hi), true});
    }
    prev = j;
    kprev = k;
  }

  // Near-double roots hiding between grid points.
  const double dip = opts.tol.eps_geom + 2.0 * scale * step;
  for (int j = 0; j < m; ++j) {
    const int jp = (j + m - 1) % m;
    const int jn = (j + 1) % m;
    const int s = sg[j];
    if (s == 0 || sg[jp] != s || sg[jn] != s) continue;
    const double aj = std::abs(val[j]);
    if (aj > dip || aj > std::abs(val[jp]) || aj > std::abs(val[jn])) continue;
    const double lo = step * (j - 1);
    const double hi = step * (j + 1);
    auto sgv = [&](double nu) { return s * g(nu); };
    const double mid = detail::golden_min(sgv, lo, hi, 120);
    const double gm = sgv(mid);
    if (gm < -zero) {
      roots.push_back({bisect(lo, mid, val[jp]), false});
      roots.push_back({bisect(mid, hi, g(mid)), false});
    } else if (gm <= opts.tol.eps_geom) {
      roots.push_back({mid, true});
    }
  }

  for (auto& r : roots) r.nu = wrap_angle(r.nu);
  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
    return direction_of_normal(x.nu) < direction_of_normal(y.nu);
  });
  for (const Root& r : roots) {
    if (!out.tangents.empty()) {
      const double prev_nu = out.tangents.back().line.outward_normal_angle();
      if (std::abs(angle_diff(prev_nu, r.nu)) < 1e-10) {
        out.tangents.back().grazing = out.tangents.back().grazing || r.grazing;
        continue;
      }
    }
    CommonTangent t;
    t.line = DirectedLine::from_normal(r.nu, 0.5 * (a.support(r.nu) + b.support(r.nu)));
    t.face_a = a.face(r.nu, opts.tol.eps_geom);
    t.face_b = b.face(r.nu, opts.tol.eps_geom);
    t.grazing = r.grazing;
    out.tangents.push_back(t);
  }
  if (out.tangents.size() >= 2) {
    const double d = angle_diff(out.tangents.front().line.outward_normal_angle(),
                                out.tangents.back().line.outward_normal_angle());
    if (std::abs(d) < 1e-10) {
      out.tangents.front().grazing = out.tangents.front().grazing || out.tangents.back().grazing;
      out.tangents.pop_back();
    }
  }
  return out;
}

TangentBetween common_tangent_between(const ConvexBody& body, const ConvexBody& other, Point p,
                                      std::optional<Angle> lo, std::optional<Angle> hi,
                                      const TangentOptions& opts) {
  const Tolerance& tol = opts.tol;
  const auto ck = body.normal_cone(p, tol.eps_geom);
  const auto co = other.normal_cone(p, tol.eps_geom);
  if (!ck || !co) throw PreconditionError("common_tangent_between: point is not on both boundaries");
  constexpr double smooth_eps = 1e-7;
  if (!ck->smooth(smooth_eps) || !co->smooth(smooth_eps)) {
    throw PreconditionError("common_tangent_between: a body has a corner at the point");
  }
  const Angle tk(direction_of_normal(ck->first + ck->width / 2));
  const Angle to(direction_of_normal(co->first + co->width / 2));
  const double alpha = tk.ccw_to(to);
  if (alpha <= tol.eps_angle || alpha >= kPi - tol.eps_angle) {
    throw PreconditionError("common_tangent_between: tangent gap " + std::to_string(alpha) +
                            " is outside (0, pi)");
  }
  const Angle from = lo.value_or(tk);
  const double span = from.ccw_to(hi.value_or(to));

  const auto set = common_tangents(body, other, opts);
  for (const auto& t : set.tangents) {
    if (t.grazing) continue;
    const double off = from.ccw_to(t.line.direction());
    if (off <= tol.eps_angle || off >= span - tol.eps_angle) continue;
    const Point dagger = t.face_b.first;
    const Point ddagger = t.face_a.last;
    if (t.line.coordinate(dagger) >= t.line.coordinate(ddagger) - tol.eps_geom) continue;
    if (point_margin(body, dagger) <= tol.eps_geom || point_margin(other, ddagger) <= tol.eps_geom) continue;
    return {t.line, dagger, ddagger};
  }
  throw ConstructionFailedError("common_tangent_between: no admissible common tangent found");
}

}  // namespace geom
