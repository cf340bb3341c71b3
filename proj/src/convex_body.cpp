#include "geom/convex_body.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "numeric.hpp"

namespace geom {

std::string to_string(AnalyticKind kind) {
  switch (kind) {
    case AnalyticKind::Disk: return "disk";
    case AnalyticKind::Ellipse: return "ellipse";
    case AnalyticKind::Segment: return "segment";
    case AnalyticKind::ReuleauxTriangle: return "reuleaux";
    case AnalyticKind::Stadium: return "stadium";
  }
  return "unknown";
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Face ordered_face(Point a, Point b, double nu) {
  const Point d = unit(direction_of_normal(nu));
  return dot(a, d) <= dot(b, d) ? Face{a, b} : Face{b, a};
}

// Extreme points of a finite candidate set along the direction of normal nu.
Face face_of_candidates(std::span<const Point> pts, double nu) {
  const Point d = unit(direction_of_normal(nu));
  Point lo = pts.front();
  Point hi = pts.front();
  double plo = dot(lo, d);
  double phi = plo;
  for (Point p : pts.subspan(1)) {
    const double s = dot(p, d);
    if (s < plo) { plo = s; lo = p; }
    if (s > phi) { phi = s; hi = p; }
  }
  return {lo, hi};
}

// ---- Reuleaux triangle (local frame) ----

struct Reuleaux {
  double w;
  Point v[3];

  explicit Reuleaux(double width) : w(width) {
    const double rho = width / std::sqrt(3.0);
    for (int k = 0; k < 3; ++k) v[k] = rho * unit(kPi / 2 + kTwoPi * k / 3.0);
  }
  // Normals of the arc centered at v[k] start here, width pi/3.
  double arc_start(int k) const { return angle_of(v[(k + 1) % 3] - v[k]); }
  // Normal cone at corner v[k] starts here, width pi/3.
  double corner_start(int k) const { return angle_of(v[k] - v[(k + 1) % 3]); }

  Point support_point(double nu) const {
    constexpr double tiny = 1e-12;
    for (int k = 0; k < 3; ++k) {
      const double t = wrap_angle(nu - arc_start(k));
      if (t <= kPi / 3 + tiny || t >= kTwoPi - tiny) return v[k] + w * unit(nu);
    }
    for (int k = 0; k < 3; ++k) {
      if (wrap_angle(nu - corner_start(k)) <= kPi / 3 + tiny) return v[k];
    }
    return v[0];
  }
};

double local_support(const AnalyticShape& s, double nu) {
  const double c = std::cos(nu);
  const double sn = std::sin(nu);
  switch (s.kind) {
    case AnalyticKind::Disk: return s.p0;
    case AnalyticKind::Ellipse: return std::sqrt(s.p0 * s.p0 * c * c + s.p1 * s.p1 * sn * sn);
    case AnalyticKind::Segment: return s.p0 * std::abs(c);
    case AnalyticKind::ReuleauxTriangle: return dot(Reuleaux(s.p0).support_point(nu), unit(nu));
    case AnalyticKind::Stadium: return s.p0 * std::abs(c) + s.p1;
  }
  return 0.0;
}

Face local_face(const AnalyticShape& s, double nu, double eps) {
  const Point u = unit(nu);
  switch (s.kind) {
    case AnalyticKind::Disk: {
      const Point p = s.p0 * u;
      return {p, p};
    }
    case AnalyticKind::Ellipse: {
      const double h = local_support(s, nu);
      if (h <= 0.0) return {};
      const Point p{s.p0 * s.p0 * u.x / h, s.p1 * s.p1 * u.y / h};
      return {p, p};
    }
    case AnalyticKind::Segment:
    case AnalyticKind::Stadium: {
      const Point a{-s.p0, 0.0};
      const Point b{s.p0, 0.0};
      const double pa = dot(a, u);
      const double pb = dot(b, u);
      const double shift_r = s.kind == AnalyticKind::Stadium ? s.p1 : 0.0;
      const Point off = shift_r * u;
      if (std::abs(pa - pb) <= eps) return ordered_face(a + off, b + off, nu);
      const Point p = (pa > pb ? a : b) + off;
      return {p, p};
    }
    case AnalyticKind::ReuleauxTriangle: {
      const Point p = Reuleaux(s.p0).support_point(nu);
      return {p, p};
    }
  }
  return {};
}

double local_radius(const AnalyticShape& s) {
  switch (s.kind) {
    case AnalyticKind::Disk: return s.p0;
    case AnalyticKind::Ellipse: return std::max(s.p0, s.p1);
    case AnalyticKind::Segment: return s.p0;
    case AnalyticKind::ReuleauxTriangle: return s.p0 / std::sqrt(3.0);
    case AnalyticKind::Stadium: return s.p0 + s.p1;
  }
  return 0.0;
}

// Cone of a polygon-like boundary given vertices and per-edge outward normals.
std::optional<NormalCone> polygon_cone(std::span<const Point> v, std::span<const double> edge_normal,
                                       Point p, double eps) {
  const std::size_t n = v.size();
  if (n == 1) {
    if (distance(p, v[0]) <= eps) return NormalCone{0.0, kTwoPi};
    return std::nullopt;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (distance(p, v[k]) <= eps) {
      const double a = edge_normal[(k + n - 1) % n];
      const double b = edge_normal[k];
      return NormalCone{a, wrap_angle(b - a)};
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Point a = v[k];
    const Point b = v[(k + 1) % n];
    const Point d = b - a;
    const double len2 = dot(d, d);
    const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
    if (distance(p, a + t * d) <= eps) {
      if (n == 2) {
        throw PreconditionError("point lies in the relative interior of a segment body");
      }
      return NormalCone{edge_normal[k], 0.0};
    }
  }
  return std::nullopt;
}

std::optional<NormalCone> local_cone(const AnalyticShape& s, Point p, double eps) {
  switch (s.kind) {
    case AnalyticKind::Disk:
      if (std::abs(norm(p) - s.p0) > eps) return std::nullopt;
      if (s.p0 == 0.0) return NormalCone{0.0, kTwoPi};
      return NormalCone{angle_of(p), 0.0};
    case AnalyticKind::Ellipse: {
      const double f = std::hypot(p.x / s.p0, p.y / s.p1);
      if (f == 0.0) return std::nullopt;
      const Point q = p / f;
      if (distance(p, q) > eps) return std::nullopt;
      return NormalCone{angle_of({q.x / (s.p0 * s.p0), q.y / (s.p1 * s.p1)}), 0.0};
    }
    case AnalyticKind::Segment: {
      if (s.p0 == 0.0) {
        if (norm(p) <= eps) return NormalCone{0.0, kTwoPi};
        return std::nullopt;
      }
      const Point v[2] = {{-s.p0, 0.0}, {s.p0, 0.0}};
      const double en[2] = {3 * kPi / 2, kPi / 2};
      return polygon_cone(v, en, p, eps);
    }
    case AnalyticKind::ReuleauxTriangle: {
      const Reuleaux r(s.p0);
      for (int k = 0; k < 3; ++k) {
        if (distance(p, r.v[k]) <= eps) return NormalCone{r.corner_start(k), kPi / 3};
      }
      for (int k = 0; k < 3; ++k) {
        const Point d = p - r.v[k];
        if (std::abs(norm(d) - r.w) > eps) continue;
        const double t = wrap_angle(angle_of(d) - r.arc_start(k));
        if (t <= kPi / 3 + 1e-9) return NormalCone{angle_of(d), 0.0};
      }
      return std::nullopt;
    }
    case AnalyticKind::Stadium: {
      const Point q{std::clamp(p.x, -s.p0, s.p0), 0.0};
      const Point d = p - q;
      if (std::abs(norm(d) - s.p1) > eps) return std::nullopt;
      return NormalCone{angle_of(d), 0.0};
    }
  }
  return std::nullopt;
}

// Numeric normal cone for representations without closed-form corners.
std::optional<NormalCone> numeric_cone(const ConvexBody& k, Point p, double eps) {
  auto gap = [&](double nu) { return k.support(nu) - dot(p, unit(nu)); };
  constexpr int m = 2048;
  const double step = kTwoPi / m;
  int best = 0;
  double gbest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i) {
    const double g = gap(step * i);
    if (g < gbest) { gbest = g; best = i; }
  }
  const double nu_star = detail::golden_min(gap, step * (best - 1), step * (best + 1), 80);
  const double gmin = gap(nu_star);
  if (std::abs(gmin) > eps) return std::nullopt;
  auto extent = [&](double sign) {
    double inside = 0.0;
    double outside = step;
    while (gap(nu_star + sign * outside) <= eps && outside < kPi) {
      inside = outside;
      outside *= 2.0;
    }
    if (outside >= kPi) return inside;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (inside + outside);
      (gap(nu_star + sign * mid) <= eps ? inside : outside) = mid;
    }
    return inside;
  };
  const double back = extent(-1.0);
  const double fwd = extent(1.0);
  const double width = back + fwd;
  if (width < 1e-6) return NormalCone{wrap_angle(nu_star), 0.0};
  return NormalCone{wrap_angle(nu_star - back), width};
}

SampledShape build_sampled(std::vector<double> h) {
  SampledShape s;
  const int n = static_cast<int>(h.size());
  const double step = kTwoPi / n;
  std::vector<Point> w(n);
  double scale = 0.0;
  for (double v : h) scale = std::max(scale, std::abs(v));
  for (int i = 0; i < n; ++i) {
    // Intersection of lines i and i+1, written relative to the support point
    // of line i so cancellation stays along the line direction.
    const double a = step * i;
    const double b = step * (i + 1);
    const Point ua = unit(a);
    const Point da = perp(ua);
    const Point base = h[i] * ua;
    const double t = (h[(i + 1) % n] - dot(base, unit(b))) / dot(da, unit(b));
    w[i] = base + t * da;
  }
  const double merge_tol = 1e-12 * (1.0 + scale);
  std::vector<int> group(n);
  std::vector<Point> verts;
  std::vector<int> first_line;
  for (int i = 0; i < n; ++i) {
    if (verts.empty() || distance(w[i], verts.back()) > merge_tol) {
      verts.push_back(w[i]);
      first_line.push_back(i);
    }
    group[i] = static_cast<int>(verts.size()) - 1;
  }
  if (verts.size() > 1 && distance(verts.back(), verts.front()) <= merge_tol) {
    const int last = static_cast<int>(verts.size()) - 1;
    for (int& g : group) if (g == last) g = 0;
    verts.pop_back();
    first_line.pop_back();
  }
  const std::size_t nv = verts.size();
  s.edge_normals.resize(nv);
  for (std::size_t k = 0; k < nv; ++k) {
    // Edge k -> k+1 lies on the line whose index is the first member of group k+1.
    const int line = first_line[(k + 1) % nv];
    s.edge_normals[k] = wrap_angle(step * line);
  }
  if (nv == 1) s.edge_normals[0] = 0.0;
  s.radius_bound = 0.0;
  for (Point v : verts) s.radius_bound = std::max(s.radius_bound, norm(v));
  s.vertices = std::move(verts);
  s.line_vertex = std::move(group);
  s.h = std::move(h);
  return s;
}

double sampled_support(const SampledShape& s, double nu) {
  const int n = static_cast<int>(s.h.size());
  const double x = wrap_angle(nu) / (kTwoPi / n);
  const int i = static_cast<int>(std::floor(x)) % n;
  const double f = x - std::floor(x);
  return (1.0 - f) * s.h[i] + f * s.h[(i + 1) % n];
}

Face sampled_face(const SampledShape& s, double nu) {
  const int n = static_cast<int>(s.h.size());
  const double x = wrap_angle(nu) / (kTwoPi / n);
  int i = static_cast<int>(std::floor(x)) % n;
  const double f = x - std::floor(x);
  constexpr double snap = 1e-9;
  auto vtx = [&](int line) { return s.vertices[s.line_vertex[(line % n + n) % n]]; };
  if (f <= snap || f >= 1.0 - snap) {
    if (f >= 1.0 - snap) i = (i + 1) % n;
    return ordered_face(vtx(i - 1), vtx(i), nu);
  }
  const Point p = vtx(i);
  return {p, p};
}

}  // namespace

// ---- construction ----

ConvexBody ConvexBody::disk(Point center, double radius) {
  if (!(radius >= 0.0)) throw InvalidBodyError("disk radius must be nonnegative");
  return analytic({AnalyticKind::Disk, radius, 0.0, Similarity::translate(center)});
}

ConvexBody ConvexBody::ellipse(Point center, double a, double b, double angle) {
  if (!(a > 0.0 && b > 0.0)) throw InvalidBodyError("ellipse semi-axes must be positive");
  Similarity pose = Similarity::rotate(angle);
  pose.translation = center;
  return analytic({AnalyticKind::Ellipse, a, b, pose});
}

ConvexBody ConvexBody::segment(Point from, Point to) {
  const Point d = to - from;
  Similarity pose = Similarity::rotate(norm(d) > 0 ? angle_of(d) : 0.0);
  pose.translation = midpoint(from, to);
  return analytic({AnalyticKind::Segment, 0.5 * norm(d), 0.0, pose});
}

ConvexBody ConvexBody::reuleaux(Point center, double width, double angle) {
  if (!(width > 0.0)) throw InvalidBodyError("Reuleaux width must be positive");
  Similarity pose = Similarity::rotate(angle);
  pose.translation = center;
  return analytic({AnalyticKind::ReuleauxTriangle, width, 0.0, pose});
}

ConvexBody ConvexBody::stadium(Point center, double half_length, double radius, double angle) {
  if (!(half_length >= 0.0 && radius > 0.0)) throw InvalidBodyError("invalid stadium parameters");
  Similarity pose = Similarity::rotate(angle);
  pose.translation = center;
  return analytic({AnalyticKind::Stadium, half_length, radius, pose});
}

ConvexBody ConvexBody::analytic(AnalyticShape shape) {
  if (!(shape.pose.scale > 0.0)) throw InvalidBodyError("pose scale must be positive");
  if (!std::isfinite(shape.p0) || !std::isfinite(shape.p1) || !is_finite(shape.pose.translation)) {
    throw InvalidBodyError("non-finite shape parameter");
  }
  return ConvexBody(shape);
}

ConvexBody ConvexBody::polygon(std::vector<Point> vertices) {
  if (vertices.empty()) throw InvalidBodyError("polygon needs at least one vertex");
  for (Point p : vertices) {
    if (!is_finite(p)) throw InvalidBodyError("polygon vertex is not finite");
  }
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (vertices[i] == vertices[j]) {
        throw InvalidBodyError("polygon has repeated vertex at index " + std::to_string(j));
      }
    }
  }
  if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = vertices[i];
      const Point b = vertices[(i + 1) % n];
      const Point c = vertices[(i + 2) % n];
      if (!(cross(b - a, c - b) > 0.0)) {
        throw InvalidBodyError("polygon is not strictly convex counterclockwise at index " +
                               std::to_string((i + 1) % n));
      }
    }
    // Winding number one: total turning equals 2pi.
    double turn = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = vertices[i];
      const Point b = vertices[(i + 1) % n];
      const Point c = vertices[(i + 2) % n];
      turn += std::atan2(cross(b - a, c - b), dot(b - a, c - b));
    }
    if (std::abs(turn - kTwoPi) > 1e-6) throw InvalidBodyError("polygon winds more than once");
  }
  return ConvexBody(PolygonShape{std::move(vertices)});
}

std::optional<std::size_t> discrete_convexity_violation(std::span<const double> h, double tol) {
  const std::size_t n = h.size();
  const double c = std::cos(kTwoPi / static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double prev = h[(i + n - 1) % n];
    const double next = h[(i + 1) % n];
    if (prev + next < 2.0 * h[i] * c - tol) return i;
  }
  return std::nullopt;
}

ConvexBody ConvexBody::support_samples(std::vector<double> h) {
  if (h.size() < 3) throw InvalidBodyError("support_samples needs at least 3 values");
  double scale = 0.0;
  for (double v : h) {
    if (!std::isfinite(v)) throw InvalidBodyError("support sample is not finite");
    scale = std::max(scale, std::abs(v));
  }
  if (auto bad = discrete_convexity_violation(h, 1e-9 * (1.0 + scale))) {
    throw InvalidBodyError("support samples violate discrete convexity at index " +
                           std::to_string(*bad));
  }
  return ConvexBody(build_sampled(std::move(h)));
}

ConvexBody ConvexBody::hull_of(const ConvexBody& base, std::vector<Point> points) {
  return ConvexBody(HullShape{std::make_shared<const ConvexBody>(base), std::move(points)});
}

// ---- queries ----

std::optional<AnalyticKind> ConvexBody::analytic_kind() const {
  if (const auto* a = std::get_if<AnalyticShape>(&rep_)) return a->kind;
  return std::nullopt;
}

std::string ConvexBody::kind_name() const {
  return std::visit(overloaded{
                        [](const AnalyticShape& a) { return to_string(a.kind); },
                        [](const PolygonShape&) { return std::string("polygon"); },
                        [](const SampledShape&) { return std::string("support_samples"); },
                        [](const HullShape&) { return std::string("hull"); },
                    },
                    rep_);
}

double ConvexBody::support(double nu) const {
  return std::visit(
      overloaded{
          [&](const AnalyticShape& a) {
            const double local = a.pose.unmap_angle(nu);
            return a.pose.scale * local_support(a, local) + dot(a.pose.translation, unit(nu));
          },
          [&](const PolygonShape& p) {
            const Point u = unit(nu);
            double best = -std::numeric_limits<double>::infinity();
            for (Point v : p.vertices) best = std::max(best, dot(v, u));
            return best;
          },
          [&](const SampledShape& s) { return sampled_support(s, nu); },
          [&](const HullShape& hs) {
            const Point u = unit(nu);
            double best = hs.base->support(nu);
            for (Point v : hs.points) best = std::max(best, dot(v, u));
            return best;
          },
      },
      rep_);
}

Face ConvexBody::face(double nu, double eps) const {
  return std::visit(
      overloaded{
          [&](const AnalyticShape& a) {
            const double local = a.pose.unmap_angle(nu);
            const Face lf = local_face(a, local, eps / a.pose.scale);
            return ordered_face(a.pose.apply(lf.first), a.pose.apply(lf.last), nu);
          },
          [&](const PolygonShape& p) {
            const Point u = unit(nu);
            double best = -std::numeric_limits<double>::infinity();
            for (Point v : p.vertices) best = std::max(best, dot(v, u));
            std::vector<Point> cand;
            for (Point v : p.vertices) {
              if (dot(v, u) >= best - eps) cand.push_back(v);
            }
            return face_of_candidates(cand, nu);
          },
          [&](const SampledShape& s) { return sampled_face(s, nu); },
          [&](const HullShape& hs) {
            const Point u = unit(nu);
            const double hb = hs.base->support(nu);
            double best = hb;
            for (Point v : hs.points) best = std::max(best, dot(v, u));
            std::vector<Point> cand;
            if (hb >= best - eps) {
              const Face f = hs.base->face(nu, eps);
              cand.push_back(f.first);
              cand.push_back(f.last);
            }
            for (Point v : hs.points) {
              if (dot(v, u) >= best - eps) cand.push_back(v);
            }
            return face_of_candidates(cand, nu);
          },
      },
      rep_);
}

std::optional<NormalCone> ConvexBody::normal_cone(Point p, double eps) const {
  return std::visit(
      overloaded{
          [&](const AnalyticShape& a) -> std::optional<NormalCone> {
            const Point local = a.pose.inverse().apply(p);
            auto c = local_cone(a, local, eps / a.pose.scale);
            if (!c) return std::nullopt;
            if (c->width >= kTwoPi) return c;
            if (!a.pose.reflect) return NormalCone{a.pose.map_angle(c->first), c->width};
            return NormalCone{a.pose.map_angle(c->first + c->width), c->width};
          },
          [&](const PolygonShape& poly) -> std::optional<NormalCone> {
            const std::size_t n = poly.vertices.size();
            std::vector<double> en(n, 0.0);
            for (std::size_t k = 0; k < n && n > 1; ++k) {
              en[k] = normal_of_direction(angle_of(poly.vertices[(k + 1) % n] - poly.vertices[k]));
            }
            return polygon_cone(poly.vertices, en, p, eps);
          },
          [&](const SampledShape& s) -> std::optional<NormalCone> {
            return polygon_cone(s.vertices, s.edge_normals, p, eps);
          },
          [&](const HullShape&) { return numeric_cone(*this, p, eps); },
      },
      rep_);
}

bool ConvexBody::has_interior() const {
  return std::visit(overloaded{
                        [](const AnalyticShape& a) {
                          switch (a.kind) {
                            case AnalyticKind::Disk: return a.p0 > 0.0;
                            case AnalyticKind::Segment: return false;
                            case AnalyticKind::Stadium: return a.p1 > 0.0;
                            default: return true;
                          }
                        },
                        [](const PolygonShape& p) { return p.vertices.size() >= 3; },
                        [](const SampledShape& s) { return s.vertices.size() >= 3; },
                        [this](const HullShape&) {
                          constexpr int m = 720;
                          for (int i = 0; i < m; ++i) {
                            const double nu = kPi * i / m;
                            if (support(nu) + support(nu + kPi) <= 1e-12) return false;
                          }
                          return true;
                        },
                    },
                    rep_);
}

double ConvexBody::radius_about(Point c) const {
  return std::visit(overloaded{
                        [&](const AnalyticShape& a) {
                          return a.pose.scale * local_radius(a) + distance(a.pose.translation, c);
                        },
                        [&](const PolygonShape& p) {
                          double r = 0.0;
                          for (Point v : p.vertices) r = std::max(r, distance(v, c));
                          return r;
                        },
                        [&](const SampledShape& s) { return s.radius_bound + norm(c); },
                        [&](const HullShape& hs) {
                          double r = hs.base->radius_about(c);
                          for (Point v : hs.points) r = std::max(r, distance(v, c));
                          return r;
                        },
                    },
                    rep_);
}

Point ConvexBody::reference_center() const {
  return {0.5 * (support(0.0) - support(kPi)), 0.5 * (support(kPi / 2) - support(3 * kPi / 2))};
}

double ConvexBody::sample_spacing() const {
  if (const auto* s = std::get_if<SampledShape>(&rep_)) return kTwoPi / static_cast<double>(s->h.size());
  if (const auto* hs = std::get_if<HullShape>(&rep_)) return hs->base->sample_spacing();
  return 0.0;
}

double ConvexBody::support_error_bound() const {
  if (const auto* s = std::get_if<SampledShape>(&rep_)) {
    return s->radius_bound * (kTwoPi / static_cast<double>(s->h.size()));
  }
  if (const auto* hs = std::get_if<HullShape>(&rep_)) return hs->base->support_error_bound();
  return 0.0;
}

std::vector<Point> ConvexBody::outline(int n) const {
  if (const auto* p = std::get_if<PolygonShape>(&rep_)) return p->vertices;
  if (const auto* s = std::get_if<SampledShape>(&rep_)) return s->vertices;
  std::vector<Point> out;
  const double tol = 1e-12 * (1.0 + radius_about({0, 0}));
  auto push = [&](Point q) {
    if (out.empty() || distance(out.back(), q) > tol) out.push_back(q);
  };
  for (int i = 0; i < n; ++i) {
    const Face f = face(kTwoPi * i / n, 1e-9);
    push(f.first);
    push(f.last);
  }
  while (out.size() > 1 && distance(out.back(), out.front()) <= tol) out.pop_back();
  return out;
}

ConvexBody ConvexBody::transformed(const Similarity& phi) const {
  return std::visit(
      overloaded{
          [&](const AnalyticShape& a) {
            AnalyticShape b = a;
            b.pose = phi.compose(a.pose);
            return ConvexBody(b);
          },
          [&](const PolygonShape& p) {
            std::vector<Point> v;
            v.reserve(p.vertices.size());
            for (Point q : p.vertices) v.push_back(phi.apply(q));
            if (phi.reflect) std::reverse(v.begin(), v.end());
            return ConvexBody(PolygonShape{std::move(v)});
          },
          [&](const SampledShape& s) {
            const std::size_t n = s.h.size();
            std::vector<double> h(n);
            for (std::size_t j = 0; j < n; ++j) {
              const double nu = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
              h[j] = phi.scale * sampled_support(s, phi.unmap_angle(nu)) + dot(phi.translation, unit(nu));
            }
            return ConvexBody(build_sampled(std::move(h)));
          },
          [&](const HullShape& hs) {
            std::vector<Point> pts;
            for (Point q : hs.points) pts.push_back(phi.apply(q));
            return hull_of(hs.base->transformed(phi), std::move(pts));
          },
      },
      rep_);
}

}  // namespace geom
