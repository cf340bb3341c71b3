#pragma once

// Brute-force references built from explicit boundary parametrizations,
// independent of the library's support formulas.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "geom/primitives.hpp"

namespace oracle {

using geom::Point;
using geom::kPi;
using geom::kTwoPi;
using geom::DirectedLine;

inline Point rot(Point p, double a) {
  const double c = std::cos(a), s = std::sin(a);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

inline std::vector<Point> disk_points(Point c, double r, int n = 20000) {
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    out.push_back({c.x + r * std::cos(t), c.y + r * std::sin(t)});
  }
  return out;
}

inline std::vector<Point> ellipse_points(Point c, double a, double b, double angle, int n = 20000) {
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    out.push_back(c + rot({a * std::cos(t), b * std::sin(t)}, angle));
  }
  return out;
}

/// Reuleaux triangle as three circular arcs of radius w around the corners.
inline std::vector<Point> reuleaux_points(Point c, double w, double angle, int per_arc = 7000) {
  const double rho = w / std::sqrt(3.0);
  Point v[3];
  for (int k = 0; k < 3; ++k) {
    const double a = kPi / 2 + kTwoPi * k / 3;
    v[k] = {rho * std::cos(a), rho * std::sin(a)};
  }
  std::vector<Point> out;
  for (int k = 0; k < 3; ++k) {
    // Arc opposite to corner k, centered at corner k.
    const Point p = v[(k + 1) % 3] - v[k];
    const Point q = v[(k + 2) % 3] - v[k];
    const double a0 = std::atan2(p.y, p.x);
    double a1 = std::atan2(q.y, q.x);
    while (a1 < a0) a1 += kTwoPi;
    for (int i = 0; i <= per_arc; ++i) {
      const double t = a0 + (a1 - a0) * i / per_arc;
      out.push_back(c + rot(v[k] + Point{w * std::cos(t), w * std::sin(t)}, angle));
    }
  }
  return out;
}

inline double support(const std::vector<Point>& pts, double nu) {
  const Point u{std::cos(nu), std::sin(nu)};
  double best = -std::numeric_limits<double>::infinity();
  for (Point p : pts) best = std::max(best, geom::dot(p, u));
  return best;
}

/// Inner polygon ⊆ outer polygon (both counterclockwise) by vertex tests.
inline bool polygon_contains(const std::vector<Point>& outer, const std::vector<Point>& inner, double eps) {
  const std::size_t n = outer.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = outer[i], b = outer[(i + 1) % n];
    const Point d = (b - a) * (1.0 / geom::norm(b - a));
    for (Point p : inner) {
      if (geom::cross(d, p - a) < -eps) return false;
    }
  }
  return true;
}

/// Distance from p to a segment.
inline double segment_distance(Point p, Point a, Point b) {
  const Point d = b - a;
  const double t = std::clamp(geom::dot(p - a, d) / geom::dot(d, d), 0.0, 1.0);
  return geom::distance(p, a + t * d);
}

/// Signed distance to a counterclockwise polygon: positive outside.
inline double polygon_signed_distance(const std::vector<Point>& poly, Point p) {
  const std::size_t n = poly.size();
  double dmin = std::numeric_limits<double>::infinity();
  bool inside = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly[i], b = poly[(i + 1) % n];
    dmin = std::min(dmin, segment_distance(p, a, b));
    if (geom::cross(b - a, p - a) < 0) inside = false;
  }
  return inside ? -dmin : dmin;
}

/// Random convex polygon: sorted angles on a jittered circle.
inline std::vector<Point> random_convex_polygon(std::mt19937_64& rng, int n, Point c, double r) {
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  std::vector<double> a(n);
  for (double& x : a) x = ang(rng);
  std::sort(a.begin(), a.end());
  std::vector<Point> out;
  for (double t : a) out.push_back({c.x + r * std::cos(t), c.y + r * std::sin(t)});
  return out;
}

// Boundary of the polar curve r(a) = 1 + eps * cos(a), convex for eps <= 1/2.
inline std::vector<Point> egg_points(double eps, int n = 20000) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double a = kTwoPi * i / n;
    const double r = 1.0 + eps * std::cos(a);
    out.push_back({r * std::cos(a), r * std::sin(a)});
  }
  return out;
}

// Support values of a point cloud at n equally spaced normals.
inline std::vector<double> support_samples(const std::vector<Point>& pts, int n) {
  std::vector<double> h(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) h[static_cast<std::size_t>(i)] = support(pts, kTwoPi * i / n);
  return h;
}

// Directions of all lines through two vertices that support both polygons.
inline std::vector<double> vertex_pair_tangent_directions(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<double> dirs;
  auto supports = [](const DirectedLine& l, const std::vector<Point>& poly) {
    double lo = std::numeric_limits<double>::infinity();
    for (Point p : poly) lo = std::min(lo, l.signed_distance(p));
    return std::abs(lo) <= 1e-9;
  };
  for (Point p : a) {
    for (Point q : b) {
      if (geom::distance(p, q) < 1e-12) continue;
      for (const auto& l : {DirectedLine::through(p, q), DirectedLine::through(q, p)}) {
        if (supports(l, a) && supports(l, b)) {
          const double d = l.direction().value();
          bool dup = false;
          for (double e : dirs) dup = dup || std::abs(geom::angle_diff(d, e)) <= 1e-9;
          if (!dup) dirs.push_back(d);
        }
      }
    }
  }
  std::sort(dirs.begin(), dirs.end());
  return dirs;
}

}  // namespace oracle
