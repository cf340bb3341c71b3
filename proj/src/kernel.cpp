#include "geom/kernel.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "numeric.hpp"

namespace geom {

double support_value(const ConvexBody& body, Angle nu) { return body.support(nu.value()); }

Face face(const ConvexBody& body, Angle nu, double eps) { return body.face(nu.value(), eps); }

std::string to_string(ContainmentVerdict v) {
  switch (v) {
    case ContainmentVerdict::Contained: return "CONTAINED";
    case ContainmentVerdict::NotContained: return "NOT_CONTAINED";
    case ContainmentVerdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (Point p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Point p = pts[i];
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

ConvexBody hull_with_points(const ConvexBody& body, std::span<const Point> points) {
  if (points.empty()) return body;
  if (const auto* poly = std::get_if<PolygonShape>(&body.representation())) {
    std::vector<Point> all = poly->vertices;
    all.insert(all.end(), points.begin(), points.end());
    return ConvexBody::polygon(convex_hull(std::move(all)));
  }
  if (const auto* s = std::get_if<SampledShape>(&body.representation())) {
    std::vector<double> h = s->h;
    const std::size_t n = h.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point u = unit(kTwoPi * static_cast<double>(i) / static_cast<double>(n));
      for (Point p : points) h[i] = std::max(h[i], dot(p, u));
    }
    return ConvexBody::support_samples(std::move(h));
  }
  std::vector<Point> outside;
  for (Point p : points) {
    if (point_margin(body, p) > 0.0) outside.push_back(p);
  }
  if (outside.empty()) return body;
  return ConvexBody::hull_of(body, std::move(outside));
}

ConvexBody apply(const Similarity& phi, const ConvexBody& body) { return body.transformed(phi); }

Tolerance default_tolerance(const ConvexBody& body) {
  return body.sample_spacing() > 0.0 ? Tolerance::sampled() : Tolerance::analytic();
}

Tolerance default_tolerance(const ConvexBody& a, const ConvexBody& b) {
  return (a.sample_spacing() > 0.0 || b.sample_spacing() > 0.0) ? Tolerance::sampled()
                                                                 : Tolerance::analytic();
}

namespace {

struct GapSample {
  double nu;
  double g;
  Point a;  // support point of the outer body
  Point b;  // support point of the inner body
  double hb;
};

// Certified lower bound of h_outer - h_inner on [s0.nu, s1.nu]. The outer
// body contains the support points s0.a, s1.a; the inner body lies in the
// wedge of its two supporting lines, whose apex dominates h_inner on the
// interval.
double gap_lower_bound(const GapSample& s0, const GapSample& s1) {
  const Point u0 = unit(s0.nu);
  const Point u1 = unit(s1.nu);
  const Point d0 = perp(u0);
  const double den = dot(d0, u1);
  if (std::abs(den) < 1e-300) return std::min(s0.g, s1.g);
  const double t = (s1.hb - dot(s0.b, u1)) / den;
  const Point apex = s0.b + t * d0;
  const Point c0 = s0.a - apex;
  const Point c1 = s1.a - apex;
  auto f = [&](double nu) {
    const Point u = unit(nu);
    return std::max(dot(c0, u), dot(c1, u));
  };
  const double lo = s0.nu;
  const double hi = s1.nu;
  double best = std::min(f(lo), f(hi));
  auto consider = [&](double nu) {
    const double off = wrap_angle(nu - lo);
    if (off <= hi - lo) best = std::min(best, f(lo + off));
  };
  const Point diff = s0.a - s1.a;
  if (norm(diff) > 0.0) {
    consider(angle_of(diff) + kPi / 2);
    consider(angle_of(diff) - kPi / 2);
  }
  if (norm(c0) > 0.0) consider(angle_of(c0) + kPi);
  if (norm(c1) > 0.0) consider(angle_of(c1) + kPi);
  return best;
}

Containment sampled_contains(const ConvexBody& outer, const ConvexBody& inner, const Tolerance& tol) {
  std::vector<double> grid;
  auto add_grid = [&](int n) {
    for (int i = 0; i < n; ++i) grid.push_back(kTwoPi * i / n);
  };
  add_grid(1024);
  for (const ConvexBody* k : {&outer, &inner}) {
    const double sp = k->sample_spacing();
    if (sp > 0.0) add_grid(static_cast<int>(std::lround(kTwoPi / sp)));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  double min_g = std::numeric_limits<double>::infinity();
  double arg = 0.0;
  double max_step = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double nu = grid[i];
    const double g = outer.support(nu) - inner.support(nu);
    if (g < min_g) { min_g = g; arg = nu; }
    const double next = i + 1 < grid.size() ? grid[i + 1] : kTwoPi;
    max_step = std::max(max_step, next - nu);
  }
  double err = outer.support_error_bound() + inner.support_error_bound();
  // Exact parts vary Lipschitz-continuously between grid points.
  const Point c = outer.reference_center();
  if (outer.sample_spacing() == 0.0) err += outer.radius_about(c) * max_step / 2;
  if (inner.sample_spacing() == 0.0) err += inner.radius_about(c) * max_step / 2;
  Containment out;
  out.margin = min_g;
  out.witness_normal = arg;
  if (min_g < -tol.eps_geom) {
    out.verdict = ContainmentVerdict::NotContained;
  } else if (min_g - err >= -tol.eps_geom) {
    out.verdict = ContainmentVerdict::Contained;
  } else {
    out.verdict = ContainmentVerdict::Unknown;
  }
  return out;
}

}  // namespace

Containment contains(const ConvexBody& outer, const ConvexBody& inner, const Tolerance& tol) {
  if (outer.sample_spacing() > 0.0 || inner.sample_spacing() > 0.0) {
    return sampled_contains(outer, inner, tol);
  }
  auto eval = [&](double nu) {
    GapSample s;
    s.nu = nu;
    s.a = outer.support_point(nu);
    s.b = inner.support_point(nu);
    s.hb = inner.support(nu);
    s.g = outer.support(nu) - s.hb;
    return s;
  };
  auto gap = [&](double nu) { return outer.support(nu) - inner.support(nu); };

  constexpr int n0 = 1024;
  std::vector<GapSample> grid(n0 + 1);
  for (int i = 0; i < n0; ++i) grid[i] = eval(kTwoPi * i / n0);
  grid[n0] = grid[0];
  grid[n0].nu = kTwoPi;

  double best_g = std::numeric_limits<double>::infinity();
  double best_nu = 0.0;
  double best_width = kTwoPi / n0;
  auto note = [&](const GapSample& s, double width) {
    if (s.g < best_g) {
      best_g = s.g;
      best_nu = s.nu;
      best_width = width;
    }
  };
  for (int i = 0; i < n0; ++i) note(grid[i], kTwoPi / n0);

  bool uncertain = false;
  if (best_g >= -tol.eps_geom) {
    struct Interval {
      GapSample lo, hi;
    };
    std::vector<Interval> stack;
    for (int i = n0 - 1; i >= 0; --i) stack.push_back({grid[i], grid[i + 1]});
    while (!stack.empty()) {
      Interval iv = stack.back();
      stack.pop_back();
      if (gap_lower_bound(iv.lo, iv.hi) >= -tol.eps_geom) continue;
      const double width = iv.hi.nu - iv.lo.nu;
      if (width < 1e-11) {
        uncertain = true;
        continue;
      }
      GapSample mid = eval(0.5 * (iv.lo.nu + iv.hi.nu));
      note(mid, width / 2);
      if (mid.g < -tol.eps_geom) break;
      stack.push_back({mid, iv.hi});
      stack.push_back({iv.lo, mid});
    }
  }
  // Sharpen the extremal normal.
  const double refined = detail::golden_min(gap, best_nu - best_width, best_nu + best_width, 100);
  const double g_ref = gap(refined);
  if (g_ref < best_g) {
    best_g = g_ref;
    best_nu = refined;
  }
  Containment out;
  out.margin = best_g;
  out.witness_normal = wrap_angle(best_nu);
  if (best_g < -tol.eps_geom) {
    out.verdict = ContainmentVerdict::NotContained;
  } else {
    out.verdict = uncertain ? ContainmentVerdict::Unknown : ContainmentVerdict::Contained;
  }
  return out;
}

double point_margin(const ConvexBody& body, Point p) {
  auto f = [&](double nu) { return dot(p, unit(nu)) - body.support(nu); };
  constexpr int m = 720;
  const double step = kTwoPi / m;
  std::vector<double> v(m);
  for (int i = 0; i < m; ++i) v[i] = f(step * i);
  // Refine the three largest local maxima.
  std::vector<int> peaks;
  for (int i = 0; i < m; ++i) {
    if (v[i] >= v[(i + m - 1) % m] && v[i] >= v[(i + 1) % m]) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(), [&](int a, int b) { return v[a] > v[b]; });
  if (peaks.size() > 3) peaks.resize(3);
  double best = *std::max_element(v.begin(), v.end());
  for (int i : peaks) {
    const double nu = detail::golden_max(f, step * (i - 1), step * (i + 1), 100);
    best = std::max(best, f(nu));
  }
  return best;
}

double body_distance(const ConvexBody& a, const ConvexBody& b) {
  auto f = [&](double nu) { return std::abs(a.support(nu) - b.support(nu)); };
  constexpr int m = 4096;
  const double step = kTwoPi / m;
  std::vector<double> v(m);
  for (int i = 0; i < m; ++i) v[i] = f(step * i);
  std::vector<int> peaks;
  for (int i = 0; i < m; ++i) {
    if (v[i] >= v[(i + m - 1) % m] && v[i] >= v[(i + 1) % m]) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(), [&](int x, int y) { return v[x] > v[y]; });
  if (peaks.size() > 4) peaks.resize(4);
  double best = *std::max_element(v.begin(), v.end());
  for (int i : peaks) {
    const double nu = detail::golden_max(f, step * (i - 1), step * (i + 1), 100);
    best = std::max(best, f(nu));
  }
  return best;
}

}  // namespace geom
