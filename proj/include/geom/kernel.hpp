#pragma once

#include <optional>
#include <span>

#include "geom/convex_body.hpp"

namespace geom {

double support_value(const ConvexBody& body, Angle nu);
Face face(const ConvexBody& body, Angle nu, double eps = 1e-9);

/// Convex hull of the body and the points. Polygon inputs stay polygons,
/// sampled inputs stay sampled; anything else becomes a hull representation.
ConvexBody hull_with_points(const ConvexBody& body, std::span<const Point> points);

ConvexBody apply(const Similarity& phi, const ConvexBody& body);

enum class ContainmentVerdict { Contained, NotContained, Unknown };
std::string to_string(ContainmentVerdict v);

struct Containment {
  ContainmentVerdict verdict = ContainmentVerdict::Unknown;
  /// min over normals of h_outer - h_inner; negative means a violation.
  double margin = 0.0;
  /// Normal attaining the margin (a separating normal when not contained).
  double witness_normal = 0.0;
};

/// Decides inner ⊆ outer through h_inner <= h_outer + eps_geom.
Containment contains(const ConvexBody& outer, const ConvexBody& inner, const Tolerance& tol);

/// max over normals of <p, u> - h(u): the distance to the body for outside
/// points, minus the distance to the boundary for inside points.
double point_margin(const ConvexBody& body, Point p);

/// sup over normals of |h_a - h_b| (the Hausdorff distance).
double body_distance(const ConvexBody& a, const ConvexBody& b);

/// Tolerance defaults for a body: looser for sampled representations.
Tolerance default_tolerance(const ConvexBody& body);
Tolerance default_tolerance(const ConvexBody& a, const ConvexBody& b);

/// Strictly convex counterclockwise hull (Andrew's monotone chain).
std::vector<Point> convex_hull(std::vector<Point> pts);

}  // namespace geom
