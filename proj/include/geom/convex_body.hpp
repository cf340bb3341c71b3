#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "geom/primitives.hpp"
#include "geom/similarity.hpp"

namespace geom {

enum class AnalyticKind { Disk, Ellipse, Segment, ReuleauxTriangle, Stadium };

std::string to_string(AnalyticKind kind);

/// Closed-form shape in a local frame, placed by `pose`.
///   Disk:             p0 = radius
///   Ellipse:          p0 = semi-axis along x, p1 = semi-axis along y
///   Segment:          p0 = half length (local endpoints (-p0, 0), (p0, 0))
///   ReuleauxTriangle: p0 = width; one corner on the positive y-axis
///   Stadium:          p0 = half length of the core segment, p1 = radius
struct AnalyticShape {
  AnalyticKind kind = AnalyticKind::Disk;
  double p0 = 1.0;
  double p1 = 0.0;
  Similarity pose{};
};

struct PolygonShape {
  std::vector<Point> vertices;  // counterclockwise
};

/// Support values at outward normals 2*pi*i/n, linearly interpolated.
/// `vertices`/`edge_normals` describe the half-plane polygon cut out by the
/// sampled supporting lines, with coincident corners merged.
struct SampledShape {
  std::vector<double> h;
  double radius_bound = 0.0;
  std::vector<Point> vertices;
  std::vector<double> edge_normals;  // normal of edge vertices[k] -> vertices[k+1]
  std::vector<int> line_vertex;      // sample line i ends at vertices[line_vertex[i]]
};

class ConvexBody;

/// Convex hull of a body and finitely many points.
struct HullShape {
  std::shared_ptr<const ConvexBody> base;
  std::vector<Point> points;
};

/// Touch set of a supporting line, ordered along the line direction
/// (outward normal + pi/2). first == last for a single touch point.
struct Face {
  Point first{};
  Point last{};

  double length() const { return distance(first, last); }
  Point mid() const { return midpoint(first, last); }
};

/// Outward normals of all supporting lines through a boundary point:
/// the counterclockwise interval [first, first + width].
struct NormalCone {
  double first = 0.0;
  double width = 0.0;

  double last() const { return wrap_angle(first + width); }
  bool smooth(double eps_angle) const { return width <= eps_angle; }
};

/// A compact convex subset of the plane. Immutable value type.
class ConvexBody {
 public:
  using Representation = std::variant<AnalyticShape, PolygonShape, SampledShape, HullShape>;

  static ConvexBody disk(Point center, double radius);
  static ConvexBody ellipse(Point center, double a, double b, double angle = 0.0);
  static ConvexBody segment(Point from, Point to);
  static ConvexBody reuleaux(Point center, double width, double angle = 0.0);
  static ConvexBody stadium(Point center, double half_length, double radius, double angle = 0.0);
  static ConvexBody analytic(AnalyticShape shape);
  /// Throws InvalidBodyError unless the vertices are strictly counterclockwise
  /// and pairwise distinct. One or two vertices give a point or a segment.
  static ConvexBody polygon(std::vector<Point> vertices);
  /// Throws InvalidBodyError naming the first index that violates discrete convexity.
  static ConvexBody support_samples(std::vector<double> h);
  static ConvexBody hull_of(const ConvexBody& base, std::vector<Point> points);

  const Representation& representation() const { return rep_; }
  bool is_sampled() const { return std::holds_alternative<SampledShape>(rep_); }
  bool is_polygon() const { return std::holds_alternative<PolygonShape>(rep_); }
  bool is_analytic() const { return std::holds_alternative<AnalyticShape>(rep_); }
  std::optional<AnalyticKind> analytic_kind() const;
  std::string kind_name() const;

  bool has_interior() const;

  /// h(nu) = max over the body of <x, (cos nu, sin nu)>.
  double support(double nu) const;
  /// Points whose projection is within eps of h(nu), reduced to the extremes
  /// along the supporting line.
  Face face(double nu, double eps = 1e-9) const;
  Point support_point(double nu) const { return face(nu, 0.0).first; }

  /// Normal cone at p, or nullopt when p is not on the boundary within eps.
  /// Throws PreconditionError for relative-interior points of a degenerate body.
  std::optional<NormalCone> normal_cone(Point p, double eps) const;

  /// Upper bound on max |x - c| over the body.
  double radius_about(Point c) const;
  /// Center of the axis-aligned bounding box.
  Point reference_center() const;
  /// 2*pi/n for sampled bodies, 0 otherwise.
  double sample_spacing() const;
  /// Sup-norm certification bound on the interpolated support function.
  double support_error_bound() const;

  /// Boundary polyline for display, counterclockwise.
  std::vector<Point> outline(int n = 256) const;

  ConvexBody transformed(const Similarity& phi) const;

 private:
  explicit ConvexBody(Representation rep) : rep_(std::move(rep)) {}
  Representation rep_;
};

/// First index i with h[i-1] + h[i+1] < 2 h[i] cos(2pi/n) - tol, if any.
std::optional<std::size_t> discrete_convexity_violation(std::span<const double> h, double tol);

}  // namespace geom
