#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "geom/convex_body.hpp"

namespace geom {

struct PointedSupportingLine {
  Point point;
  DirectedLine line;
};

/// Extreme supporting lines through a boundary point under counterclockwise rotation.
struct SemitangentPair {
  DirectedLine first;
  DirectedLine last;

  /// Counterclockwise angle from first to last direction.
  double gap() const { return first.direction().ccw_to(last.direction()); }
};

/// The unique supporting line of direction theta with the body on its left.
DirectedLine supporting_line(const ConvexBody& body, Angle theta);

/// Throws BoundaryMembershipError when p is not on the boundary.
SemitangentPair semitangents(const ConvexBody& body, Point p, const Tolerance& tol = {});

/// True when the line passes through an interior point of the body.
bool is_secant(const ConvexBody& body, const DirectedLine& line, const Tolerance& tol = {});

/// Boundary intersections (X, Y) of a secant, labeled so that the
/// counterclockwise boundary arc from X to Y lies on the right of the line.
/// Throws NotASecantError.
std::pair<Point, Point> secant_boundary_points(const ConvexBody& body, const DirectedLine& line,
                                               const Tolerance& tol = {});

struct ParallelSupport {
  Point last_point;     // last touch point along the direction
  DirectedLine line;    // supporting line of the same direction
};

/// Supporting line of the same direction as a secant, on its right side,
/// with its last touch point. Throws NotASecantError.
ParallelSupport parallel_support_beyond_secant(const ConvexBody& body, const DirectedLine& secant,
                                               const Tolerance& tol = {});

enum class TraversalStep { Slide, Turn };

struct TraversalSnapshot {
  PointedSupportingLine pointed;
  TraversalStep step = TraversalStep::Turn;
  /// Polygons: edge index for slides, vertex index for turns. Otherwise the
  /// direction step index.
  int feature = 0;
};

/// One forward revolution of pointed supporting lines starting after `start`
/// and ending exactly at `start`. Polygons move through exact edge/corner
/// events; other bodies step the direction by 2pi/samples and use face midpoints.
std::vector<TraversalSnapshot> slide_turn_revolution(const ConvexBody& body,
                                                     const PointedSupportingLine& start,
                                                     int samples = 4096, const Tolerance& tol = {});

/// First snapshot of the forward traversal satisfying `stop`. Throws
/// ExhaustedRevolutionError after a full revolution without a hit.
PointedSupportingLine slide_turn(const ConvexBody& body, const PointedSupportingLine& start,
                                 const std::function<bool(const PointedSupportingLine&)>& stop,
                                 int samples = 4096, const Tolerance& tol = {});

struct CommonTangent {
  DirectedLine line;
  Face face_a;
  Face face_b;
  /// Double root of the support difference: touching, not crossing.
  bool grazing = false;
};

struct TangentOptions {
  int samples = 4096;  // the direction grid has 4 * samples brackets
  Tolerance tol{};
};

struct CommonTangentSet {
  std::vector<CommonTangent> tangents;  // sorted by direction
  /// Support functions agree everywhere on the grid (identical bodies).
  bool coincident = false;
};

/// All directed lines supporting both bodies with both on the left.
CommonTangentSet common_tangents(const ConvexBody& a, const ConvexBody& b, const TangentOptions& opts = {});

struct TangentBetween {
  DirectedLine line;
  Point first_on_other;  // first point of line ∩ other
  Point last_on_body;    // last point of line ∩ body
};

/// Common tangent with direction strictly between the tangent lines of
/// `body` and `other` at their common boundary point p. Both bodies must be
/// smooth at p with the counterclockwise gap between tangents in (0, pi);
/// otherwise PreconditionError.
TangentBetween common_tangent_between(const ConvexBody& body, const ConvexBody& other, Point p,
                                      std::optional<Angle> lo = std::nullopt,
                                      std::optional<Angle> hi = std::nullopt,
                                      const TangentOptions& opts = {});

}  // namespace geom
