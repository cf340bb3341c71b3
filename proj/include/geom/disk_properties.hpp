#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geom/kernel.hpp"

namespace geom {

/// Boundary points P1, P2 such that the lines through them perpendicular to
/// [P1, P2] both support the body.
struct Diagonal {
  Point p1{};
  Point p2{};

  Point mid() const { return midpoint(p1, p2); }
  double length() const { return distance(p1, p2); }
};

enum class PropertyVerdict { Pass, Fail, Unknown };
std::string to_string(PropertyVerdict v);

struct PropertyWitness {
  /// Direction of the probed supporting lines, when the check is directional.
  std::optional<double> direction;
  /// Outward normal of the offending face or supporting line.
  std::optional<double> normal;
  /// Offending points. For central symmetry the first point is the candidate center.
  std::vector<Point> points;
};

struct PropertyReport {
  std::string id;
  std::string name;
  PropertyVerdict verdict = PropertyVerdict::Unknown;
  PropertyWitness witness;
  /// Size of the worst violation found (the worst deviation on PASS).
  double magnitude = 0.0;
  std::string details;

  bool failed() const { return verdict == PropertyVerdict::Fail; }
};

/// Supporting lines of direction theta and theta + pi: the chord between the
/// midpoints of their faces must be perpendicular to them.
PropertyReport check_perpendicularly_opposed(const ConvexBody& k, double theta, const Tolerance& tol = {});

/// The two faces of direction theta and theta + pi have equal length.
PropertyReport check_chord_equality(const ConvexBody& k, double theta, const Tolerance& tol = {});

/// Reports the corner with the widest normal cone.
PropertyReport check_smoothness(const ConvexBody& k, const Tolerance& tol = {});

/// Reports the longest face.
PropertyReport check_strict_convexity(const ConvexBody& k, const Tolerance& tol = {});

/// Diagonal starting at the support point of outward normal nu, or nullopt
/// when the far end of the inward normal chord is not a support point of
/// the opposite normal.
std::optional<Diagonal> diagonal_at_normal(const ConvexBody& k, double nu, const Tolerance& tol = {});

/// Diagonal with endpoint p. Throws PreconditionError when p is not on the
/// boundary; returns nullopt at corners or when no diagonal starts at p.
std::optional<Diagonal> opposite_point(const ConvexBody& k, Point p, const Tolerance& tol = {});

/// Perpendicular diagonals at sampled normals halve each other.
PropertyReport check_perpendicular_diagonals_bisect(const ConvexBody& k, const Tolerance& tol = {},
                                                    int samples = 64);

/// Hausdorff distance between the body and its mirror image in the diagonal.
PropertyReport check_diagonal_symmetry(const ConvexBody& k, const Diagonal& d, const Tolerance& tol = {});

/// Point reflection in the intersection O of two perpendicular diagonals.
/// witness.points[0] holds O whenever a perpendicular pair was found.
PropertyReport check_central_symmetry(const ConvexBody& k, const Tolerance& tol = {}, int samples = 64);

/// Every diagonal at sampled normals passes through o.
PropertyReport check_diagonals_through_center(const ConvexBody& k, Point o, const Tolerance& tol = {},
                                              int samples = 128);

/// Tangents are perpendicular to radii from o and the distance from o to the
/// boundary is constant.
PropertyReport check_radial_perpendicularity(const ConvexBody& k, Point o, const Tolerance& tol = {},
                                             int samples = 1024);

/// |p' + x / p| for a boundary written as y = p(x) around the origin; zero
/// exactly when the tangent is perpendicular to the radius.
double radial_ode_residual(double x, double p, double slope);

/// Probe directions for the two directional checks in the ladder.
inline const std::vector<double>& ladder_probe_directions() {
  static const std::vector<double> dirs = {0.0, kPi / 4, kPi / 2, 3 * kPi / 4};
  return dirs;
}

/// Runs the checks (9), (10), (11), (13), (21), (23), (24), (25), (28) in
/// order. Checks whose prerequisites failed are reported UNKNOWN.
std::vector<PropertyReport> property_ladder(const ConvexBody& k, const Tolerance& tol = {});

/// First failing report, if any.
const PropertyReport* first_failure(const std::vector<PropertyReport>& reports);

}  // namespace geom
