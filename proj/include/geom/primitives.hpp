#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace geom {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduce an angle to [0, 2pi).
inline double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

/// Signed angular difference b - a reduced to (-pi, pi].
inline double angle_diff(double a, double b) {
  double d = wrap_angle(b - a);
  return d > kPi ? d - kTwoPi : d;
}

/// A direction on the unit circle, stored as an angle in [0, 2pi).
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : value_(wrap_angle(radians)) {}

  double value() const { return value_; }

  Angle operator+(double d) const { return Angle(value_ + d); }
  Angle operator-(double d) const { return Angle(value_ - d); }

  /// Counterclockwise angle from this direction to `other`, in [0, 2pi).
  double ccw_to(Angle other) const { return wrap_angle(other.value_ - value_); }

  friend bool operator==(Angle a, Angle b) { return a.value_ == b.value_; }

 private:
  double value_ = 0.0;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point& operator+=(Point o) { x += o.x; y += o.y; return *this; }
  Point& operator-=(Point o) { x -= o.x; y -= o.y; return *this; }
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator-(Point a) { return {-a.x, -a.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
  friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
inline Point unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline Point perp(Point a) { return {-a.y, a.x}; }  // rotate by +pi/2
inline double angle_of(Point a) { return wrap_angle(std::atan2(a.y, a.x)); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Outward normal of a supporting line with direction theta (body on the left).
inline double normal_of_direction(double theta) { return wrap_angle(theta - kPi / 2); }
/// Direction of the supporting line whose outward normal is nu.
inline double direction_of_normal(double nu) { return wrap_angle(nu + kPi / 2); }

struct Tolerance {
  double eps_geom = 1e-9;
  double eps_angle = 1e-9;

  static Tolerance analytic() { return {1e-9, 1e-9}; }
  static Tolerance sampled() { return {1e-6, 1e-9}; }
};

/// Oriented line. The body-on-left half-plane is {x : <x, n> >= <anchor, n>}
/// with n the left normal, equivalently {x : <x, u(nu)> <= offset()}.
class DirectedLine {
 public:
  DirectedLine() = default;
  DirectedLine(Point anchor, Angle direction) : anchor_(anchor), direction_(direction) {}

  /// The line of direction theta at signed offset c along its outward normal.
  static DirectedLine from_normal(double nu, double offset) {
    return DirectedLine(offset * unit(nu), Angle(direction_of_normal(nu)));
  }
  static DirectedLine through(Point a, Point b) { return DirectedLine(a, Angle(angle_of(b - a))); }

  Point anchor() const { return anchor_; }
  Angle direction() const { return direction_; }
  Point direction_vector() const { return unit(direction_.value()); }
  Point left_normal() const { return perp(direction_vector()); }
  double outward_normal_angle() const { return normal_of_direction(direction_.value()); }
  Point outward_normal() const { return -left_normal(); }
  double offset() const { return dot(anchor_, outward_normal()); }

  /// Positive on the left (body side), negative on the right.
  double signed_distance(Point p) const { return dot(p - anchor_, left_normal()); }
  /// Coordinate of p along the line direction.
  double coordinate(Point p) const { return dot(p, direction_vector()); }
  Point at(double s) const { return anchor_ + s * direction_vector(); }

  bool approx_equal(const DirectedLine& o, double eps_geom, double eps_angle) const {
    return std::abs(angle_diff(direction_.value(), o.direction_.value())) <= eps_angle &&
           std::abs(offset() - o.offset()) <= eps_geom;
  }

 private:
  Point anchor_{};
  Angle direction_{};
};

/// Intersection of two non-parallel lines.
inline Point intersect(const DirectedLine& a, const DirectedLine& b) {
  const Point da = a.direction_vector();
  const Point db = b.direction_vector();
  const double den = cross(da, db);
  if (std::abs(den) < 1e-300) throw std::domain_error("intersect: parallel lines");
  const double s = cross(b.anchor() - a.anchor(), db) / den;
  return a.at(s);
}

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
/// A point expected on the boundary is not.
class BoundaryMembershipError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};
/// A line expected to pass through the interior does not.
class NotASecantError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};
class ExhaustedRevolutionError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};
class PreconditionError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};
class ConstructionFailedError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};
class InvalidBodyError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

}  // namespace geom
