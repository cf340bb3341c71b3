#pragma once

#include "geom/primitives.hpp"

namespace geom {

/// x -> scale * R(rotation) * F * x + translation, where F reflects across
/// the x-axis when `reflect` is set.
struct Similarity {
  Angle rotation{};
  bool reflect = false;
  double scale = 1.0;
  Point translation{};

  static Similarity identity() { return {}; }
  static Similarity translate(Point t) { return {Angle(0.0), false, 1.0, t}; }
  static Similarity rotate(double angle) { return {Angle(angle), false, 1.0, {}}; }
  static Similarity rotate_about(Point c, double angle);
  static Similarity reflect_across_line(Point p, double direction);
  static Similarity point_reflection(Point center);
  /// Rotation/reflection about `center` followed by a translation.
  static Similarity isometry_about(Point center, double angle, bool reflect, Point shift);

  bool is_isometry(double eps = 1e-12) const { return std::abs(scale - 1.0) <= eps; }

  Point apply(Point p) const;
  /// Linear part only (no translation).
  Point apply_vector(Point v) const;
  /// Image of a direction angle under the linear part.
  double map_angle(double a) const {
    return wrap_angle(rotation.value() + (reflect ? -a : a));
  }
  /// Preimage of a direction angle under the linear part.
  double unmap_angle(double a) const {
    const double r = a - rotation.value();
    return wrap_angle(reflect ? -r : r);
  }

  Similarity inverse() const;
  /// (*this) after `inner`: x -> this(inner(x)).
  Similarity compose(const Similarity& inner) const;
};

}  // namespace geom
