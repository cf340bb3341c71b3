#include "geom/similarity.hpp"

namespace geom {

Similarity Similarity::rotate_about(Point c, double angle) {
  Similarity r = rotate(angle);
  r.translation = c - r.apply_vector(c);
  return r;
}

Similarity Similarity::reflect_across_line(Point p, double direction) {
  Similarity r{Angle(2.0 * direction), true, 1.0, {}};
  r.translation = p - r.apply_vector(p);
  return r;
}

Similarity Similarity::point_reflection(Point center) { return rotate_about(center, kPi); }

Similarity Similarity::isometry_about(Point center, double angle, bool reflect, Point shift) {
  Similarity r{Angle(angle), reflect, 1.0, {}};
  r.translation = center + shift - r.apply_vector(center);
  return r;
}

Point Similarity::apply_vector(Point v) const {
  if (reflect) v.y = -v.y;
  const double c = std::cos(rotation.value());
  const double s = std::sin(rotation.value());
  return {scale * (c * v.x - s * v.y), scale * (s * v.x + c * v.y)};
}

Point Similarity::apply(Point p) const { return apply_vector(p) + translation; }

Similarity Similarity::inverse() const {
  // (s R F)^-1 = F R^-1 / s; for reflections F R(-a) = R(a) F.
  Similarity inv;
  inv.reflect = reflect;
  inv.scale = 1.0 / scale;
  inv.rotation = reflect ? rotation : Angle(-rotation.value());
  inv.translation = -inv.apply_vector(translation);
  return inv;
}

Similarity Similarity::compose(const Similarity& inner) const {
  // R1 F1 R2 F2 = R1 R(+-a2) F1 F2
  Similarity out;
  out.scale = scale * inner.scale;
  out.reflect = reflect != inner.reflect;
  const double a2 = reflect ? -inner.rotation.value() : inner.rotation.value();
  out.rotation = Angle(rotation.value() + a2);
  out.translation = apply(inner.translation);
  return out;
}

}  // namespace geom
