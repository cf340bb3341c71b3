#include "geom/carousel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace geom {

Triangle Triangle::make(Point a0, Point a1, Point a2) {
  const double c = cross(a1 - a0, a2 - a0);
  const double scale = std::max({norm(a1 - a0), norm(a2 - a0), 1e-300});
  if (std::abs(c) <= 1e-14 * scale * scale) throw PreconditionError("triangle vertices are collinear");
  if (c < 0) std::swap(a1, a2);
  return {a0, a1, a2};
}

ConvexBody Triangle::body() const { return ConvexBody::polygon({a0, a1, a2}); }

std::string to_string(CarouselResult r) {
  switch (r) {
    case CarouselResult::Sat: return "SAT";
    case CarouselResult::Unsat: return "UNSAT";
    case CarouselResult::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

CarouselVerdict carousel_check(const ConvexBody& k0, const ConvexBody& k1, const Triangle& t, const Tolerance& tol) {
  const ConvexBody tri = t.body();
  const ConvexBody* bodies[2] = {&k0, &k1};
  bool unknown = false;
  for (int k = 0; k < 2; ++k) {
    const auto c = contains(tri, *bodies[k], tol);
    if (c.verdict == ContainmentVerdict::NotContained) {
      throw PreconditionError("body K" + std::to_string(k) + " is not contained in the triangle");
    }
    unknown = unknown || c.verdict == ContainmentVerdict::Unknown;
  }
  CarouselVerdict v;
  const auto verts = t.vertices();
  for (int j = 0; j < 3; ++j) {
    const Point others[2] = {verts[(j + 1) % 3], verts[(j + 2) % 3]};
    for (int k = 0; k < 2; ++k) {
      const ConvexBody hull = hull_with_points(*bodies[k], others);
      const auto c = contains(hull, *bodies[1 - k], tol);
      const int i = CarouselVerdict::index(j, k);
      v.margins[i] = c.margin;
      v.normals[i] = c.witness_normal;
      v.verdicts[i] = c.verdict;
      if (c.verdict == ContainmentVerdict::Contained && v.j < 0) {
        v.j = j;
        v.k = k;
      }
      unknown = unknown || c.verdict == ContainmentVerdict::Unknown;
    }
  }
  if (v.j >= 0) {
    v.result = CarouselResult::Sat;
  } else {
    v.result = unknown ? CarouselResult::Unknown : CarouselResult::Unsat;
  }
  return v;
}

CarouselInstance segment_counterexample() {
  // Regular triangle of circumradius 1; the two unit-length segments were
  // found by a pose search and frozen here.
  const double s = std::sqrt(3.0) / 2;
  const Triangle t = Triangle::make({0, 1}, {-s, -0.5}, {s, -0.5});
  const Point c0{0.15, 0.21};
  const Point half = 0.5 * unit(2.6);
  return {ConvexBody::segment(c0 - half, c0 + half), ConvexBody::segment({0.25, -0.45}, {0.25, 0.55}), t};
}

namespace {

struct Construction {
  Triangle triangle;
  CarouselVerdict verdict;
};

}  // namespace

Triangle triangle_from_crossing(const ConvexBody& k, const ConvexBody& kp, const CrossingWitness& w,
                                const Tolerance& tol, int samples) {
  if (validate_witness(k, kp, w, tol) <= 0.0) throw PreconditionError("crossing witness does not validate");
  const ConvexBody& first = w.first_is_k ? k : kp;
  const ConvexBody& second = w.first_is_k ? kp : k;
  // Label the tangents so that dir(t1) = dir(t2) + alpha with alpha in (0, pi].
  double d1 = w.t1.direction().value();
  double d2 = w.t2.direction().value();
  if (wrap_angle(d1 - d2) > kPi) std::swap(d1, d2);

  const double nu0 = angle_of(unit(d1) - unit(d2));
  const double far = std::max(first.support(nu0), second.support(nu0));
  const Point c = midpoint(first.reference_center(), second.reference_center());
  const double radius = std::max(first.radius_about(c), second.radius_about(c));
  const double need = 10.0 * tol.eps_geom;

  auto build = [&](double eta, double dist) -> std::optional<Construction> {
    const DirectedLine a1 = DirectedLine::from_normal(normal_of_direction(d2 + eta),
                                                      second.support(normal_of_direction(d2 + eta)));
    const DirectedLine a2 = DirectedLine::from_normal(normal_of_direction(d1 - eta),
                                                      first.support(normal_of_direction(d1 - eta)));
    const DirectedLine a0 = DirectedLine::from_normal(nu0, far + dist);
    try {
      const Triangle t = Triangle::make(intersect(a1, a2), intersect(a2, a0), intersect(a1, a0));
      const auto v = carousel_check(k, kp, t, tol);
      return Construction{t, v};
    } catch (const GeometryError&) {
      return std::nullopt;
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
  };
  auto certified = [&](const std::optional<Construction>& c) {
    if (!c || c->verdict.result != CarouselResult::Unsat) return false;
    return *std::max_element(c->verdict.margins.begin(), c->verdict.margins.end()) < -need;
  };

  std::ostringstream diag;
  double eta = kTwoPi / samples;
  for (int halving = 0; halving <= 20; ++halving, eta *= 0.5) {
    double hi = 4.0 * radius;
    auto best = build(eta, hi);
    if (!certified(best)) {
      if (best) {
        diag << " eta=" << eta << " max margin="
             << *std::max_element(best->verdict.margins.begin(), best->verdict.margins.end());
      }
      continue;
    }
    // Pull the closing side in while the violation stays certified.
    double lo = 0.0;
    for (int it = 0; it < 12; ++it) {
      const double mid = 0.5 * (lo + hi);
      auto trial = build(eta, mid);
      if (certified(trial)) {
        hi = mid;
        best = trial;
      } else {
        lo = mid;
      }
    }
    return best->triangle;
  }
  throw ConstructionFailedError("triangle_from_crossing: could not certify all six violations;" + diag.str());
}

std::optional<FalsifyResult> carousel_falsify(const ConvexBody& k, const SearchConfig& cfg) {
  const auto dt = disk_test(k, cfg);
  if (!dt.found) return std::nullopt;
  const ConvexBody k1 = k.transformed(dt.phi);
  const Tolerance tol = default_tolerance(k);
  const Triangle t = triangle_from_crossing(k, k1, *dt.witness, tol);
  return FalsifyResult{k1, t, dt.phi, *dt.witness, carousel_check(k, k1, t, tol)};
}

}  // namespace geom
