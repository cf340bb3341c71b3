#include <doctest.h>

#include "geom/crossing.hpp"
#include "geom/disk_properties.hpp"
#include "oracles.hpp"

using namespace geom;

namespace {

// Touch point of the axis-aligned ellipse x^2/a^2 + y^2/b^2 = 1 at normal nu.
Point ellipse_touch(double a, double b, double nu) {
  const double h = std::hypot(a * std::cos(nu), b * std::sin(nu));
  return {a * a * std::cos(nu) / h, b * b * std::sin(nu) / h};
}

ConvexBody egg() { return ConvexBody::support_samples(oracle::support_samples(oracle::egg_points(0.1), 720)); }

ConvexBody square() { return ConvexBody::polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }

ConvexBody trapezoid() { return ConvexBody::polygon({{0, 0}, {3, 0}, {2, 1}, {0, 1}}); }

}  // namespace

TEST_CASE("perpendicular opposition") {
  const auto d = ConvexBody::disk({0.4, -1}, 2);
  for (int i = 0; i < 16; ++i) CHECK(check_perpendicularly_opposed(d, 0.37 * i).verdict == PropertyVerdict::Pass);

  const auto e = ConvexBody::ellipse({0, 0}, 1, 0.6);
  CHECK(check_perpendicularly_opposed(e, 0.0).verdict == PropertyVerdict::Pass);
  const auto r = check_perpendicularly_opposed(e, kPi / 4);
  CHECK(r.verdict == PropertyVerdict::Fail);
  // Antipodal touch points: the chord runs along the touch point itself.
  const double nu = -kPi / 4;
  const Point t = ellipse_touch(1, 0.6, nu);
  const double expected = std::abs(angle_diff(angle_of(t), nu));
  CHECK(r.magnitude == doctest::Approx(expected).epsilon(1e-9));
  CHECK(*r.witness.direction == doctest::Approx(kPi / 4));
}

TEST_CASE("chord equality") {
  CHECK(check_chord_equality(square(), 0.0).verdict == PropertyVerdict::Pass);
  CHECK(check_chord_equality(ConvexBody::disk({0, 0}, 1), 1.0).verdict == PropertyVerdict::Pass);
  const auto r = check_chord_equality(trapezoid(), 0.0);
  CHECK(r.verdict == PropertyVerdict::Fail);
  CHECK(r.magnitude == doctest::Approx(1.0));
}

TEST_CASE("smoothness") {
  CHECK(check_smoothness(ConvexBody::disk({0, 0}, 1)).verdict == PropertyVerdict::Pass);
  CHECK(check_smoothness(ConvexBody::ellipse({1, 2}, 3, 0.5, 0.2)).verdict == PropertyVerdict::Pass);
  CHECK(check_smoothness(ConvexBody::stadium({0, 0}, 1, 0.5)).verdict == PropertyVerdict::Pass);

  const auto sq = check_smoothness(square());
  REQUIRE(sq.verdict == PropertyVerdict::Fail);
  CHECK(sq.magnitude == doctest::Approx(kPi / 2));
  CHECK(distance(sq.witness.points.at(0), {1, 1}) < 1e-12);

  const auto rl = ConvexBody::reuleaux({0.5, 0.5}, 2, 0.3);
  const auto r = check_smoothness(rl);
  REQUIRE(r.verdict == PropertyVerdict::Fail);
  CHECK(r.magnitude == doctest::Approx(kPi / 3).epsilon(1e-9));
  // Replay: the witness point is a corner of the oracle boundary whose
  // neighbouring arc tangents meet at the same angle.
  const auto cone = rl.normal_cone(r.witness.points.at(0), 1e-9);
  REQUIRE(cone);
  CHECK(cone->width == doctest::Approx(r.magnitude));
  double gap = std::numeric_limits<double>::infinity();
  for (Point q : oracle::reuleaux_points({0.5, 0.5}, 2, 0.3)) gap = std::min(gap, distance(q, r.witness.points[0]));
  CHECK(gap < 1e-9);
}

TEST_CASE("strict convexity") {
  CHECK(check_strict_convexity(ConvexBody::disk({0, 0}, 1)).verdict == PropertyVerdict::Pass);
  CHECK(check_strict_convexity(ConvexBody::ellipse({0, 0}, 1, 0.6)).verdict == PropertyVerdict::Pass);
  CHECK(check_strict_convexity(ConvexBody::reuleaux({0, 0}, 1)).verdict == PropertyVerdict::Pass);

  const auto sq = check_strict_convexity(square());
  REQUIRE(sq.verdict == PropertyVerdict::Fail);
  CHECK(*sq.witness.normal == doctest::Approx(0.0));
  CHECK(sq.magnitude == doctest::Approx(2.0));

  const auto st = ConvexBody::stadium({1, 0}, 0.75, 0.5, 0.4);
  const auto r = check_strict_convexity(st);
  REQUIRE(r.verdict == PropertyVerdict::Fail);
  CHECK(r.magnitude == doctest::Approx(1.5));
  CHECK(st.face(*r.witness.normal, 1e-9).length() == doctest::Approx(1.5));
  CHECK(std::abs(std::remainder(*r.witness.normal - 0.4 - kPi / 2, kPi)) < 1e-12);
}

TEST_CASE("opposite points") {
  const auto d = opposite_point(ConvexBody::disk({0, 0}, 1), {1, 0});
  REQUIRE(d);
  CHECK(distance(d->p2, {-1, 0}) < 1e-9);

  const auto e = ConvexBody::ellipse({0, 0}, 1, 0.6);
  const auto axis = opposite_point(e, {1, 0});
  REQUIRE(axis);
  CHECK(distance(axis->p2, {-1, 0}) < 1e-9);

  // The normal line at parameter pi/4 meets the ellipse again at a point
  // whose normal is not parallel to it.
  const Point p{std::cos(kPi / 4), 0.6 * std::sin(kPi / 4)};
  CHECK_FALSE(opposite_point(e, p).has_value());
  const Point n{p.x, p.y / 0.36};  // gradient direction
  const auto pts = oracle::ellipse_points({0, 0}, 1, 0.6, 0);
  Point far = p;
  for (Point q : pts) {
    if (std::abs(cross(q - p, n)) < 2e-3 * norm(n) && dot(q - p, n) < dot(far - p, n)) far = q;
  }
  const Point nf{far.x, far.y / 0.36};
  CHECK(std::abs(cross(n, nf)) / (norm(n) * norm(nf)) > 0.1);

  CHECK_THROWS_AS(opposite_point(e, {0, 0}), PreconditionError);
  CHECK_FALSE(opposite_point(square(), {1, 1}).has_value());
}

TEST_CASE("perpendicular diagonals halve each other") {
  CHECK(check_perpendicular_diagonals_bisect(ConvexBody::disk({2, 1}, 3)).verdict == PropertyVerdict::Pass);
  CHECK(check_perpendicular_diagonals_bisect(ConvexBody::ellipse({0, 0}, 1, 0.6, 0.3)).verdict ==
        PropertyVerdict::Pass);

  const auto k = egg();
  const auto r = check_perpendicular_diagonals_bisect(k);
  REQUIRE(r.verdict == PropertyVerdict::Fail);
  // The vertical diagonal sits at the abscissa of the topmost point; the
  // horizontal one runs from (-0.9, 0) to (1.1, 0) with midpoint (0.1, 0).
  const auto pts = oracle::egg_points(0.1);
  const Point top = *std::max_element(pts.begin(), pts.end(), [](Point a, Point b) { return a.y < b.y; });
  CHECK(r.magnitude >= std::abs(top.x - 0.1) - 2e-4);
}

TEST_CASE("symmetry about diagonals") {
  const auto disk = ConvexBody::disk({0, 0}, 1);
  CHECK(check_diagonal_symmetry(disk, {{1, 0}, {-1, 0}}).verdict == PropertyVerdict::Pass);
  const auto e = ConvexBody::ellipse({0, 0}, 1, 0.6);
  CHECK(check_diagonal_symmetry(e, {{1, 0}, {-1, 0}}).verdict == PropertyVerdict::Pass);

  const auto k = egg();
  const auto horizontal = diagonal_at_normal(k, 0.0);
  REQUIRE(horizontal);
  CHECK(check_diagonal_symmetry(k, *horizontal).verdict == PropertyVerdict::Pass);
  const auto vertical = diagonal_at_normal(k, kPi / 2);
  REQUIRE(vertical);
  const auto r = check_diagonal_symmetry(k, *vertical);
  CHECK(r.verdict == PropertyVerdict::Fail);
  // Replay through an independent mirror of the oracle points.
  const Similarity m = Similarity::reflect_across_line(vertical->p1, angle_of(vertical->p2 - vertical->p1));
  auto pts = oracle::egg_points(0.1);
  double worst = 0.0;
  std::vector<Point> mirrored;
  for (Point q : pts) mirrored.push_back(m.apply(q));
  for (int i = 0; i < 360; ++i) {
    const double nu = kTwoPi * i / 360;
    worst = std::max(worst, std::abs(oracle::support(pts, nu) - oracle::support(mirrored, nu)));
  }
  CHECK(r.magnitude == doctest::Approx(worst).epsilon(0.05));
}

TEST_CASE("central symmetry") {
  const auto d = check_central_symmetry(ConvexBody::disk({0.5, -2}, 1.5));
  REQUIRE(d.verdict == PropertyVerdict::Pass);
  CHECK(distance(d.witness.points.at(0), {0.5, -2}) < 1e-8);
  const auto e = check_central_symmetry(ConvexBody::ellipse({1, 1}, 1, 0.6, 0.7));
  REQUIRE(e.verdict == PropertyVerdict::Pass);
  CHECK(distance(e.witness.points.at(0), {1, 1}) < 1e-8);
  CHECK(check_central_symmetry(ConvexBody::reuleaux({0, 0}, 1)).verdict == PropertyVerdict::Fail);
}

TEST_CASE("diagonals through the center") {
  const auto disk = ConvexBody::disk({0, 0}, 1);
  CHECK(check_diagonals_through_center(disk, {0, 0}).verdict == PropertyVerdict::Pass);
  const auto off = check_diagonals_through_center(disk, {0.2, 0});
  CHECK(off.verdict == PropertyVerdict::Fail);
  CHECK(off.magnitude == doctest::Approx(0.2));
  CHECK(check_diagonals_through_center(ConvexBody::ellipse({0, 0}, 1, 0.6), {0, 0}).verdict ==
        PropertyVerdict::Pass);
  // Sampled centrally symmetric oval.
  const auto oval = ConvexBody::support_samples(oracle::support_samples(oracle::ellipse_points({0, 0}, 1, 0.7, 0), 720));
  CHECK(check_diagonals_through_center(oval, {0, 0}).verdict == PropertyVerdict::Pass);
}

TEST_CASE("radial perpendicularity") {
  const auto d = check_radial_perpendicularity(ConvexBody::disk({3, 3}, 2), {3, 3});
  CHECK(d.verdict == PropertyVerdict::Pass);
  CHECK(d.magnitude < 1e-12);
  const auto e = check_radial_perpendicularity(ConvexBody::ellipse({0, 0}, 1, 0.8), {0, 0});
  CHECK(e.verdict == PropertyVerdict::Fail);
  CHECK(e.magnitude == doctest::Approx(0.2).epsilon(1e-9));
  for (int i = 0; i <= 90; ++i) {
    const double x = -0.9 + 0.02 * i;
    const double p = -std::sqrt(1 - x * x);
    CHECK(radial_ode_residual(x, p, x / std::sqrt(1 - x * x)) < 1e-12);
  }
}

TEST_CASE("property ladder") {
  for (double r : {0.01, 1.0, 250.0}) {
    const auto disk = ConvexBody::disk({r, -0.5 * r}, r);
    for (const Tolerance& tol : {Tolerance{}, Tolerance{1e-6, 1e-6}}) {
      const auto reports = property_ladder(disk, tol);
      REQUIRE(reports.size() == 9);
      for (const auto& rep : reports) CHECK_MESSAGE(rep.verdict == PropertyVerdict::Pass, rep.id, " ", rep.details);
    }
  }

  const auto sq = property_ladder(square());
  REQUIRE(first_failure(sq));
  CHECK(first_failure(sq)->id == "11");

  const auto e = property_ladder(ConvexBody::ellipse({0, 0}, 1, 0.6));
  const auto* f = first_failure(e);
  REQUIRE(f);
  CHECK(f->id == "9");
  CHECK(*f->witness.direction == doctest::Approx(kPi / 4));
  CHECK(e[1].verdict == PropertyVerdict::Pass);
  CHECK(e[2].verdict == PropertyVerdict::Pass);
  CHECK(e[3].verdict == PropertyVerdict::Pass);

  const std::vector<std::string> ids = {"9", "10", "11", "13", "21", "23", "24", "25", "28"};
  const auto rl = property_ladder(ConvexBody::reuleaux({0, 0}, 1));
  for (std::size_t i = 0; i < ids.size(); ++i) CHECK(rl[i].id == ids[i]);
  CHECK(rl[4].verdict == PropertyVerdict::Unknown);
}

TEST_CASE("checker verdicts are isometry invariant") {
  const Similarity phi{Angle(0.8), true, 1.0, {-1.5, 2.5}};
  const std::vector<ConvexBody> bodies = {ConvexBody::disk({0, 0}, 1), ConvexBody::ellipse({0, 0}, 1, 0.6), square(),
                                          trapezoid(), ConvexBody::reuleaux({0, 0}, 1)};
  for (const auto& k : bodies) {
    const auto m = k.transformed(phi);
    for (double theta : {0.0, 0.5, kPi / 4}) {
      // Lines of direction theta map to lines of the image direction.
      CHECK(check_perpendicularly_opposed(k, theta).verdict ==
            check_perpendicularly_opposed(m, phi.map_angle(theta)).verdict);
      CHECK(check_chord_equality(k, theta).verdict == check_chord_equality(m, phi.map_angle(theta)).verdict);
    }
    CHECK(check_smoothness(k).verdict == check_smoothness(m).verdict);
    CHECK(check_smoothness(k).magnitude == doctest::Approx(check_smoothness(m).magnitude));
    CHECK(check_strict_convexity(k).verdict == check_strict_convexity(m).verdict);
    CHECK(check_central_symmetry(k).verdict == check_central_symmetry(m).verdict);
  }
}

TEST_CASE("ladder failures come with a crossing") {
  SearchConfig cfg;
  cfg.rotation_steps = 72;
  cfg.translation_grid = 17;
  const auto k = trapezoid();
  REQUIRE(first_failure(property_ladder(k)));
  const auto r = disk_test(k, cfg);
  REQUIRE(r.found);
  CHECK(validate_witness(k, k.transformed(r.phi), *r.witness) > 0.0);
}
