#include <doctest.h>

#include <random>
#include <set>

#include "geom/kernel.hpp"
#include "geom/tangency.hpp"
#include "oracles.hpp"

using namespace geom;

namespace {

ConvexBody square() { return ConvexBody::polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }

bool near(Point a, Point b, double eps = 1e-9) { return distance(a, b) <= eps; }

bool same_angle(double a, double b, double eps = 1e-9) { return std::abs(angle_diff(a, b)) <= eps; }

}  // namespace

TEST_CASE("supporting lines keep the body on the left") {
  const auto disk = ConvexBody::disk({0, 0}, 1);
  const auto l0 = supporting_line(disk, Angle(0));
  CHECK(near(l0.anchor(), {0, -1}));
  CHECK(l0.offset() == doctest::Approx(1.0));
  const auto lpi = supporting_line(disk, Angle(kPi));
  CHECK(near(lpi.anchor(), {0, 1}));
  CHECK(near(lpi.direction_vector(), {-1, 0}));
  const auto ls = supporting_line(square(), Angle(0));
  CHECK(ls.signed_distance({0, -1}) == doctest::Approx(0.0));
  CHECK(ls.signed_distance({0, 0}) == doctest::Approx(1.0));

  const auto e = ConvexBody::ellipse({0.1, 0.2}, 1.0, 0.6, 0.3);
  const auto pts = oracle::ellipse_points({0.1, 0.2}, 1.0, 0.6, 0.3, 4000);
  for (int i = 0; i < 64; ++i) {
    const auto l = supporting_line(e, Angle(kTwoPi * i / 64));
    CHECK(e.support(l.outward_normal_angle()) == doctest::Approx(l.offset()));
    double worst = 0;
    for (Point p : pts) worst = std::min(worst, l.signed_distance(p));
    CHECK(worst >= -1e-9);
  }
}

TEST_CASE("semitangents") {
  const auto sd = semitangents(ConvexBody::disk({0, 0}, 1), {0, -1});
  CHECK(same_angle(sd.first.direction().value(), 0.0));
  CHECK(same_angle(sd.last.direction().value(), 0.0));
  const auto sq = semitangents(square(), {1, -1});
  CHECK(same_angle(sq.first.direction().value(), 0.0));
  CHECK(same_angle(sq.last.direction().value(), kPi / 2));
  const auto r = ConvexBody::reuleaux({0, 0}, 1.0);
  const auto sr = semitangents(r, {0, 1.0 / std::sqrt(3.0)});
  CHECK(sr.gap() == doctest::Approx(kPi / 3));
  CHECK_THROWS_AS(semitangents(square(), {0, 0}), BoundaryMembershipError);
}

TEST_CASE("semitangents at polygon vertices span the exterior-normal cone") {
  std::mt19937_64 rng(9);
  const auto v = convex_hull(oracle::random_convex_polygon(rng, 10, {0, 0}, 1));
  const auto p = ConvexBody::polygon(v);
  const std::size_t n = v.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto st = semitangents(p, v[k]);
    CHECK(same_angle(st.first.direction().value(), angle_of(v[k] - v[(k + n - 1) % n])));
    CHECK(same_angle(st.last.direction().value(), angle_of(v[(k + 1) % n] - v[k])));
  }
}

TEST_CASE("secant boundary points") {
  const auto [x, y] = secant_boundary_points(ConvexBody::disk({0, 0}, 1), DirectedLine({0, 0}, Angle(0)));
  CHECK(near(x, {-1, 0}, 1e-7));
  CHECK(near(y, {1, 0}, 1e-7));
  const auto [xs, ys] = secant_boundary_points(square(), DirectedLine({0, 0}, Angle(kPi / 2)));
  CHECK(near(xs, {0, -1}));
  CHECK(near(ys, {0, 1}));
  CHECK_THROWS_AS(secant_boundary_points(square(), DirectedLine({0, 1}, Angle(0))), NotASecantError);
  CHECK_THROWS_AS(secant_boundary_points(ConvexBody::segment({0, 0}, {1, 0}), DirectedLine({0.5, -1}, Angle(kPi / 2))),
                  NotASecantError);
}

TEST_CASE("secants of random 20-gons match edge intersections") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::uniform_real_distribution<double> ang(0, kTwoPi);
  for (int t = 0; t < 30; ++t) {
    const auto v = convex_hull(oracle::random_convex_polygon(rng, 20, {0, 0}, 1));
    const auto poly = ConvexBody::polygon(v);
    const DirectedLine l({u(rng), u(rng)}, Angle(ang(rng)));
    if (!is_secant(poly, l)) continue;
    // Oracle: all edge/line crossings, sorted along the direction.
    std::vector<double> s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point a = v[i], b = v[(i + 1) % v.size()];
      const double da = l.signed_distance(a), db = l.signed_distance(b);
      if (da * db <= 0 && da != db) s.push_back(l.coordinate(a + (da / (da - db)) * (b - a)));
    }
    std::sort(s.begin(), s.end());
    const auto [x, y] = secant_boundary_points(poly, l);
    CHECK(l.coordinate(x) == doctest::Approx(s.front()));
    CHECK(l.coordinate(y) == doctest::Approx(s.back()));
    // The same line through an exact-path body agrees.
    const auto hull = ConvexBody::hull_of(ConvexBody::polygon({v[0]}), v);
    const auto [hx, hy] = secant_boundary_points(hull, l);
    CHECK(near(hx, x, 1e-6));
    CHECK(near(hy, y, 1e-6));
  }
}

TEST_CASE("parallel support beyond a secant") {
  const auto ps = parallel_support_beyond_secant(ConvexBody::disk({0, 0}, 1), DirectedLine({0, 0}, Angle(0)));
  CHECK(near(ps.last_point, {0, -1}));
  CHECK(ps.line.offset() == doctest::Approx(1.0));
  const auto sq = parallel_support_beyond_secant(square(), DirectedLine({0, 0}, Angle(0)));
  CHECK(near(sq.last_point, {1, -1}));
  const auto el = parallel_support_beyond_secant(ConvexBody::ellipse({0, 0}, 1, 0.6), DirectedLine({0, 0.3}, Angle(0)));
  CHECK(near(el.last_point, {0, -0.6}));
  CHECK(el.line.signed_distance({0, 0}) == doctest::Approx(0.6));
}

TEST_CASE("parallel support lies strictly right of the secant") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  std::uniform_real_distribution<double> ang(0, kTwoPi);
  const std::vector<ConvexBody> bodies = {ConvexBody::ellipse({0, 0}, 1, 0.6, 0.2),
                                          ConvexBody::reuleaux({0, 0}, 1.5), square()};
  for (const auto& k : bodies) {
    for (int t = 0; t < 20; ++t) {
      const DirectedLine l({u(rng), u(rng)}, Angle(ang(rng)));
      if (!is_secant(k, l, Tolerance{1e-3, 1e-9})) continue;
      const auto ps = parallel_support_beyond_secant(k, l);
      CHECK(l.signed_distance(ps.last_point) < -1e-9);
      CHECK(l.signed_distance(ps.line.anchor()) < -1e-9);
    }
  }
}

TEST_CASE("slide-turn traversal") {
  const auto disk = ConvexBody::disk({0, 0}, 1);
  const PointedSupportingLine start{{0, -1}, DirectedLine({0, -1}, Angle(0))};
  const auto hit = slide_turn(disk, start, [](const PointedSupportingLine& p) {
    return p.line.direction().value() >= kPi / 2;
  });
  CHECK(near(hit.point, {1, 0}));
  CHECK(hit.line.direction().value() == doctest::Approx(kPi / 2));

  const auto sq = square();
  const auto corner = slide_turn(sq, start, [](const PointedSupportingLine& p) { return near(p.point, {1, -1}); });
  CHECK(corner.line.direction().value() == doctest::Approx(0.0));

  CHECK_THROWS_AS(slide_turn(disk, start, [](const PointedSupportingLine&) { return false; }),
                  ExhaustedRevolutionError);
}

TEST_CASE("slide-turn closes after one revolution") {
  const std::vector<ConvexBody> bodies = {ConvexBody::ellipse({0.2, 0}, 1, 0.5, 0.4), ConvexBody::reuleaux({0, 0}, 1.0),
                                          square(), ConvexBody::stadium({0, 0}, 1, 0.5)};
  for (const auto& k : bodies) {
    for (double th : {0.0, 1.0, 2.5}) {
      const auto l = supporting_line(k, Angle(th));
      const PointedSupportingLine start{l.anchor(), l};
      const auto rev = slide_turn_revolution(k, start, 512);
      REQUIRE(!rev.empty());
      CHECK(near(rev.back().pointed.point, start.point));
      CHECK(same_angle(rev.back().pointed.line.direction().value(), th));
      for (const auto& s : rev) {
        const double nu = s.pointed.line.outward_normal_angle();
        CHECK(k.support(nu) == doctest::Approx(dot(s.pointed.point, unit(nu))).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("polygon traversal visits each edge and corner once") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    const auto v = convex_hull(oracle::random_convex_polygon(rng, 8, {0, 0}, 1));
    const auto poly = ConvexBody::polygon(v);
    const int n = static_cast<int>(v.size());
    // Start in the middle of edge 0.
    const Point mid = midpoint(v[0], v[1]);
    const PointedSupportingLine start{mid, DirectedLine(mid, Angle(angle_of(v[1] - v[0])))};
    const auto rev = slide_turn_revolution(poly, start, 256);
    std::vector<std::pair<TraversalStep, int>> seq;
    for (const auto& s : rev) {
      const std::pair<TraversalStep, int> key{s.step, s.feature};
      if (seq.empty() || seq.back() != key) seq.push_back(key);
    }
    // Expected: rest of edge 0, then corner k / edge k for k = 1..n-1, corner 0, back onto edge 0.
    std::vector<std::pair<TraversalStep, int>> expected = {{TraversalStep::Slide, 0}};
    for (int k = 1; k <= n; ++k) {
      expected.push_back({TraversalStep::Turn, k % n});
      expected.push_back({TraversalStep::Slide, k % n});
    }
    CHECK(seq == expected);
  }
}

TEST_CASE("common tangents of two disks") {
  const auto set = common_tangents(ConvexBody::disk({0, 0}, 1), ConvexBody::disk({2, 0}, 1));
  REQUIRE(set.tangents.size() == 2);
  CHECK(same_angle(set.tangents[0].line.direction().value(), 0.0));
  CHECK(set.tangents[0].line.offset() == doctest::Approx(1.0));
  CHECK(same_angle(set.tangents[1].line.direction().value(), kPi));
  CHECK(!set.tangents[0].grazing);
}

TEST_CASE("common tangents of rotated ellipses") {
  const auto e1 = ConvexBody::ellipse({0, 0}, 1, 0.6);
  const auto e2 = ConvexBody::ellipse({0, 0}, 1, 0.6, kPi / 2);
  const auto set = common_tangents(e1, e2);
  REQUIRE(set.tangents.size() == 4);
  // Sorted by direction, the first has direction pi/4 (normal 7pi/4).
  for (int k = 0; k < 4; ++k) {
    CHECK(same_angle(set.tangents[k].line.outward_normal_angle(), 7 * kPi / 4 + k * kPi / 2));
  }
  CHECK(common_tangents(e1, e1).coincident);
}

TEST_CASE("common tangents of random polygons match the vertex-pair oracle") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> off(-0.5, 0.5);
  for (int t = 0; t < 20; ++t) {
    const auto a = convex_hull(oracle::random_convex_polygon(rng, 7, {0, 0}, 1));
    const auto b = convex_hull(oracle::random_convex_polygon(rng, 7, {off(rng), off(rng)}, 1));
    const auto set = common_tangents(ConvexBody::polygon(a), ConvexBody::polygon(b));
    const auto expected = oracle::vertex_pair_tangent_directions(a, b);
    REQUIRE(set.tangents.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(same_angle(set.tangents[i].line.direction().value(), expected[i], 1e-9));
      const double nu = set.tangents[i].line.outward_normal_angle();
      CHECK(ConvexBody::polygon(a).support(nu) == doctest::Approx(set.tangents[i].line.offset()));
      CHECK(ConvexBody::polygon(b).support(nu) == doctest::Approx(set.tangents[i].line.offset()));
    }
  }
}

TEST_CASE("disjoint strictly convex bodies have two common tangents") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 10; ++t) {
    const double dir = kTwoPi * u(rng);
    const Point c = 3.0 * unit(dir);
    const auto a = ConvexBody::ellipse({0, 0}, 1, 0.5 + 0.4 * u(rng), kTwoPi * u(rng));
    const auto b = ConvexBody::ellipse(c, 1, 0.5 + 0.4 * u(rng), kTwoPi * u(rng));
    CHECK(common_tangents(a, b).tangents.size() == 2);
  }
}

TEST_CASE("common tangent between the tangents at a common boundary point") {
  const auto k = ConvexBody::disk({0, 0}, 1);
  const auto kp = ConvexBody::disk({1, 0}, 1);
  const auto r = common_tangent_between(k, kp, {0.5, std::sqrt(3.0) / 2});
  CHECK(same_angle(r.line.direction().value(), kPi));
  CHECK(near(r.first_on_other, {1, 1}, 1e-7));
  CHECK(near(r.last_on_body, {0, 1}, 1e-7));
  CHECK_THROWS_AS(common_tangent_between(k, kp, {0.5, -std::sqrt(3.0) / 2}), PreconditionError);
  CHECK_THROWS_AS(common_tangent_between(k, k, {1, 0}), PreconditionError);

  const auto e1 = ConvexBody::ellipse({0, 0}, 1, 0.6);
  const auto e2 = ConvexBody::ellipse({0, 0}, 1, 0.6, kPi / 2);
  const double x = 0.6 / std::sqrt(1.36);
  const auto re = common_tangent_between(e2, e1, {x, x});
  CHECK(same_angle(re.line.outward_normal_angle(), kPi / 4, 1e-8));
  CHECK_THROWS_AS(common_tangent_between(square(), k, {1, 0}), PreconditionError);
}
