#include <doctest.h>

#include <random>

#include "geom/kernel.hpp"
#include "oracles.hpp"

using namespace geom;

namespace {

ConvexBody square() { return ConvexBody::polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }

bool near(Point a, Point b, double eps = 1e-9) { return distance(a, b) <= eps; }

}  // namespace

TEST_CASE("support values of basic bodies") {
  CHECK(support_value(ConvexBody::disk({0, 0}, 1), Angle(0)) == doctest::Approx(1.0));
  CHECK(support_value(ConvexBody::polygon({{3, 4}}), Angle(0)) == doctest::Approx(3.0));
  CHECK(support_value(square(), Angle(kPi / 4)) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("analytic supports match boundary parametrizations") {
  const auto e = ConvexBody::ellipse({0.3, -0.2}, 1.3, 0.7, 0.4);
  const auto ep = oracle::ellipse_points({0.3, -0.2}, 1.3, 0.7, 0.4);
  const auto r = ConvexBody::reuleaux({1, 2}, 1.5, 0.3);
  const auto rp = oracle::reuleaux_points({1, 2}, 1.5, 0.3);
  const auto d = ConvexBody::disk({-1, 0.5}, 0.8);
  const auto dp = oracle::disk_points({-1, 0.5}, 0.8);
  for (int i = 0; i < 97; ++i) {
    const double nu = kTwoPi * i / 97 + 0.01;
    CHECK(e.support(nu) == doctest::Approx(oracle::support(ep, nu)).epsilon(1e-7));
    CHECK(r.support(nu) == doctest::Approx(oracle::support(rp, nu)).epsilon(1e-7));
    CHECK(d.support(nu) == doctest::Approx(oracle::support(dp, nu)).epsilon(1e-7));
  }
}

TEST_CASE("faces are ordered along the line direction") {
  const Face fd = face(ConvexBody::disk({0, 0}, 1), Angle(0));
  CHECK(near(fd.first, {1, 0}));
  CHECK(near(fd.last, {1, 0}));
  const Face fs = face(square(), Angle(0));
  CHECK(near(fs.first, {1, -1}));
  CHECK(near(fs.last, {1, 1}));
  const Face fg = face(ConvexBody::segment({-1, 0}, {1, 0}), Angle(kPi / 2));
  CHECK(near(fg.first, {1, 0}));
  CHECK(near(fg.last, {-1, 0}));
}

TEST_CASE("hull with points") {
  const auto disk = ConvexBody::disk({0, 0}, 1);
  const Point far[] = {{3, 0}};
  const auto h = hull_with_points(disk, far);
  CHECK(h.support(0) == doctest::Approx(3.0));
  CHECK(h.support(kPi) == doctest::Approx(1.0));
  const Point inner[] = {{0.5, 0}};
  const auto same = hull_with_points(disk, inner);
  CHECK(body_distance(same, disk) == doctest::Approx(0.0));

  const auto tri = ConvexBody::polygon({{0, 0}, {4, 0}, {0, 3}});
  const Point inside[] = {{1, 1}};
  const auto t2 = hull_with_points(tri, inside);
  std::vector<Point> all = {{0, 0}, {4, 0}, {0, 3}, {1, 1}};
  for (int i = 0; i < 360; ++i) {
    const double nu = kTwoPi * i / 360;
    CHECK(t2.support(nu) == doctest::Approx(oracle::support(all, nu)));
  }
}

TEST_CASE("hull with points is monotone and idempotent") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2, 2);
  const auto e = ConvexBody::ellipse({0, 0}, 1.2, 0.6, 0.3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Point> pts = {{u(rng), u(rng)}, {u(rng), u(rng)}};
    const auto h1 = hull_with_points(e, std::span<const Point>(pts.data(), 1));
    const auto h2 = hull_with_points(e, pts);
    CHECK(contains(h2, h1, Tolerance::analytic()).verdict == ContainmentVerdict::Contained);
    CHECK(contains(h1, e, Tolerance::analytic()).verdict == ContainmentVerdict::Contained);
    const auto again = hull_with_points(h2, pts);
    CHECK(body_distance(again, h2) <= 1e-9);
  }
}

TEST_CASE("containment of disks") {
  const auto big = ConvexBody::disk({0, 0}, 2);
  const auto small = ConvexBody::disk({0, 0}, 1);
  const auto c = contains(big, small, Tolerance::analytic());
  CHECK(c.verdict == ContainmentVerdict::Contained);
  CHECK(c.margin == doctest::Approx(1.0));
  const auto off = contains(big, ConvexBody::disk({2, 0}, 1), Tolerance::analytic());
  CHECK(off.verdict == ContainmentVerdict::NotContained);
  CHECK(std::abs(angle_diff(off.witness_normal, 0.0)) < 1e-6);
  CHECK(off.margin == doctest::Approx(-1.0));
}

TEST_CASE("containment of a hull of the body itself") {
  const auto r = ConvexBody::reuleaux({0, 0}, 1.0);
  const std::vector<Point> pts = {{0, 0}, {0.1, 0.1}};
  CHECK(contains(r, hull_with_points(r, pts), Tolerance::analytic()).verdict == ContainmentVerdict::Contained);
  CHECK(contains(r, r, Tolerance::analytic()).verdict == ContainmentVerdict::Contained);
}

TEST_CASE("random 12-gon containment agrees with vertex membership") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> off(-0.6, 0.6);
  std::uniform_real_distribution<double> rad(0.3, 1.2);
  int agree = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const auto pa = oracle::random_convex_polygon(rng, 12, {0, 0}, 1.5);
    const auto pb = oracle::random_convex_polygon(rng, 12, {off(rng), off(rng)}, rad(rng));
    const auto a = ConvexBody::polygon(convex_hull(pa));
    const auto b = ConvexBody::polygon(convex_hull(pb));
    const bool expected = oracle::polygon_contains(convex_hull(pa), convex_hull(pb), 1e-9);
    const auto v = contains(a, b, Tolerance::analytic()).verdict;
    CHECK(v != ContainmentVerdict::Unknown);
    if ((v == ContainmentVerdict::Contained) == expected) ++agree;
  }
  CHECK(agree == trials);
}

TEST_CASE("point margin is a signed distance") {
  const auto sq = square();
  const std::vector<Point> verts = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 50; ++i) {
    const Point p{u(rng), u(rng)};
    CHECK(point_margin(sq, p) == doctest::Approx(oracle::polygon_signed_distance(verts, p)).epsilon(1e-6));
  }
}

TEST_CASE("transformations") {
  const auto disk = ConvexBody::disk({0, 0}, 1);
  CHECK(body_distance(apply(Similarity::identity(), disk), disk) <= 1e-12);
  CHECK(body_distance(apply(Similarity::rotate(1.234), disk), disk) <= 1e-12);
  const auto mirrored = apply(Similarity{Angle(0), true, 1.0, {0, 0}}, square());
  CHECK(body_distance(mirrored, square()) <= 1e-12);

  const Similarity phi{Angle(0.7), true, 1.5, {0.4, -1.1}};
  const std::vector<ConvexBody> bodies = {
      ConvexBody::ellipse({0.2, 0.1}, 1.0, 0.5, 0.3), ConvexBody::reuleaux({0, 0}, 1.0, 0.2),
      ConvexBody::polygon({{0, 0}, {2, 0}, {1, 1.5}}), ConvexBody::stadium({0, 0}, 0.5, 0.3, 1.0),
      ConvexBody::segment({0, 0}, {1, 1})};
  for (const auto& k : bodies) {
    CHECK(body_distance(apply(phi.inverse(), apply(phi, k)), k) <= 1e-9);
  }
}

TEST_CASE("sampled bodies") {
  const int n = 4096;
  std::vector<double> h(n);
  const auto e = ConvexBody::ellipse({0.1, 0}, 1.0, 0.7, 0.2);
  for (int i = 0; i < n; ++i) h[i] = e.support(kTwoPi * i / n);
  const auto s = ConvexBody::support_samples(h);
  CHECK(body_distance(s, e) <= s.support_error_bound());
  CHECK(s.support_error_bound() <= 2.0 * kTwoPi / n);
  const auto c = contains(ConvexBody::disk({0, 0}, 2), s, Tolerance::sampled());
  CHECK(c.verdict == ContainmentVerdict::Contained);
  const Similarity phi{Angle(0.5), false, 1.0, {0.3, 0.2}};
  CHECK(body_distance(apply(phi.inverse(), apply(phi, s)), s) <= 1e-6);
  CHECK_FALSE(discrete_convexity_violation(h, 1e-12).has_value());

  h[17] += 0.05;
  try {
    (void)ConvexBody::support_samples(h);
    FAIL("accepted a nonconvex sample set");
  } catch (const InvalidBodyError& err) {
    CHECK(std::string(err.what()).find("17") != std::string::npos);
  }
}

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(ConvexBody::polygon({{0, 0}, {0, 1}, {1, 0}}), InvalidBodyError);
  CHECK_THROWS_AS(ConvexBody::polygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), InvalidBodyError);
  CHECK_NOTHROW(ConvexBody::polygon({{0, 0}, {1, 0}}));
}

TEST_CASE("body distance") {
  const auto a = ConvexBody::disk({0, 0}, 1);
  CHECK(body_distance(a, a) == doctest::Approx(0.0));
  CHECK(body_distance(a, ConvexBody::disk({0.3, 0}, 1)) == doctest::Approx(0.3));
  CHECK(body_distance(ConvexBody::ellipse({0, 0}, 1, 0.8), a) == doctest::Approx(0.2));
}

TEST_CASE("body distance is a metric on random triples") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  auto rnd = [&] { return ConvexBody::ellipse({u(rng), u(rng)}, 1.0 + 0.5 * u(rng), 0.6 + 0.3 * u(rng), u(rng)); };
  for (int t = 0; t < 20; ++t) {
    const auto a = rnd(), b = rnd(), c = rnd();
    const double ab = body_distance(a, b), ba = body_distance(b, a);
    CHECK(ab == doctest::Approx(ba));
    CHECK(body_distance(a, c) <= ab + body_distance(b, c) + 1e-9);
    CHECK(body_distance(a, a) <= 1e-12);
  }
}

TEST_CASE("polygon support equals vertex maximum") {
  std::mt19937_64 rng(5);
  const auto pts = convex_hull(oracle::random_convex_polygon(rng, 9, {0.2, 0.3}, 1.0));
  const auto p = ConvexBody::polygon(pts);
  for (int i = 0; i < 100; ++i) {
    const double nu = kTwoPi * i / 100;
    CHECK(p.support(nu) == oracle::support(pts, nu));
  }
}
