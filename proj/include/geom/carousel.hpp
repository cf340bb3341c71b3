#pragma once

#include <array>
#include <optional>
#include <string>

#include "geom/crossing.hpp"
#include "geom/kernel.hpp"

namespace geom {

struct Triangle {
  Point a0, a1, a2;

  /// Reorders a1/a2 if needed so the vertices run counterclockwise. Throws
  /// PreconditionError for collinear vertices.
  static Triangle make(Point a0, Point a1, Point a2);
  std::array<Point, 3> vertices() const { return {a0, a1, a2}; }
  Point vertex(int j) const { return vertices()[static_cast<std::size_t>(j)]; }
  ConvexBody body() const;
};

enum class CarouselResult { Sat, Unsat, Unknown };
std::string to_string(CarouselResult r);

struct CarouselVerdict {
  CarouselResult result = CarouselResult::Unknown;
  /// First satisfying case (j-major) when SAT.
  int j = -1;
  int k = -1;
  /// Index j * 2 + k: margin of K_{1-k} ⊆ conv(K_k ∪ (T \ {A_j})).
  std::array<double, 6> margins{};
  std::array<double, 6> normals{};
  std::array<ContainmentVerdict, 6> verdicts{};

  static int index(int j, int k) { return j * 2 + k; }
};

/// Checks the six containments of the weak carousel conclusion. Throws
/// PreconditionError when either body is not inside the triangle.
CarouselVerdict carousel_check(const ConvexBody& k0, const ConvexBody& k1, const Triangle& t,
                               const Tolerance& tol = {});

struct CarouselInstance {
  ConvexBody k0;
  ConvexBody k1;
  Triangle triangle;
};

/// Two congruent segments in a regular triangle violating all six containments.
CarouselInstance segment_counterexample();

/// Triangle containing both bodies of a crossing pair with every carousel
/// containment violated. Throws ConstructionFailedError when the violation
/// cannot be certified.
Triangle triangle_from_crossing(const ConvexBody& k, const ConvexBody& kp, const CrossingWitness& w,
                                const Tolerance& tol = {}, int samples = 4096);

struct FalsifyResult {
  ConvexBody k1;
  Triangle triangle;
  Similarity phi;
  CrossingWitness witness;
  CarouselVerdict verdict;
};

/// Disk test followed by the triangle construction.
std::optional<FalsifyResult> carousel_falsify(const ConvexBody& k, const SearchConfig& cfg = {});

}  // namespace geom
