#pragma once

#include <optional>
#include <string>

#include "geom/convex_body.hpp"
#include "geom/tangency.hpp"

namespace geom {

/// Two common tangents t1 != t2 on each of which the first body's touch
/// point comes strictly first and the second body's strictly last.
struct CrossingWitness {
  DirectedLine t1;
  DirectedLine t2;
  Point u1, u1_last;  // first / last point of (K ∪ K') ∩ t1
  Point u2, u2_last;
  /// True when the first argument of crosses() plays the first body.
  bool first_is_k = true;
  /// Smallest of the four strict-membership margins.
  double margin = 0.0;
};

enum class CrossingVerdict { Cross, NoCross, Unknown };
std::string to_string(CrossingVerdict v);

struct CrossingResult {
  CrossingVerdict verdict = CrossingVerdict::NoCross;
  std::optional<CrossingWitness> witness;
  /// Direction of a grazing common tangent when the verdict is Unknown.
  std::optional<double> grazing_direction;
};

CrossingResult crosses(const ConvexBody& k, const ConvexBody& kp, const TangentOptions& opts = {});

/// Re-checks a witness from scratch. Returns the membership margin, or a
/// negative value with `reason` set when a claim fails.
double validate_witness(const ConvexBody& k, const ConvexBody& kp, const CrossingWitness& w,
                        const Tolerance& tol = {}, std::string* reason = nullptr);

/// Search objective: the best along-line separation achievable by a pair of
/// common tangents with a consistent role. Positive only near a witness.
double crossing_score(const ConvexBody& k, const ConvexBody& kp, const TangentOptions& opts = {});

struct SearchConfig {
  int rotation_steps = 360;
  int translation_grid = 33;
  bool include_reflection = true;
  int refine_iters = 40;
  /// Refined candidates per search before giving up.
  int max_candidates = 16;
  /// Witnesses must clear this membership margin.
  double min_margin = 1e-6;
};

struct DiskTestResult {
  bool found = false;
  Similarity phi{};
  std::optional<CrossingWitness> witness;
  long screened = 0;
  int refined = 0;
  std::string resolution;
};

/// Searches isometric copies phi(K) crossing K. NO_WITNESS_FOUND is a
/// statement about the searched grid only.
DiskTestResult disk_test(const ConvexBody& k, const SearchConfig& cfg = {});

}  // namespace geom
