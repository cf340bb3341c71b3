#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geom/carousel.hpp"
#include "geom/convex_body.hpp"
#include "geom/crossing.hpp"

namespace geom {

inline constexpr int kScenarioVersion = 1;
inline constexpr const char* kToolVersion = "geom 1.0.0";

/// Input problem located by a JSON pointer such as "/bodies/K/radius".
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string path, const std::string& message)
      : std::runtime_error((path.empty() ? std::string("scenario") : path) + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// One body of a scenario. Only the fields of `kind` are meaningful:
///   disk             center, radius
///   ellipse          center, a, b, angle
///   polygon          vertices (counterclockwise after parsing)
///   segment          from, to
///   reuleaux         center, width, angle
///   stadium          center, half_length, radius, angle
///   support_samples  h
/// The optional pose is applied after construction.
struct ShapeDef {
  std::string kind;
  Point center{};
  double radius = 0.0;
  double a = 0.0;
  double b = 0.0;
  double width = 0.0;
  double half_length = 0.0;
  double angle = 0.0;
  std::vector<Point> vertices;
  Point from{};
  Point to{};
  std::vector<double> h;
  std::optional<Similarity> pose;

  friend bool operator==(const ShapeDef& x, const ShapeDef& y);
};

/// Throws InvalidBodyError for invalid shapes.
ConvexBody build_body(const ShapeDef& def);

struct ScenarioParams {
  std::optional<std::string> body;
  std::optional<std::string> other;
  std::optional<double> tol;
  std::optional<int> samples;
  std::optional<int> rotation_steps;
  std::optional<int> translation_grid;

  friend bool operator==(const ScenarioParams&, const ScenarioParams&) = default;
};

struct Scenario {
  int version = kScenarioVersion;
  std::vector<std::pair<std::string, ShapeDef>> bodies;
  std::optional<Triangle> triangle;
  ScenarioParams params;
  /// Notes produced while parsing, such as reoriented polygons. Not serialized.
  std::vector<std::string> warnings;

  const ShapeDef* find(const std::string& name) const;
  friend bool operator==(const Scenario& x, const Scenario& y);
};

/// Parses and validates a scenario document. Throws ScenarioError.
Scenario parse_scenario(std::string_view text);
std::string serialize_scenario(const Scenario& s);

struct RunFlags {
  std::optional<double> tol;
  std::optional<int> samples;
  std::optional<int> rotation_steps;
  bool json = false;
  bool svg = false;
};

struct RunResult {
  int exit_code = 0;
  std::string status;
  std::string report;
  std::string svg;
};

/// 0 for HOLDS / SAT / NO_CROSS / NO_WITNESS_FOUND / RENDERED, 1 for
/// VIOLATED / UNSAT / CROSS / WITNESS_FOUND, 2 for UNKNOWN, 64 otherwise.
int exit_code_for_status(std::string_view status);

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"carousel-check", "find-crossing", "disk-test",
                                                 "properties",     "falsify",       "render"};
  return names;
}

/// Runs one command. Input problems give exit code 64 with the diagnostic as report.
RunResult run(const std::string& command, const Scenario& scenario, const RunFlags& flags);

struct SvgScene {
  std::vector<std::pair<std::string, ConvexBody>> bodies;
  std::optional<Triangle> triangle;
  std::optional<CrossingWitness> witness;
  std::vector<std::vector<Point>> hulls;
};

/// Standalone SVG 1.1 document; identical scenes give identical bytes.
std::string render_svg(const SvgScene& scene);

/// GEOM_SEED when set to an unsigned integer, the fallback otherwise.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace geom
