#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "geom/cli_io.hpp"

namespace {

struct Options {
  std::string scenario;
  std::optional<double> tol;
  std::optional<int> samples;
  std::optional<int> rotation_steps;
  std::string svg;
  bool json = false;
};

int execute(const std::string& command, const Options& opt) {
  std::ifstream in(opt.scenario, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << opt.scenario << "\n";
    return 64;
  }
  std::ostringstream text;
  text << in.rdbuf();

  geom::Scenario scenario;
  try {
    scenario = geom::parse_scenario(text.str());
  } catch (const geom::ScenarioError& e) {
    std::cerr << "error: " << opt.scenario << ": " << e.what() << "\n";
    return 64;
  }

  geom::RunFlags flags;
  flags.tol = opt.tol;
  flags.samples = opt.samples;
  flags.rotation_steps = opt.rotation_steps;
  flags.json = opt.json;
  flags.svg = !opt.svg.empty() || command == "render";
  const geom::RunResult r = geom::run(command, scenario, flags);
  const bool svg_to_stdout = command == "render" && (opt.svg.empty() || opt.svg == "-");
  (svg_to_stdout ? std::cerr : std::cout) << r.report;

  if (!r.svg.empty()) {
    if (svg_to_stdout) {
      std::cout << r.svg;
    } else if (!opt.svg.empty()) {
      std::ofstream out(opt.svg, std::ios::binary);
      out << r.svg;
      if (!out) {
        std::cerr << "error: cannot write " << opt.svg << "\n";
        return 64;
      }
    }
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Carousel and crossing checks for planar convex bodies"};
  app.require_subcommand(1);
  app.set_version_flag("--version", geom::kToolVersion);

  Options opt;
  std::string chosen;
  const std::map<std::string, std::string> about = {
      {"carousel-check", "Six containments for two bodies in a triangle"},
      {"find-crossing", "Common tangents and a crossing witness for two bodies"},
      {"disk-test", "Search isometric copies of a body for a crossing"},
      {"properties", "Property ladder of a body"},
      {"falsify", "Crossing copy plus a triangle violating every containment"},
      {"render", "SVG of the scenario"}};
  for (const auto& name : geom::command_names()) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    sub->add_option("--scenario", opt.scenario, "Scenario JSON file")->required();
    sub->add_option("--tol", opt.tol, "Geometric and angular tolerance");
    sub->add_option("--samples", opt.samples, "Normal samples for tangent searches")->check(CLI::PositiveNumber);
    sub->add_option("--rotation-steps", opt.rotation_steps, "Rotations in the disk test")->check(CLI::PositiveNumber);
    sub->add_option("--svg", opt.svg, "Write an SVG rendering to this file");
    sub->add_flag("--json", opt.json, "Machine-readable report");
    sub->callback([&chosen, name] { chosen = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }
  return execute(chosen, opt);
}
