#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "geom/cli_io.hpp"

namespace geom {

namespace {

// Fixed-precision formatting keeps the output byte-stable.
std::string f(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x == 0.0 ? 0.0 : x);
  return buf;
}

// SVG y grows downwards.
Point flip(Point p) { return {p.x, -p.y}; }

std::string points_attr(const std::vector<Point>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point q = flip(pts[i]);
    if (i) s += ' ';
    s += f(q.x) + "," + f(q.y);
  }
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* const kFill[] = {"#4e79a7", "#f28e2b", "#59a14f", "#b07aa1", "#76b7b2", "#edc948"};

}  // namespace

std::string render_svg(const SvgScene& scene) {
  std::vector<std::vector<Point>> outlines;
  for (const auto& [name, body] : scene.bodies) outlines.push_back(body.outline(256));

  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  auto grow = [&](Point p) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  };
  for (const auto& o : outlines) std::for_each(o.begin(), o.end(), grow);
  if (scene.triangle) {
    for (Point p : scene.triangle->vertices()) grow(p);
  }
  if (scene.witness) {
    for (Point p : {scene.witness->u1, scene.witness->u1_last, scene.witness->u2, scene.witness->u2_last}) grow(p);
  }
  if (!(lo_x <= hi_x)) lo_x = lo_y = -1, hi_x = hi_y = 1;
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double pad = 0.08 * span;
  const double stroke = 0.004 * span;
  const double font = 0.035 * span;
  // Viewbox in flipped coordinates.
  const double vx = lo_x - pad, vy = -hi_y - pad, vw = hi_x - lo_x + 2 * pad, vh = hi_y - lo_y + 2 * pad;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<!-- " << kToolVersion << " -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\""
     << f(640.0 * vh / vw) << "\" viewBox=\"" << f(vx) << " " << f(vy) << " " << f(vw) << " " << f(vh) << "\">\n";
  os << "<rect x=\"" << f(vx) << "\" y=\"" << f(vy) << "\" width=\"" << f(vw) << "\" height=\"" << f(vh)
     << "\" fill=\"white\"/>\n";

  for (std::size_t i = 0; i < scene.hulls.size(); ++i) {
    os << "<polygon class=\"hull\" id=\"hull" << i << "\" points=\"" << points_attr(scene.hulls[i])
       << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"" << f(stroke * 0.6) << "\" stroke-dasharray=\""
       << f(stroke * 3) << "," << f(stroke * 2) << "\"/>\n";
  }
  if (scene.triangle) {
    const auto v = scene.triangle->vertices();
    os << "<polygon class=\"triangle\" points=\"" << points_attr({v.begin(), v.end()})
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << f(stroke) << "\"/>\n";
    for (int j = 0; j < 3; ++j) {
      const Point q = flip(v[static_cast<std::size_t>(j)]);
      os << "<text x=\"" << f(q.x) << "\" y=\"" << f(q.y) << "\" font-size=\"" << f(font) << "\">A" << j
         << "</text>\n";
    }
  }
  for (std::size_t i = 0; i < scene.bodies.size(); ++i) {
    const char* color = kFill[i % (sizeof kFill / sizeof kFill[0])];
    const std::string name = escape(scene.bodies[i].first);
    os << "<polygon class=\"body\" id=\"body-" << name << "\" points=\"" << points_attr(outlines[i]) << "\" fill=\""
       << color << "\" fill-opacity=\"0.35\" stroke=\"" << color << "\" stroke-width=\"" << f(stroke) << "\"/>\n";
    const Point c = flip(scene.bodies[i].second.reference_center());
    os << "<text x=\"" << f(c.x) << "\" y=\"" << f(c.y) << "\" font-size=\"" << f(font)
       << "\" text-anchor=\"middle\">" << name << "</text>\n";
  }
  if (scene.witness) {
    const CrossingWitness& w = *scene.witness;
    const double len = 2.0 * span;
    auto line = [&](const char* id, const DirectedLine& l) {
      const Point a = flip(l.at(-len)), b = flip(l.at(len));
      os << "<line id=\"" << id << "\" x1=\"" << f(a.x) << "\" y1=\"" << f(a.y) << "\" x2=\"" << f(b.x)
         << "\" y2=\"" << f(b.y) << "\" stroke=\"#e15759\" stroke-width=\"" << f(stroke) << "\"/>\n";
      const Point t = flip(l.anchor());
      os << "<text x=\"" << f(t.x) << "\" y=\"" << f(t.y) << "\" font-size=\"" << f(font) << "\" fill=\"#e15759\">"
         << id << "</text>\n";
    };
    line("t1", w.t1);
    line("t2", w.t2);
    const std::pair<const char*, Point> marks[] = {{"U1", w.u1}, {"U1'", w.u1_last}, {"U2", w.u2}, {"U2'", w.u2_last}};
    for (const auto& [label, p] : marks) {
      const Point q = flip(p);
      os << "<circle class=\"touch\" cx=\"" << f(q.x) << "\" cy=\"" << f(q.y) << "\" r=\"" << f(stroke * 2)
         << "\" fill=\"black\"/>\n";
      os << "<text x=\"" << f(q.x + stroke * 3) << "\" y=\"" << f(q.y - stroke * 3) << "\" font-size=\"" << f(font)
         << "\">" << escape(label) << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace geom
