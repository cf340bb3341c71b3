#include "geom/crossing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "geom/kernel.hpp"

namespace geom {

std::string to_string(CrossingVerdict v) {
  switch (v) {
    case CrossingVerdict::Cross: return "CROSS";
    case CrossingVerdict::NoCross: return "NO_CROSS";
    case CrossingVerdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

// Along-line lead of the first body over the second on one tangent: how far
// the first body's face starts before, and ends before, the second's.
double lead(const DirectedLine& line, const Face& first, const Face& second) {
  return std::min(line.coordinate(second.first) - line.coordinate(first.first),
                  line.coordinate(second.last) - line.coordinate(first.last));
}

struct Pattern {
  bool ok = false;
  double margin = 0.0;
};

Pattern check_pattern(const CommonTangent& t, bool k_first, const ConvexBody& k, const ConvexBody& kp,
                      const Tolerance& tol) {
  const Face& ff = k_first ? t.face_a : t.face_b;
  const Face& fs = k_first ? t.face_b : t.face_a;
  const ConvexBody& first = k_first ? k : kp;
  const ConvexBody& second = k_first ? kp : k;
  Pattern p;
  if (lead(t.line, ff, fs) <= tol.eps_geom) return p;
  const double m1 = point_margin(second, ff.first);
  if (m1 <= tol.eps_geom) return p;
  const double m2 = point_margin(first, fs.last);
  if (m2 <= tol.eps_geom) return p;
  p.ok = true;
  p.margin = std::min(m1, m2);
  return p;
}

}  // namespace

CrossingResult crosses(const ConvexBody& k, const ConvexBody& kp, const TangentOptions& opts) {
  const auto set = common_tangents(k, kp, opts);
  CrossingResult out;
  std::optional<double> grazing;
  std::optional<CrossingWitness> best;
  for (bool k_first : {true, false}) {
    std::vector<std::pair<std::size_t, double>> hits;
    for (std::size_t i = 0; i < set.tangents.size(); ++i) {
      const auto& t = set.tangents[i];
      if (t.grazing) {
        if (!grazing) grazing = t.line.direction().value();
        continue;
      }
      const Pattern p = check_pattern(t, k_first, k, kp, opts.tol);
      if (p.ok) hits.push_back({i, p.margin});
    }
    if (hits.size() < 2) continue;
    // Keep the two tangents with the largest margins, in direction order.
    std::stable_sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    const std::size_t i1 = std::min(hits[0].first, hits[1].first);
    const std::size_t i2 = std::max(hits[0].first, hits[1].first);
    const double margin = hits[1].second;
    if (best && best->margin >= margin) continue;
    const auto& t1 = set.tangents[i1];
    const auto& t2 = set.tangents[i2];
    CrossingWitness w;
    w.t1 = t1.line;
    w.t2 = t2.line;
    w.u1 = (k_first ? t1.face_a : t1.face_b).first;
    w.u1_last = (k_first ? t1.face_b : t1.face_a).last;
    w.u2 = (k_first ? t2.face_a : t2.face_b).first;
    w.u2_last = (k_first ? t2.face_b : t2.face_a).last;
    w.first_is_k = k_first;
    w.margin = margin;
    best = w;
  }
  if (best) {
    out.verdict = CrossingVerdict::Cross;
    out.witness = best;
  } else if (grazing) {
    out.verdict = CrossingVerdict::Unknown;
    out.grazing_direction = grazing;
  }
  return out;
}

double validate_witness(const ConvexBody& k, const ConvexBody& kp, const CrossingWitness& w, const Tolerance& tol,
                        std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return -1.0;
  };
  const ConvexBody& first = w.first_is_k ? k : kp;
  const ConvexBody& second = w.first_is_k ? kp : k;
  if (w.t1.approx_equal(w.t2, tol.eps_geom, tol.eps_angle)) return fail("t1 and t2 coincide");
  const double line_tol = 10.0 * tol.eps_geom;
  double margin = std::numeric_limits<double>::infinity();
  const struct {
    const DirectedLine* line;
    Point u, u_last;
    const char* name;
  } items[] = {{&w.t1, w.u1, w.u1_last, "t1"}, {&w.t2, w.u2, w.u2_last, "t2"}};
  for (const auto& it : items) {
    const double nu = it.line->outward_normal_angle();
    const double c = it.line->offset();
    if (std::abs(first.support(nu) - c) > line_tol || std::abs(second.support(nu) - c) > line_tol) {
      return fail(std::string(it.name) + " does not support both bodies");
    }
    const Face ff = first.face(nu, tol.eps_geom);
    const Face fs = second.face(nu, tol.eps_geom);
    const double c_first = std::min(it.line->coordinate(ff.first), it.line->coordinate(fs.first));
    const double c_last = std::max(it.line->coordinate(ff.last), it.line->coordinate(fs.last));
    if (std::abs(it.line->coordinate(it.u) - c_first) > line_tol) {
      return fail(std::string(it.name) + ": U is not the first point of the union");
    }
    if (std::abs(it.line->coordinate(it.u_last) - c_last) > line_tol) {
      return fail(std::string(it.name) + ": U' is not the last point of the union");
    }
    const double m1 = point_margin(second, it.u);
    const double m2 = point_margin(first, it.u_last);
    if (m1 <= tol.eps_geom) return fail(std::string(it.name) + ": U lies in the second body");
    if (m2 <= tol.eps_geom) return fail(std::string(it.name) + ": U' lies in the first body");
    margin = std::min({margin, m1, m2});
  }
  return margin;
}

double crossing_score(const ConvexBody& k, const ConvexBody& kp, const TangentOptions& opts) {
  const auto set = common_tangents(k, kp, opts);
  const Point c = k.reference_center();
  const double floor = -(k.radius_about(c) + kp.radius_about(c));
  double best = floor;
  for (bool k_first : {true, false}) {
    const ConvexBody& first = k_first ? k : kp;
    const ConvexBody& second = k_first ? kp : k;
    double top1 = -std::numeric_limits<double>::infinity();
    double top2 = top1;
    int count = 0;
    for (const auto& t : set.tangents) {
      if (t.grazing) continue;
      ++count;
      const Face& ff = k_first ? t.face_a : t.face_b;
      const Face& fs = k_first ? t.face_b : t.face_a;
      double g = lead(t.line, ff, fs);
      // Membership margins only matter once the lead is positive.
      if (g > 0.0 && g > top2) g = std::min({g, point_margin(second, ff.first), point_margin(first, fs.last)});
      if (g > top1) {
        top2 = top1;
        top1 = g;
      } else if (g > top2) {
        top2 = g;
      }
    }
    if (count >= 2) best = std::max(best, top2);
  }
  return best;
}

namespace {

// Centered support values and face coordinates on a uniform normal grid.
struct ScreenTables {
  int m = 0;
  std::vector<double> hc, fa, fb, ux, uy, dx, dy;
};

ScreenTables build_tables(const ConvexBody& k, Point c, int m) {
  ScreenTables t;
  t.m = m;
  t.hc.resize(m);
  t.fa.resize(m);
  t.fb.resize(m);
  t.ux.resize(m);
  t.uy.resize(m);
  t.dx.resize(m);
  t.dy.resize(m);
  for (int j = 0; j < m; ++j) {
    const double nu = kTwoPi * j / m;
    const Point u = unit(nu);
    const Point d = perp(u);
    const Face f = k.face(nu, 1e-9);
    t.hc[j] = k.support(nu) - dot(c, u);
    t.fa[j] = dot(f.first - c, d);
    t.fb[j] = dot(f.last - c, d);
    t.ux[j] = u.x;
    t.uy[j] = u.y;
    t.dx[j] = d.x;
    t.dy[j] = d.y;
  }
  return t;
}

struct Candidate {
  double score;
  long index;  // position in grid order
  int r;
  bool reflect;
  double tx, ty;
};

}  // namespace

DiskTestResult disk_test(const ConvexBody& k, const SearchConfig& cfg) {
  DiskTestResult out;
  const int rot = std::max(cfg.rotation_steps, 1);
  const int grid = std::max(cfg.translation_grid, 1);
  out.resolution = std::to_string(rot) + " rotations x " + std::to_string(grid) + "^2 translations" +
                   (cfg.include_reflection ? " x reflection" : "");

  const Point c = k.reference_center();
  const double radius = k.radius_about(c);
  const double span = 2.0 * radius;
  const int m = 2 * rot;
  const ScreenTables tab = build_tables(k, c, m);
  const double zero = 1e-12 * (1.0 + radius);
  const double threshold = 1e-6 * (1.0 + radius);

  std::vector<double> hs(m), as(m), bs(m), base(m), g(m);
  struct ScreenRoot {
    int j;
    double ca, cb;  // copy face coordinates along the line
  };
  std::vector<ScreenRoot> roots;
  std::vector<double> txs(grid);
  for (int i = 0; i < grid; ++i) txs[i] = grid == 1 ? 0.0 : -span + 2.0 * span * i / (grid - 1);

  std::vector<Candidate> top;
  const std::size_t keep = static_cast<std::size_t>(std::max(cfg.max_candidates, 1));
  auto better = [](const Candidate& a, const Candidate& b) {
    return a.score > b.score || (a.score == b.score && a.index < b.index);
  };
  long index = 0;
  for (int r = 0; r < rot; ++r) {
    for (int refl = 0; refl < (cfg.include_reflection ? 2 : 1); ++refl) {
      // Copy support at normal j comes from the body's normal sigma(j).
      for (int j = 0; j < m; ++j) {
        const int s = refl ? ((2 * r - j) % m + m) % m : ((j - 2 * r) % m + m) % m;
        hs[j] = tab.hc[s];
        as[j] = refl ? -tab.fb[s] : tab.fa[s];
        bs[j] = refl ? -tab.fa[s] : tab.fb[s];
      }
      for (int iy = 0; iy < grid; ++iy) {
        const double ty = txs[iy];
        for (int j = 0; j < m; ++j) base[j] = tab.hc[j] - hs[j] - ty * tab.uy[j];
        for (int ix = 0; ix < grid; ++ix, ++index) {
          const double tx = txs[ix];
          int last_sign = 0;
          int last_j = -1;
          int first_sign = 0;
          int first_j = -1;
          roots.clear();
          auto visit_root = [&](int lo, int hi) {
            // Take the grid normal closer to the root.
            int best_j = lo;
            for (int q = lo; q != hi; q = (q + 1) % m) {
              if (std::abs(g[q]) < std::abs(g[best_j])) best_j = q;
            }
            if (std::abs(g[hi]) < std::abs(g[best_j])) best_j = hi;
            const double shift = tx * tab.dx[best_j] + ty * tab.dy[best_j];
            roots.push_back({best_j, as[best_j] + shift, bs[best_j] + shift});
          };
          for (int j = 0; j < m; ++j) {
            g[j] = base[j] - tx * tab.ux[j];
            const int s = g[j] > zero ? 1 : (g[j] < -zero ? -1 : 0);
            if (s == 0) continue;
            if (first_sign == 0) {
              first_sign = s;
              first_j = j;
            } else if (s != last_sign) {
              visit_root(last_j, j);
            }
            last_sign = s;
            last_j = j;
          }
          if (first_sign != 0 && last_sign != first_sign) visit_root(last_j, first_j);
          // Grid lower bound of the margin of p (relative to c) outside the
          // body (copy == false) or the copy (copy == true).
          auto margin_outside = [&](double px, double py, bool copy) {
            double best = -std::numeric_limits<double>::infinity();
            for (int i = 0; i < m; ++i) {
              const double h = copy ? tab.hc[i] - g[i] : tab.hc[i];
              best = std::max(best, px * tab.ux[i] + py * tab.uy[i] - h);
            }
            return best;
          };
          double score = -std::numeric_limits<double>::infinity();
          for (bool k_first : {true, false}) {
            int positive = 0;
            for (const auto& rt : roots) {
              const double lead_k = std::min(rt.ca - tab.fa[rt.j], rt.cb - tab.fb[rt.j]);
              const double lead_c = std::min(tab.fa[rt.j] - rt.ca, tab.fb[rt.j] - rt.cb);
              if ((k_first ? lead_k : lead_c) > threshold) ++positive;
            }
            if (positive < 2) continue;
            double top1 = -std::numeric_limits<double>::infinity();
            double top2 = top1;
            for (const auto& rt : roots) {
              const int j = rt.j;
              const double lead_v = k_first ? std::min(rt.ca - tab.fa[j], rt.cb - tab.fb[j])
                                            : std::min(tab.fa[j] - rt.ca, tab.fb[j] - rt.cb);
              double v = lead_v;
              if (v > threshold) {
                // First point of the leading body and last point of the other.
                const double h = tab.hc[j];
                const double s_first = k_first ? tab.fa[j] : rt.ca;
                const double s_last = k_first ? rt.cb : tab.fb[j];
                const double m1 = margin_outside(h * tab.ux[j] + s_first * tab.dx[j],
                                                 h * tab.uy[j] + s_first * tab.dy[j], k_first);
                const double m2 = margin_outside(h * tab.ux[j] + s_last * tab.dx[j],
                                                 h * tab.uy[j] + s_last * tab.dy[j], !k_first);
                v = std::min({v, m1, m2});
              }
              if (v > top1) {
                top2 = top1;
                top1 = v;
              } else if (v > top2) {
                top2 = v;
              }
            }
            score = std::max(score, top2);
          }
          ++out.screened;
          if (!(score > threshold)) continue;
          const Candidate cand{score, index, r, refl == 1, tx, ty};
          if (top.size() < keep) {
            top.push_back(cand);
            std::push_heap(top.begin(), top.end(), better);
          } else if (better(cand, top.front())) {
            std::pop_heap(top.begin(), top.end(), better);
            top.back() = cand;
            std::push_heap(top.begin(), top.end(), better);
          }
        }
      }
    }
  }
  std::sort(top.begin(), top.end(), better);

  const TangentOptions coarse{512, Tolerance::analytic()};
  const TangentOptions fine{4096, default_tolerance(k)};
  for (const Candidate& cand : top) {
    ++out.refined;
    double p[3] = {kTwoPi * cand.r / rot, cand.tx, cand.ty};
    auto copy_of = [&](const double* q) {
      return Similarity::isometry_about(c, q[0], cand.reflect, {q[1], q[2]});
    };
    auto objective = [&](const double* q) { return crossing_score(k, k.transformed(copy_of(q)), coarse); };
    double f = objective(p);
    double step[3] = {kTwoPi / rot, span / std::max(grid - 1, 1), span / std::max(grid - 1, 1)};
    for (int it = 0; it < cfg.refine_iters; ++it) {
      double best_f = f;
      double best_p[3] = {p[0], p[1], p[2]};
      for (int axis = 0; axis < 3; ++axis) {
        for (double sgn : {1.0, -1.0}) {
          double q[3] = {p[0], p[1], p[2]};
          q[axis] += sgn * step[axis];
          const double fq = objective(q);
          if (fq > best_f) {
            best_f = fq;
            std::copy(q, q + 3, best_p);
          }
        }
      }
      if (best_f > f) {
        f = best_f;
        std::copy(best_p, best_p + 3, p);
      } else {
        for (double& s : step) s *= 0.5;
      }
    }
    const Similarity phi = copy_of(p);
    const ConvexBody copy = k.transformed(phi);
    const auto res = crosses(k, copy, fine);
    if (res.witness && res.witness->margin > cfg.min_margin &&
        validate_witness(k, copy, *res.witness, fine.tol) > cfg.min_margin) {
      out.found = true;
      out.phi = phi;
      out.witness = res.witness;
      return out;
    }
  }
  return out;
}

}  // namespace geom
