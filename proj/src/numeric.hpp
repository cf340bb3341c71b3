#pragma once

#include <cmath>

namespace geom::detail {

/// Golden-section search for a local minimum of f on [a, b].
template <class F>
double golden_min(F&& f, double a, double b, int iters = 80) {
  constexpr double r = 0.6180339887498949;
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < iters && std::abs(b - a) > 1e-15; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

template <class F>
double golden_max(F&& f, double a, double b, int iters = 80) {
  return golden_min([&](double x) { return -f(x); }, a, b, iters);
}

/// Bisection for a sign change of f on [a, b] given f(a) and f(b) of opposite sign.
template <class F>
double bisect_root(F&& f, double a, double b, double fa, int iters = 100, double width = 1e-15) {
  for (int i = 0; i < iters && std::abs(b - a) > width; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace geom::detail
