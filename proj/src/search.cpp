#include "jrcnet/search.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "jrcnet/error.hpp"

namespace jrc::search {

Argmax golden_section_maximize(const std::function<double(double)>& f, double lo,
                               double hi, double x_tol) {
  constexpr double inv_phi = 0.6180339887498948482;
  Argmax out;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  out.evaluations = 2;
  while (b - a > x_tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++out.evaluations;
    if (out.evaluations > 10000) break;
  }
  if (fc >= fd) {
    out.x = c;
    out.value = fc;
  } else {
    out.x = d;
    out.value = fd;
  }
  return out;
}

Argmax scan_maximize(const std::function<double(double)>& f, double lo, double hi,
                     Grid grid, int points, double x_tol) {
  if (!(hi > lo) || points < 3) fail_config("scan_maximize: empty search interval");
  if (grid == Grid::log && !(lo > 0.0)) fail_config("scan_maximize: log grid needs lo > 0");

  const bool logscale = grid == Grid::log;
  const double t_lo = logscale ? std::log(lo) : lo;
  const double t_hi = logscale ? std::log(hi) : hi;
  auto g = [&](double t) {
    const double v = f(logscale ? std::exp(t) : t);
    return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
  };

  std::vector<double> nodes(points);
  int best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    nodes[i] = t_lo + (t_hi - t_lo) * i / (points - 1);
    const double v = g(nodes[i]);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  if (best_value == -std::numeric_limits<double>::infinity()) {
    fail_numerical("scan_maximize: objective is -inf on the whole grid");
  }
  const double a = nodes[std::max(best - 1, 0)];
  const double b = nodes[std::min(best + 1, points - 1)];
  Argmax refined = golden_section_maximize(g, a, b, x_tol);
  refined.evaluations += points;
  if (best_value > refined.value) {
    refined.x = nodes[best];
    refined.value = best_value;
  }
  if (logscale) refined.x = std::exp(refined.x);
  return refined;
}

}  // namespace jrc::search
