#pragma once

#include <boost/math/tools/minima.hpp>

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace jwidom::detail {

struct GridMax {
  double arg;
  double value;
};

/// Polish a grid maximum of f inside [lo, hi] with Brent's method.
/// The returned value is never below `seed.value`.
template <class F>
GridMax refine_max(F&& f, double lo, double hi, GridMax seed) {
  if (!(hi > lo)) return seed;
  auto neg = [&](double t) { return -f(t); };
  std::uintmax_t iters = 200;
  auto [arg, val] = boost::math::tools::brent_find_minima(neg, lo, hi, 52, iters);
  if (-val > seed.value) return {arg, -val};
  return seed;
}

/// Maximum of f over [lo, hi]: uniform grid with `points` samples (endpoints
/// included), every grid-local maximum polished by Brent.
template <class F>
GridMax maximize_on_grid(F&& f, double lo, double hi, std::size_t points) {
  if (points < 3) points = 3;
  const double step = (hi - lo) / static_cast<double>(points - 1);
  std::vector<double> vals(points);
  for (std::size_t i = 0; i < points; ++i) {
    double t = (i + 1 == points) ? hi : lo + step * static_cast<double>(i);
    vals[i] = f(t);
  }
  GridMax best{lo, vals[0]};
  for (std::size_t i = 0; i < points; ++i) {
    const double left = i == 0 ? -INFINITY : vals[i - 1];
    const double right = i + 1 == points ? -INFINITY : vals[i + 1];
    if (vals[i] < left || vals[i] < right) continue;
    const double t = (i + 1 == points) ? hi : lo + step * static_cast<double>(i);
    GridMax g{t, vals[i]};
    const double a = i == 0 ? lo : t - step;
    const double b = i + 1 == points ? hi : t + step;
    g = refine_max(f, a, b, g);
    if (g.value > best.value) best = g;
  }
  return best;
}

}  // namespace jwidom::detail
