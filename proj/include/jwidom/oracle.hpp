#pragma once

// Brute-force reference for small degrees: minimize the grid maximum of
// w(x) |prod (x - a_k)| directly over the node positions with multi-start
// Nelder-Mead. No leveled systems and no exchange steps.

#include "jwidom/detail/maximize.hpp"
#include "jwidom/errors.hpp"
#include "jwidom/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

namespace jwidom {

struct OracleResult {
  std::vector<double> nodes;  // sorted
  double norm = 0.0;          // grid maximum at the nodes
};

struct OracleOptions {
  int restarts = 32;
  int grid_points = 20001;
  unsigned seed = 20240613u;
};

namespace detail {

class GridObjective {
 public:
  GridObjective(WeightParams w, int points) : x_(points), wt_(points) {
    for (int i = 0; i < points; ++i) {
      const double t = std::numbers::pi * i / (points - 1);
      x_[i] = std::cos(t);
      const double s = std::sin(t / 2.0), c = std::cos(t / 2.0);
      wt_[i] = (w.rho_a == 0.0 ? 1.0 : std::pow(2.0 * s * s, w.rho_a)) *
               (w.rho_b == 0.0 ? 1.0 : std::pow(2.0 * c * c, w.rho_b));
    }
  }

  double operator()(const std::vector<double>& nodes) const {
    double best = 0.0;
    for (std::size_t i = 0; i < x_.size(); ++i) {
      double v = wt_[i];
      for (double a : nodes) v *= (x_[i] - std::clamp(a, -1.0, 1.0));
      best = std::max(best, std::abs(v));
    }
    return best;
  }

 private:
  std::vector<double> x_, wt_;
};

template <class F>
std::pair<std::vector<double>, double> nelder_mead(const F& f, std::vector<double> start,
                                                   double size, int max_evals) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += size;
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i <= n; ++i) fv[i] = f(simplex[i]);
  int evals = static_cast<int>(n) + 1;

  std::vector<std::size_t> order(n + 1);
  while (evals < max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return fv[a] < fv[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
    if (fv[worst] - fv[best] <= 1e-13 * fv[best]) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != worst)
        for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / n;
    auto along = [&](double t) {
      std::vector<double> p(n);
      for (std::size_t k = 0; k < n; ++k) p[k] = centroid[k] + t * (simplex[worst][k] - centroid[k]);
      return p;
    };
    auto refl = along(-1.0);
    const double fr = f(refl);
    ++evals;
    if (fr < fv[best]) {
      auto exp = along(-2.0);
      const double fe = f(exp);
      ++evals;
      if (fe < fr) {
        simplex[worst] = exp;
        fv[worst] = fe;
      } else {
        simplex[worst] = refl;
        fv[worst] = fr;
      }
    } else if (fr < fv[second]) {
      simplex[worst] = refl;
      fv[worst] = fr;
    } else {
      auto con = fr < fv[worst] ? along(-0.5) : along(0.5);
      const double fc = f(con);
      ++evals;
      if (fc < std::min(fr, fv[worst])) {
        simplex[worst] = con;
        fv[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t k = 0; k < n; ++k)
            simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
          fv[i] = f(simplex[i]);
          ++evals;
        }
      }
    }
  }
  const auto it = std::min_element(fv.begin(), fv.end());
  return {simplex[static_cast<std::size_t>(it - fv.begin())], *it};
}

}  // namespace detail

/// Best monic polynomial of degree n <= 3 found by direct search.
inline OracleResult brute_minimax(WeightParams w, int n, const OracleOptions& opts = {}) {
  if (n < 1 || n > 3) throw DomainError("brute_minimax: degree must be 1, 2 or 3");
  const detail::GridObjective f(w, opts.grid_points);
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  OracleResult best;
  best.norm = INFINITY;
  for (int r = 0; r < opts.restarts; ++r) {
    // stratified: restart r draws node k from its own slice of [-1, 1]
    std::vector<double> start(n);
    for (int k = 0; k < n; ++k) {
      const double slice = (static_cast<double>(r % opts.restarts) + unit(rng)) / opts.restarts;
      start[k] = -1.0 + 2.0 * (k + slice) / n;
    }
    auto [x, v] = detail::nelder_mead(f, start, 0.2, 3000);
    // restarting from the result escapes the kinks of a max-objective
    for (int polish = 0; polish < 3; ++polish) {
      auto [x2, v2] = detail::nelder_mead(f, x, 1e-3 * std::pow(0.1, polish), 1500);
      if (v2 <= v) {
        x = std::move(x2);
        v = v2;
      }
    }
    if (v < best.norm) {
      best.norm = v;
      best.nodes = x;
    }
  }
  for (double& a : best.nodes) a = std::clamp(a, -1.0, 1.0);
  std::sort(best.nodes.begin(), best.nodes.end());
  // certify: the continuous maximum at the chosen nodes bounds the minimax
  // value from above
  auto g = [&](double t) {
    const double x = std::cos(t);
    double v = weight_at_angle(w, t);
    for (double a : best.nodes) v *= (x - a);
    return std::abs(v);
  };
  best.norm = std::max(best.norm,
                       detail::maximize_on_grid(g, 0.0, std::numbers::pi, 2001).value);
  return best;
}

}  // namespace jwidom
