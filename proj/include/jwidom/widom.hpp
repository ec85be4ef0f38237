#pragma once

// Widom factors W_n = 2^n * (weighted Chebyshev norm) and their monotonicity
// over a (rho_a, rho_b) parameter grid.

#include "jwidom/bounds.hpp"
#include "jwidom/errors.hpp"
#include "jwidom/minimax.hpp"
#include "jwidom/special.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace jwidom {

enum class Monotonicity { Increasing, Decreasing, Constant, NonMonotone };

inline std::string_view to_string(Monotonicity m) noexcept {
  switch (m) {
    case Monotonicity::Increasing: return "Increasing";
    case Monotonicity::Decreasing: return "Decreasing";
    case Monotonicity::Constant: return "Constant";
    case Monotonicity::NonMonotone: return "NonMonotone";
  }
  return "NonMonotone";
}

/// Tolerances are relative to the largest |value|.
inline Monotonicity classify(const std::vector<double>& values, double tol = 1e-9) {
  if (values.size() < 2) throw DomainError("classify: need at least two values");
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  const double eps = tol * scale;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*hi - *lo <= eps) return Monotonicity::Constant;
  bool up = true, down = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double step = values[i] - values[i - 1];
    if (step < -eps) up = false;
    if (step > eps) down = false;
  }
  if (up) return Monotonicity::Increasing;
  if (down) return Monotonicity::Decreasing;
  return Monotonicity::NonMonotone;
}

inline double widom_factor(WeightParams w, int n, const SolveOptions& opts = {}) {
  if (n < 1) throw DomainError("widom_factor: degree must be >= 1 (use weight_sup_bound for n = 0)");
  return solve(w, n, opts).widom;
}

struct WidomSequence {
  WeightParams weight;
  int n_start = 1;
  std::vector<double> values;  // W_{n_start}, W_{n_start+1}, ...
  double asymptote = 0.0;
  Monotonicity classification = Monotonicity::NonMonotone;
};

inline WidomSequence widom_sequence(WeightParams w, int n_max, const SolveOptions& opts = {},
                                    double tol = 1e-9) {
  if (n_max < 2) throw DomainError("widom_sequence: n_max must be >= 2");
  WidomSequence s;
  s.weight = w;
  s.asymptote = jwidom::asymptote(w);
  s.values.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) s.values.push_back(widom_factor(w, n, opts));
  s.classification = classify(s.values, tol);
  return s;
}

/// Position relative to the circle (rho_a - 1/4)^2 + (rho_b - 1/4)^2 = r^2
/// (r^2 = 1/8) and the outer radius r^2 = 1.184/8.
enum class ConjectureRegion { Inside, Between, Outside };

inline constexpr double kInnerRadius2 = 1.0 / 8.0;
inline constexpr double kOuterRadius2 = 1.184 / 8.0;
/// Squared radius of the dotted circle drawn on scan heat maps.
inline constexpr double kDottedRadius2 = 1.1836088889 / 8.0;

inline std::string_view to_string(ConjectureRegion r) noexcept {
  switch (r) {
    case ConjectureRegion::Inside: return "Inside";
    case ConjectureRegion::Between: return "Between";
    case ConjectureRegion::Outside: return "Outside";
  }
  return "Between";
}

inline ConjectureRegion conjecture_region(WeightParams w) noexcept {
  const double da = w.rho_a - 0.25, db = w.rho_b - 0.25;
  const double r2 = da * da + db * db;
  if (r2 < kInnerRadius2) return ConjectureRegion::Inside;
  if (r2 > kOuterRadius2) return ConjectureRegion::Outside;
  return ConjectureRegion::Between;
}

/// max over the four axis perturbations (+-delta in rho_a, +-delta in rho_b)
/// of |W_n(perturbed) - W_n(w)|.
inline double continuity_probe(WeightParams w, double delta, int n, const SolveOptions& opts = {}) {
  if (!(delta >= 0.0)) throw DomainError("continuity_probe: delta must be non-negative");
  if (w.rho_a - delta < 0.0 || w.rho_b - delta < 0.0)
    throw DomainError("continuity_probe: perturbed exponents must stay non-negative");
  if (delta == 0.0) return 0.0;
  const double base = widom_factor(w, n, opts);
  const WeightParams shifted[] = {{w.rho_a + delta, w.rho_b},
                                  {w.rho_a - delta, w.rho_b},
                                  {w.rho_a, w.rho_b + delta},
                                  {w.rho_a, w.rho_b - delta}};
  double worst = 0.0;
  for (const auto& s : shifted) worst = std::max(worst, std::abs(widom_factor(s, n, opts) - base));
  return worst;
}

struct ScanCell {
  WeightParams weight;
  Monotonicity classification = Monotonicity::NonMonotone;
  std::vector<double> values;  // W_1..W_{n_max}; empty when failed
  bool failed = false;
  std::string error;
};

struct ScanOptions {
  double lo = 0.0;
  double hi = 0.8;
  int resolution = 40;
  int n_max = 10;
  unsigned threads = 1;  // 0: one per hardware thread
  double tol = 1e-9;
  SolveOptions solver{};
};

struct ScanResult {
  ScanOptions options;
  /// resolution^2 cells, row-major with rho_a varying fastest.
  std::vector<ScanCell> cells;
  double runtime_seconds = 0.0;

  [[nodiscard]] const ScanCell& at(int i_a, int i_b) const {
    return cells[static_cast<std::size_t>(i_b) * options.resolution + i_a];
  }
};

inline double scan_coordinate(const ScanOptions& o, int i) {
  if (i + 1 == o.resolution) return o.hi;
  return o.lo + (o.hi - o.lo) * i / (o.resolution - 1);
}

inline ScanCell scan_cell(WeightParams w, const ScanOptions& o) {
  ScanCell cell;
  cell.weight = w;
  try {
    auto seq = widom_sequence(w, o.n_max, o.solver, o.tol);
    cell.values = std::move(seq.values);
    cell.classification = seq.classification;
  } catch (const std::exception& e) {
    cell.failed = true;
    cell.error = e.what();
    cell.values.clear();
  }
  return cell;
}

/// Classify every grid cell. Cells are independent; each worker writes only
/// its own pre-indexed slot, so the result does not depend on scheduling.
inline ScanResult scan(const ScanOptions& opts) {
  if (opts.resolution < 2) throw DomainError("scan: resolution must be >= 2");
  if (opts.n_max < 2) throw DomainError("scan: n_max must be >= 2");
  if (!(opts.lo >= 0.0) || !(opts.hi >= opts.lo))
    throw DomainError("scan: range must satisfy 0 <= lo <= hi");
  const auto start = std::chrono::steady_clock::now();
  ScanResult out;
  out.options = opts;
  const std::size_t total = static_cast<std::size_t>(opts.resolution) * opts.resolution;
  out.cells.resize(total);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      const int ia = static_cast<int>(k % opts.resolution);
      const int ib = static_cast<int>(k / opts.resolution);
      out.cells[k] = scan_cell({scan_coordinate(opts, ia), scan_coordinate(opts, ib)}, opts);
    }
  };
  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  out.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace jwidom
