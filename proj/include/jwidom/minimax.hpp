#pragma once

// Weighted Chebyshev polynomials on [-1, 1]: the monic p of degree n
// minimizing max (1-x)^rho_a (1+x)^rho_b |p(x)|, computed by a multi-point
// Remez exchange in the first-kind Chebyshev basis.
//
// All internal work is in theta = arccos(x). The weight is evaluated through
// half angles there, which keeps it accurate close to both endpoints; the
// reference, the error search and the leveled system all use the same path.

#include "jwidom/detail/maximize.hpp"
#include "jwidom/errors.hpp"
#include "jwidom/special.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace jwidom {

inline double weight_eval(WeightParams w, double x) {
  const double f1 = w.rho_a == 0.0 ? 1.0 : std::pow(1.0 - x, w.rho_a);
  const double f2 = w.rho_b == 0.0 ? 1.0 : std::pow(1.0 + x, w.rho_b);
  return f1 * f2;
}

/// Monic polynomial stored in the Chebyshev basis T_0..T_n. The leading entry
/// is 2^{1-n} for n >= 1 (1 for n = 0) so that the power-basis leading
/// coefficient is exactly 1.
struct MonicPolynomial {
  int degree = 0;
  std::vector<double> cheb_coeffs{1.0};
  std::optional<std::vector<double>> roots;

  [[nodiscard]] double eval(double x) const noexcept {
    // Clenshaw, accumulated in extended precision
    const long double xl = x;
    long double b1 = 0.0L, b2 = 0.0L;
    for (int k = degree; k >= 1; --k) {
      const long double b0 = cheb_coeffs[k] + 2.0L * xl * b1 - b2;
      b2 = b1;
      b1 = b0;
    }
    return static_cast<double>(cheb_coeffs[0] + xl * b1 - b2);
  }

  /// p(x) and p'(x).
  [[nodiscard]] std::pair<double, double> eval_with_derivative(double x) const noexcept {
    double t0 = 1.0, t1 = x, d0 = 0.0, d1 = 1.0;
    double v = cheb_coeffs[0], d = 0.0;
    if (degree >= 1) {
      v += cheb_coeffs[1] * x;
      d += cheb_coeffs[1];
    }
    for (int k = 2; k <= degree; ++k) {
      const double t2 = 2.0 * x * t1 - t0;
      const double d2 = 2.0 * t1 + 2.0 * x * d1 - d0;
      v += cheb_coeffs[k] * t2;
      d += cheb_coeffs[k] * d2;
      t0 = t1;
      t1 = t2;
      d0 = d1;
      d1 = d2;
    }
    return {v, d};
  }

  /// Power-basis coefficients, ascending. Built from the roots when known.
  [[nodiscard]] std::vector<double> power_coeffs() const {
    if (roots) {
      std::vector<double> c{1.0};
      for (double r : *roots) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
          next[i + 1] += c[i];
          next[i] -= r * c[i];
        }
        c = std::move(next);
      }
      return c;
    }
    // T_k expansion by recurrence on coefficient vectors
    std::vector<double> out(degree + 1, 0.0);
    std::vector<double> tm2{1.0}, tm1{0.0, 1.0};
    out[0] += cheb_coeffs[0];
    if (degree >= 1) out[1] += cheb_coeffs[1];
    for (int k = 2; k <= degree; ++k) {
      std::vector<double> tk(k + 1, 0.0);
      for (std::size_t i = 0; i < tm1.size(); ++i) tk[i + 1] += 2.0 * tm1[i];
      for (std::size_t i = 0; i < tm2.size(); ++i) tk[i] -= tm2[i];
      for (int i = 0; i <= k; ++i) out[i] += cheb_coeffs[k] * tk[i];
      tm2 = std::move(tm1);
      tm1 = std::move(tk);
    }
    return out;
  }
};

struct SolveOptions {
  double tolerance = 1e-12;
  int max_iter = 60;
  int grid_factor = 30;
};

struct ChebyshevSolution {
  WeightParams weight;
  MonicPolynomial poly;
  std::vector<double> reference;  // n+1 alternation points, increasing
  double norm = 0.0;              // max of w|p| over [-1, 1]
  double widom = 0.0;             // 2^n * norm
  int iterations = 0;
  double levelling_defect = 0.0;  // (max|e| - |h|) / max|e|
  /// min_j |w(x_j) p(x_j)|: a lower bound for the minimax value.
  double lower_bound = 0.0;
};

/// Thrown when the exchange does not level within max_iter steps.
class NonConvergenceError : public NumericError {
 public:
  NonConvergenceError(const std::string& what, ChebyshevSolution best)
      : NumericError(what), best_(std::move(best)) {}
  [[nodiscard]] const ChebyshevSolution& best() const noexcept { return best_; }
  [[nodiscard]] double defect() const noexcept { return best_.levelling_defect; }

 private:
  ChebyshevSolution best_;
};

/// A local extremum of the weighted error e = w p.
struct Extremum {
  double theta;
  double value;  // signed e(theta)

  [[nodiscard]] double x() const noexcept { return std::cos(theta); }
};

namespace detail {

inline double chebyshev_leading(int n) { return n == 0 ? 1.0 : std::ldexp(1.0, 1 - n); }

inline double weighted_error(WeightParams w, const MonicPolynomial& p, double theta) {
  return weight_at_angle(w, theta) * p.eval(std::cos(theta));
}

/// A positive multiple of d/dtheta [w p](theta) on (0, pi): the weight factor
/// is divided out, and p(cos theta) = sum c_k cos(k theta) is differentiated
/// term by term.
inline double error_slope(WeightParams w, const MonicPolynomial& p, double theta) {
  const long double c1 = std::cos(static_cast<long double>(theta));
  const long double s1 = std::sin(static_cast<long double>(theta));
  long double ck = 1.0L, sk = 0.0L;  // cos(k theta), sin(k theta) by rotation
  long double v = 0.0L, dv = 0.0L;
  for (int k = 0; k <= p.degree; ++k) {
    v += p.cheb_coeffs[k] * ck;
    dv -= k * p.cheb_coeffs[k] * sk;
    const long double next_c = ck * c1 - sk * s1;
    sk = sk * c1 + ck * s1;
    ck = next_c;
  }
  long double log_w = 0.0L;
  if (w.rho_a != 0.0) log_w += w.rho_a / std::tan(theta / 2.0L);
  if (w.rho_b != 0.0) log_w -= w.rho_b * std::tan(theta / 2.0L);
  return static_cast<double>(log_w * v + dv);
}

/// Interior local maximum of |w p| near `seed`: the sign change of the slope
/// inside [lo, hi] located to full precision. Falls back to `seed` when the
/// slope does not change sign there.
inline GridMax polish_extremum(WeightParams w, const MonicPolynomial& p, double lo, double hi,
                               GridMax seed) {
  auto g = [&](double t) { return error_slope(w, p, t); };
  const double glo = g(lo), ghi = g(hi);
  if (!std::isfinite(glo) || !std::isfinite(ghi) || glo == 0.0 || ghi == 0.0 ||
      (glo > 0.0) == (ghi > 0.0))
    return seed;
  std::uintmax_t iters = 100;
  auto tol = [](double a, double b) { return std::abs(b - a) <= 4e-16 * std::max(1.0, std::abs(a)); };
  const auto [a, b] = boost::math::tools::toms748_solve(g, lo, hi, glo, ghi, tol, iters);
  const double t = 0.5 * (a + b);
  const double v = std::abs(weighted_error(w, p, t));
  // both locate the same maximum; Brent's value may sit a rounding above
  return {t, std::max(v, seed.value)};
}

/// Gaussian elimination with partial pivoting, in place. Returns false when a
/// pivot underflows relative to the matrix scale.
inline bool solve_dense(std::vector<long double>& a, std::vector<long double>& rhs, int m) {
  long double scale = 0.0;
  for (long double v : a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return false;
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r)
      if (std::abs(a[r * m + col]) > std::abs(a[piv * m + col])) piv = r;
    if (std::abs(a[piv * m + col]) <= 1e-14 * scale) return false;
    if (piv != col) {
      for (int c = 0; c < m; ++c) std::swap(a[col * m + c], a[piv * m + c]);
      std::swap(rhs[col], rhs[piv]);
    }
    for (int r = col + 1; r < m; ++r) {
      const long double f = a[r * m + col] / a[col * m + col];
      if (f == 0.0) continue;
      for (int c = col; c < m; ++c) a[r * m + c] -= f * a[col * m + c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (int r = m - 1; r >= 0; --r) {
    long double s = rhs[r];
    for (int c = r + 1; c < m; ++c) s -= a[r * m + c] * rhs[c];
    rhs[r] = s / a[r * m + r];
  }
  return true;
}

/// Leveled system on a reference given by angles in decreasing order
/// (x increasing). Returns the polynomial and the signed leveled error h with
/// w(x_j) p(x_j) = (-1)^{n-j} h.
inline std::pair<MonicPolynomial, double> leveled_system_angles(WeightParams w, int n,
                                                                std::span<const double> thetas) {
  const int m = n + 1;
  if (static_cast<int>(thetas.size()) != m)
    throw DomainError("leveled_system: reference must have degree+1 points");
  // Unknowns: d_0..d_{n-1}, H with p = 2^{1-n} (T_n + sum d_k T_k), h = 2^{1-n} H.
  std::vector<long double> a(static_cast<std::size_t>(m) * m, 0.0L);
  std::vector<long double> rhs(m, 0.0L);
  for (int j = 0; j < m; ++j) {
    const long double th = thetas[j];
    const long double wj = weight_at_angle(w, thetas[j]);
    for (int k = 0; k < n; ++k) a[j * m + k] = wj * std::cos(k * th);
    a[j * m + n] = ((n - j) % 2 == 0) ? -1.0L : 1.0L;
    rhs[j] = -wj * std::cos(n * th);
  }
  if (!solve_dense(a, rhs, m)) throw DegeneracyError("leveled_system: singular system");
  const double lead = chebyshev_leading(n);
  MonicPolynomial p;
  p.degree = n;
  p.cheb_coeffs.assign(m, 0.0);
  for (int k = 0; k < n; ++k) p.cheb_coeffs[k] = static_cast<double>(rhs[k] * lead);
  p.cheb_coeffs[n] = lead;
  if (n == 0) p.cheb_coeffs[0] = 1.0;
  const double h = static_cast<double>(rhs[n] * lead);
  if (!(std::abs(h) > 0.0) || !std::isfinite(h))
    throw DegeneracyError("leveled_system: leveled error vanished");
  return {std::move(p), h};
}

}  // namespace detail

/// Solve the leveled system on a reference of n+1 increasing points in (-1,1).
inline std::pair<MonicPolynomial, double> leveled_system(WeightParams w, int n,
                                                         std::span<const double> reference) {
  std::vector<double> thetas;
  thetas.reserve(reference.size());
  for (std::size_t j = 0; j < reference.size(); ++j) {
    if (j > 0 && !(reference[j] > reference[j - 1]))
      throw DomainError("leveled_system: reference must be strictly increasing");
    if (reference[j] < -1.0 || reference[j] > 1.0)
      throw DomainError("leveled_system: reference outside [-1, 1]");
    thetas.push_back(std::acos(reference[j]));
  }
  return detail::leveled_system_angles(w, n, thetas);
}

/// Local extrema of e = w p over [-1, 1], ordered by increasing x, with
/// consecutive same-sign extrema merged (the larger |e| is kept).
/// `grid_points` uniform theta samples, each grid maximum polished by Brent.
inline std::vector<Extremum> find_extrema(WeightParams w, const MonicPolynomial& p,
                                          int grid_points) {
  const int g = std::max(grid_points, 8);
  const double step = std::numbers::pi / (g - 1);
  std::vector<double> th(g), e(g);
  for (int i = 0; i < g; ++i) {
    th[i] = i + 1 == g ? std::numbers::pi : i * step;
    e[i] = detail::weighted_error(w, p, th[i]);
  }
  std::vector<Extremum> raw;
  for (int i = 0; i < g; ++i) {
    const double v = std::abs(e[i]);
    if (v == 0.0) continue;
    const double left = i == 0 ? -1.0 : std::abs(e[i - 1]);
    const double right = i + 1 == g ? -1.0 : std::abs(e[i + 1]);
    if (v < left || v < right) continue;
    const double sign = e[i] > 0.0 ? 1.0 : -1.0;
    auto f = [&](double t) { return sign * detail::weighted_error(w, p, t); };
    const double lo = i == 0 ? 0.0 : th[i - 1];
    const double hi = i + 1 == g ? std::numbers::pi : th[i + 1];
    auto best = detail::refine_max(f, lo, hi, {th[i], v});
    if (i > 0 && i + 1 < g) best = detail::polish_extremum(w, p, lo, hi, best);
    raw.push_back({best.arg, sign * best.value});
  }
  // increasing x means decreasing theta
  std::reverse(raw.begin(), raw.end());
  std::vector<Extremum> out;
  for (const auto& ex : raw) {
    if (!out.empty() && (out.back().value > 0.0) == (ex.value > 0.0)) {
      if (std::abs(ex.value) > std::abs(out.back().value)) out.back() = ex;
    } else {
      out.push_back(ex);
    }
  }
  return out;
}

/// Multi-point exchange: reduce an alternating list of candidates to n+1
/// alternating points that keep the global maximum of |e|.
inline std::vector<Extremum> exchange(std::span<const Extremum> /*old_reference*/,
                                      std::vector<Extremum> candidates, int n) {
  const std::size_t want = static_cast<std::size_t>(n) + 1;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if ((candidates[i].value > 0.0) == (candidates[i - 1].value > 0.0))
      throw ExchangeError("exchange: candidates do not alternate");
  if (candidates.size() < want)
    throw ExchangeError("exchange: " + std::to_string(candidates.size()) +
                        " alternation points found, need " + std::to_string(want));
  auto mag = [](const Extremum& e) { return std::abs(e.value); };
  while (candidates.size() > want) {
    if (candidates.size() == want + 1) {
      if (mag(candidates.front()) < mag(candidates.back())) candidates.erase(candidates.begin());
      else candidates.pop_back();
      continue;
    }
    std::size_t imin = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
      if (mag(candidates[i]) < mag(candidates[imin])) imin = i;
    if (imin == 0 || imin + 1 == candidates.size()) {
      candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(imin));
      continue;
    }
    // dropping an interior point leaves its neighbours with equal sign;
    // keep the larger of the two
    const std::size_t drop =
        mag(candidates[imin - 1]) < mag(candidates[imin + 1]) ? imin - 1 : imin + 1;
    const std::size_t lo = std::min(imin, drop);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(lo),
                     candidates.begin() + static_cast<std::ptrdiff_t>(lo) + 2);
  }
  return candidates;
}

/// Starting reference: cos(j pi / n), j = 0..n, with the endpoint moved to
/// cos(pi/(2n+2)) where the weight vanishes. Returned as angles, decreasing.
inline std::vector<double> initial_reference_angles(WeightParams w, int n) {
  std::vector<double> th(n + 1);
  for (int j = 0; j <= n; ++j) th[j] = std::numbers::pi * (n - j) / n;
  const double shift = std::numbers::pi / (2.0 * n + 2.0);
  if (w.rho_a > 0.0) th[n] = shift;
  if (w.rho_b > 0.0) th[0] = std::numbers::pi - shift;
  return th;
}

namespace detail {

/// Roots of p: one per interval between consecutive reference points, where p
/// changes sign. Safeguarded Newton (bisection fallback).
inline std::vector<double> roots_between(const MonicPolynomial& p, std::span<const double> ref) {
  std::vector<double> roots;
  for (std::size_t j = 0; j + 1 < ref.size(); ++j) {
    double lo = ref[j], hi = ref[j + 1];
    double vlo = p.eval(lo);
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
      const auto [v, d] = p.eval_with_derivative(x);
      if (v == 0.0) break;
      if ((v > 0.0) == (vlo > 0.0)) {
        lo = x;
        vlo = v;
      } else {
        hi = x;
      }
      double next = d != 0.0 ? x - v / d : 0.5 * (lo + hi);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      const double dx = std::abs(next - x);
      x = next;
      if (dx <= 4e-16 * std::max(1.0, std::abs(x)) || hi - lo <= 4e-16) break;
    }
    roots.push_back(x);
  }
  return roots;
}

}  // namespace detail

/// Weighted Chebyshev polynomial of degree n >= 1.
inline ChebyshevSolution solve(WeightParams w, int n, const SolveOptions& opts = {}) {
  if (n < 1) throw DomainError("solve: degree must be >= 1");
  if (!(w.rho_a >= 0.0) || !(w.rho_b >= 0.0))
    throw DomainError("solve: weight exponents must be non-negative");
  const int grid = opts.grid_factor * n + 200;

  std::vector<double> ref = initial_reference_angles(w, n);
  ChebyshevSolution best;
  best.weight = w;
  best.levelling_defect = INFINITY;

  for (int it = 1; it <= opts.max_iter; ++it) {
    for (std::size_t j = 1; j < ref.size(); ++j)
      if (!(ref[j - 1] - ref[j] > 1e-14))
        throw DegeneracyError("solve: reference collapsed", static_cast<int>(j));

    auto [poly, h] = detail::leveled_system_angles(w, n, ref);
    auto ext = find_extrema(w, poly, grid);
    double emax = 0.0;
    for (const auto& e : ext) emax = std::max(emax, std::abs(e.value));
    const double defect = (emax - std::abs(h)) / emax;

    std::vector<Extremum> old;
    old.reserve(ref.size());
    for (double t : ref) old.push_back({t, 0.0});
    auto next = exchange(old, std::move(ext), n);

    ChebyshevSolution cur;
    cur.weight = w;
    cur.poly = std::move(poly);
    cur.norm = emax;
    cur.widom = std::ldexp(emax, n);
    cur.iterations = it;
    cur.levelling_defect = std::max(defect, 0.0);
    cur.lower_bound = INFINITY;
    for (const auto& e : next) {
      cur.reference.push_back(e.x());
      cur.lower_bound = std::min(cur.lower_bound, std::abs(e.value));
    }

    double moved = 0.0;
    for (std::size_t j = 0; j < ref.size(); ++j)
      moved = std::max(moved, std::abs(std::cos(ref[j]) - std::cos(next[j].theta)));

    const bool done = cur.levelling_defect <= opts.tolerance;
    if (cur.levelling_defect < best.levelling_defect || done) best = cur;
    if (done) {
      best.poly.roots = detail::roots_between(best.poly, best.reference);
      return best;
    }
    if (moved <= 1e-14) break;
    for (std::size_t j = 0; j < ref.size(); ++j) ref[j] = next[j].theta;
  }
  best.poly.roots = detail::roots_between(best.poly, best.reference);
  throw NonConvergenceError("solve: levelling defect " + std::to_string(best.levelling_defect) +
                                " above tolerance",
                            std::move(best));
}

/// max over [-1,1] of w(x) |prod (x - r_k)| for given roots (dense theta grid,
/// Brent-polished). Used to re-evaluate stored solutions.
inline double weighted_sup_from_roots(WeightParams w, std::span<const double> roots,
                                      int grid_points = 0) {
  auto f = [&](double theta) {
    const double x = std::cos(theta);
    double v = weight_at_angle(w, theta);
    for (double r : roots) v *= (x - r);
    return std::abs(v);
  };
  const int g = grid_points > 0 ? grid_points : 30 * static_cast<int>(roots.size()) + 200;
  return detail::maximize_on_grid(f, 0.0, std::numbers::pi, static_cast<std::size_t>(g)).value;
}

}  // namespace jwidom
