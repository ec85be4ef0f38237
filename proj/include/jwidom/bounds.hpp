#pragma once

// Bernstein-type bound M_n(alpha, beta) for weighted monic Jacobi polynomials,
// its successive-ratio function, and the sign analysis of the numerator
// coefficients of f'/f.

#include "jwidom/errors.hpp"
#include "jwidom/special.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace jwidom {

namespace detail {

inline void require_bound_square(JacobiParams p, const char* who) {
  constexpr double slack = 1e-15;
  if (p.alpha < -0.5 - slack || p.alpha > 0.5 + slack || p.beta < -0.5 - slack ||
      p.beta > 0.5 + slack)
    throw DomainError(std::string(who) + ": alpha, beta must lie in [-1/2, 1/2]");
}

}  // namespace detail

/// M_n(alpha, beta) in its reduced Gamma form:
///
///   2^{(1-a-b)/2} G(n+q+1) G(n+a+b+1)
///   -----------------------------------------------------------
///   (n+(a+b+1)/2)^{q+1/2} G(n+(a+b+1)/2) G(n+(a+b)/2+1)
///
/// with q = max(a, b). Upper bound for 2^n times the weighted sup of the
/// monic Jacobi polynomial; increases to 2^{1-rho_a-rho_b}.
inline double m_bound(JacobiParams p, int n) {
  detail::require_bound_square(p, "m_bound");
  if (n < 1) throw DomainError("m_bound: degree must be >= 1");
  const double a = p.alpha, b = p.beta, q = p.q();
  const double h = n + (a + b + 1.0) / 2.0;
  // Gamma quotients of nearby arguments directly: differences of log_gamma
  // values near n log n would lose about log10(n log n) digits.
  const double r1 = boost::math::tgamma_ratio(n + q + 1.0, h);
  const double r2 = boost::math::tgamma_ratio(n + a + b + 1.0, n + (a + b) / 2.0 + 1.0);
  const double lg = (1.0 - a - b) / 2.0 * std::numbers::ln2 + std::log(r1) + std::log(r2) -
                    (q + 0.5) * std::log(h);
  return std::exp(lg);
}

/// f(x); at integer x = n this is M_{n+1} / M_n.
inline double m_ratio(JacobiParams p, double x) {
  if (!(x > 0.0)) throw DomainError("m_ratio: x must be positive");
  const double a = p.alpha, b = p.beta, q = p.q();
  const double h = x + (a + b + 1.0) / 2.0;
  // Group the power factors as (h/(h+1))^{q+1/2} / h so the x -> infinity
  // limit does not lose digits.
  const double num = (x + q + 1.0) * (x + a + b + 1.0);
  const double den = h * (x + (a + b) / 2.0 + 1.0);
  return num / den * std::exp((q + 0.5) * std::log1p(-1.0 / (h + 1.0)));
}

struct CCoeffs {
  double c0;
  double c1;
  double c2;
};

/// Numerator coefficients of f'/f (the polynomial c2 x^2 + c1 x + c0).
inline CCoeffs c_coeffs(JacobiParams p) noexcept {
  const double a = p.alpha, b = p.beta;
  const double a2 = a * a, a3 = a2 * a, a4 = a3 * a;
  const double b2 = b * b, b3 = b2 * b, b4 = b3 * b;
  const double c2 = a2 / 2.0 + b2 / 2.0 - 0.25;
  const double c1 = 3.0 * a3 / 4.0 + (4.0 * b + 8.0) * a2 / 8.0 + (b2 - 1.0) * a / 4.0 + b3 / 2.0 +
                    b2 - b / 4.0 - 0.5;
  const double c0 = a4 / 4.0 + (3.0 * b + 6.0) * a3 / 8.0 + (b + 2.0) * (b + 2.0) * a2 / 8.0 +
                    (b2 - 1.0) * (b + 2.0) * a / 8.0 + b4 / 8.0 + b3 / 2.0 + 3.0 * b2 / 8.0 -
                    b / 4.0 - 0.25;
  return {c0, c1, c2};
}

/// Factored forms of c0, c1 along the three edges of the triangle
/// -1/2 <= beta <= alpha <= 1/2, t in [0, 1].
enum class TriangleEdge { AlphaHalf, BetaMinusHalf, Diagonal };

inline JacobiParams edge_point(TriangleEdge e, double t) noexcept {
  switch (e) {
    case TriangleEdge::AlphaHalf: return {0.5, t - 0.5};
    case TriangleEdge::BetaMinusHalf: return {t - 0.5, -0.5};
    case TriangleEdge::Diagonal: return {t - 0.5, t - 0.5};
  }
  return {};
}

inline double c0_on_edge(TriangleEdge e, double t) noexcept {
  switch (e) {
    case TriangleEdge::AlphaHalf: return (t + 2.5) * (t + 1.0) * t * (t - 1.0) / 8.0;
    case TriangleEdge::BetaMinusHalf: return t * (t - 1.0) * (t * t / 4.0 + 5.0 * t / 16.0 + 0.125);
    case TriangleEdge::Diagonal: return (t + 0.5) * (t + 0.5) * t * (t - 1.0);
  }
  return 0.0;
}

inline double c1_on_edge(TriangleEdge e, double t) noexcept {
  switch (e) {
    case TriangleEdge::AlphaHalf: return t * (t - 1.0) * (t / 2.0 + 0.875);
    case TriangleEdge::BetaMinusHalf: return 0.75 * t * (t - 1.0) * (t + 0.5);
    case TriangleEdge::Diagonal: return 2.0 * (t + 0.5) * t * (t - 1.0);
  }
  return 0.0;
}

/// Gamma(q+1)/Gamma(1/2) * binom(n+q, n) * (n+(a+b+1)/2)^{-q-1/2}.
inline double cgw_rhs(JacobiParams p, int n) {
  detail::require_bound_square(p, "cgw_rhs");
  if (n < 1) throw DomainError("cgw_rhs: degree must be >= 1");
  const double a = p.alpha, b = p.beta, q = p.q();
  const double lg = log_gamma(q + 1.0) - 0.5 * std::log(std::numbers::pi) +
                    log_gamma(n + q + 1.0) - log_gamma(q + 1.0) - log_gamma(n + 1.0) -
                    (q + 0.5) * std::log(n + (a + b + 1.0) / 2.0);
  return std::exp(lg);
}

/// 2^{1-rho_a-rho_b}: the limit of the Widom factors.
inline double asymptote(WeightParams w) noexcept {
  return std::exp2(1.0 - w.rho_a - w.rho_b);
}

/// max over [-1,1] of (1-x)^rho_a (1+x)^rho_b, attained at
/// x* = (rho_b - rho_a)/(rho_a + rho_b). 0^0 counts as 1.
inline double weight_sup_bound(WeightParams w) noexcept {
  const double s = w.rho_a + w.rho_b;
  if (s == 0.0) return 1.0;
  const double fa = w.rho_a == 0.0 ? 1.0 : std::pow(2.0 * w.rho_a / s, w.rho_a);
  const double fb = w.rho_b == 0.0 ? 1.0 : std::pow(2.0 * w.rho_b / s, w.rho_b);
  return fa * fb;
}

/// Result of checking M_n monotonicity for one parameter pair.
struct BoundReport {
  int n_first = 1;
  int n_last = 1;
  std::vector<double> values;  // M_n for n = n_first..n_last
  bool monotone = true;        // M_{n+1} >= M_n throughout
  bool strict = true;          // M_{n+1} > M_n throughout
  double limit = 0.0;          // 2^{1-rho_a-rho_b}
  double max_violation = 0.0;  // largest M_n (1 - M_{n+1}/M_n) (0 when monotone)
};

inline BoundReport verify_m_monotone(JacobiParams p, int n_max) {
  if (n_max < 2) throw DomainError("verify_m_monotone: n_max must be >= 2");
  BoundReport r;
  r.n_last = n_max;
  r.limit = asymptote(param_to_weight(p));
  r.values.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) r.values.push_back(m_bound(p, n));
  // Differences of neighbouring values drown in the rounding of log_gamma
  // once n is large, so steps are judged by the ratio M_{n+1}/M_n = f(n),
  // which m_ratio evaluates to a few ulps. At the corners f is exactly 1.
  constexpr double ulps = 8.0 * std::numeric_limits<double>::epsilon();
  for (int n = 1; n < n_max; ++n) {
    const double excess = m_ratio(p, n) - 1.0;
    if (excess < -ulps) {
      r.monotone = false;
      r.max_violation = std::max(r.max_violation, -excess * r.values[n - 1]);
    }
    if (!(excess > ulps)) r.strict = false;
  }
  return r;
}

struct CoeffPoint {
  double alpha;
  double beta;
  double value;
};

/// Sign analysis of c0, c1, c2 over the closed triangle -1/2 <= beta <= alpha <= 1/2.
struct CoeffLemmaReport {
  int samples = 0;
  std::size_t points_checked = 0;
  double max_c0 = -INFINITY;
  double max_c1 = -INFINITY;
  double max_c2 = -INFINITY;
  /// Largest amount by which any c_k exceeds the 1e-12 threshold (0 = clean).
  double max_violation = 0.0;
  std::vector<CoeffPoint> violations;
  /// Points where some c_k is within 1e-12 of zero.
  std::vector<CoeffPoint> equality_points;
  /// True iff every equality point is a vertex with |alpha| = |beta| = 1/2.
  bool equality_only_at_vertices = true;
  /// max |factored - direct| over the edge parametrizations.
  double max_factorization_error = 0.0;

  [[nodiscard]] bool passed() const noexcept {
    return violations.empty() && equality_only_at_vertices && max_factorization_error <= 1e-12;
  }
};

inline CoeffLemmaReport verify_coeff_lemma(int samples) {
  if (samples < 2) throw DomainError("verify_coeff_lemma: samples must be >= 2");
  constexpr double eps = 1e-12;
  CoeffLemmaReport r;
  r.samples = samples;

  auto is_vertex = [](double a, double b) {
    return std::abs(std::abs(a) - 0.5) <= 1e-14 && std::abs(std::abs(b) - 0.5) <= 1e-14;
  };
  auto visit = [&](double a, double b) {
    const CCoeffs c = c_coeffs({a, b});
    ++r.points_checked;
    r.max_c0 = std::max(r.max_c0, c.c0);
    r.max_c1 = std::max(r.max_c1, c.c1);
    r.max_c2 = std::max(r.max_c2, c.c2);
    const double worst = std::max({c.c0, c.c1, c.c2});
    if (worst > eps) {
      r.max_violation = std::max(r.max_violation, worst - eps);
      r.violations.push_back({a, b, worst});
    }
    const double closest = std::min({std::abs(c.c0), std::abs(c.c1), std::abs(c.c2)});
    if (closest <= eps) {
      r.equality_points.push_back({a, b, closest});
      if (!is_vertex(a, b)) r.equality_only_at_vertices = false;
    }
  };

  const double step = 1.0 / (samples - 1);
  for (int i = 0; i < samples; ++i) {
    const double a = i + 1 == samples ? 0.5 : -0.5 + i * step;
    for (int j = 0; j <= i; ++j) {
      const double b = j == i ? a : -0.5 + j * step;
      visit(a, b);
    }
  }

  // Edges: the printed factorizations against direct evaluation. The quarter
  // points are always included.
  std::vector<double> ts{0.0, 0.25, 0.5, 0.75, 1.0};
  for (int k = 0; k <= samples; ++k) ts.push_back(static_cast<double>(k) / samples);
  for (TriangleEdge e : {TriangleEdge::AlphaHalf, TriangleEdge::BetaMinusHalf, TriangleEdge::Diagonal}) {
    for (double t : ts) {
      const JacobiParams p = edge_point(e, t);
      const CCoeffs c = c_coeffs(p);
      r.max_factorization_error = std::max(
          {r.max_factorization_error, std::abs(c.c0 - c0_on_edge(e, t)),
           std::abs(c.c1 - c1_on_edge(e, t))});
      visit(p.alpha, p.beta);
    }
  }
  return r;
}

}  // namespace jwidom
