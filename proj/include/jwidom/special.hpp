#pragma once

// Gamma arithmetic and classical Jacobi polynomials P_n^{(alpha,beta)}.

#include "jwidom/detail/maximize.hpp"
#include "jwidom/errors.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace jwidom {

/// Orthogonality parameters of the measure (1-x)^alpha (1+x)^beta.
struct JacobiParams {
  double alpha = 0.0;
  double beta = 0.0;

  [[nodiscard]] double q() const noexcept { return std::max(alpha, beta); }

  static JacobiParams make(double alpha, double beta) {
    if (!(alpha > -1.0) || !(beta > -1.0))
      throw DomainError("Jacobi parameters must satisfy alpha, beta > -1");
    return {alpha, beta};
  }
};

/// Exponents of the weight (1-x)^rho_a (1+x)^rho_b on [-1, 1].
/// rho_a belongs to the endpoint x = +1, rho_b to x = -1.
struct WeightParams {
  double rho_a = 0.0;
  double rho_b = 0.0;

  static WeightParams make(double rho_a, double rho_b) {
    if (!(rho_a >= 0.0) || !(rho_b >= 0.0))
      throw DomainError("weight exponents must be non-negative");
    return {rho_a, rho_b};
  }

  friend bool operator==(const WeightParams&, const WeightParams&) = default;
};

/// ln Gamma(x) for x > 0.
inline double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("log_gamma requires a finite positive argument");
  return boost::math::lgamma(x);
}

inline WeightParams param_to_weight(JacobiParams p) noexcept {
  return {p.alpha / 2.0 + 0.25, p.beta / 2.0 + 0.25};
}

inline JacobiParams weight_to_param(WeightParams w) noexcept {
  return {2.0 * w.rho_a - 0.5, 2.0 * w.rho_b - 0.5};
}

struct JacobiValue {
  double value;
  double derivative;
};

/// P_n^{(alpha,beta)}(x) and d/dx by the forward three-term recurrence.
inline JacobiValue jacobi_eval(JacobiParams p, int n, double x) {
  if (n < 0) throw DomainError("jacobi_eval: negative degree");
  if (n == 0) return {1.0, 0.0};
  const double a = p.alpha;
  const double b = p.beta;
  double pm2 = 1.0, dm2 = 0.0;
  double pm1 = ((a + b + 2.0) * x + (a - b)) / 2.0;
  double dm1 = (a + b + 2.0) / 2.0;
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double den = 2.0 * k * (k + a + b) * (s - 2.0);
    const double lin = (s - 1.0) * s * (s - 2.0) / den;
    const double off = (s - 1.0) * (a * a - b * b) / den;
    const double back = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s / den;
    const double pk = (lin * x + off) * pm1 - back * pm2;
    const double dk = lin * pm1 + (lin * x + off) * dm1 - back * dm2;
    pm2 = pm1;
    dm2 = dm1;
    pm1 = pk;
    dm1 = dk;
  }
  return {pm1, dm1};
}

/// Factor turning P_n^{(alpha,beta)} into its monic version:
/// 2^n Gamma(n+1) Gamma(n+alpha+beta+1) / Gamma(2n+alpha+beta+1).
inline double monic_scale(JacobiParams p, int n) {
  if (n < 0) throw DomainError("monic_scale: negative degree");
  if (n == 0) return 1.0;
  const double s = p.alpha + p.beta;
  const double lg = n * std::numbers::ln2 + log_gamma(n + 1.0) + log_gamma(n + s + 1.0) -
                    log_gamma(2.0 * n + s + 1.0);
  return std::exp(lg);
}

namespace detail {

inline bool newton_jacobi_root(JacobiParams p, int n, double& x, double lo, double hi) {
  for (int it = 0; it < 100; ++it) {
    const auto [v, d] = jacobi_eval(p, n, x);
    if (v == 0.0) return true;
    if (std::abs(v) <= 1e-13 * std::abs(d)) return true;
    double next = x - v / d;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    // keep the bracket consistent with the sign of P_n
    const double vlo = jacobi_eval(p, n, lo).value;
    if ((vlo < 0.0) == (v < 0.0)) lo = x; else hi = x;
    x = next;
  }
  return false;
}

}  // namespace detail

/// The n zeros of P_n^{(alpha,beta)}, increasing, all in (-1, 1).
inline std::vector<double> jacobi_zeros(JacobiParams p, int n) {
  if (n < 1) throw DomainError("jacobi_zeros: degree must be >= 1");
  const double a = p.alpha;
  const double b = p.beta;
  std::vector<double> roots;
  roots.reserve(n);

  // Newton with deflation from Chebyshev-angle guesses, largest root first.
  bool ok = true;
  for (int k = 1; k <= n && ok; ++k) {
    double x = std::cos(std::numbers::pi * (k - 0.25 + a / 2.0) / (n + (a + b + 1.0) / 2.0));
    x = std::clamp(x, -1.0 + 1e-15, 1.0 - 1e-15);
    bool done = false;
    for (int it = 0; it < 100; ++it) {
      const auto [v, d] = jacobi_eval(p, n, x);
      double defl = 0.0;
      for (double r : roots) defl += 1.0 / (x - r);
      const double step = v / (d - v * defl);
      x -= step;
      if (!std::isfinite(x) || std::abs(x) >= 1.0) break;
      if (std::abs(step) <= 1e-14) {
        done = true;
        break;
      }
    }
    if (!done) ok = false;
    else roots.push_back(x);
  }
  if (ok) {
    std::sort(roots.begin(), roots.end());
    for (double& r : roots) {
      for (int it = 0; it < 2; ++it) {
        const auto [v, d] = jacobi_eval(p, n, r);
        if (d != 0.0) r -= v / d;
      }
      const auto [v, d] = jacobi_eval(p, n, r);
      if (!(std::abs(v) <= 1e-13 * std::abs(d)) || !(std::abs(r) < 1.0)) ok = false;
    }
    for (std::size_t i = 1; i < roots.size() && ok; ++i)
      if (!(roots[i] > roots[i - 1])) ok = false;
  }
  if (ok) return roots;

  // Fallback: bracket sign changes on a fine theta grid, then safeguarded Newton.
  roots.clear();
  const int m = 40 * n + 200;
  double x_prev = -1.0;
  double v_prev = jacobi_eval(p, n, x_prev).value;
  for (int i = m - 1; i >= 0; --i) {
    const double t = std::numbers::pi * i / m;
    const double x = std::cos(t);
    const double v = jacobi_eval(p, n, x).value;
    if (v == 0.0 && x < 1.0) {
      roots.push_back(x);
    } else if ((v < 0.0) != (v_prev < 0.0) && v_prev != 0.0) {
      double r = 0.5 * (x_prev + x);
      if (!detail::newton_jacobi_root(p, n, r, x_prev, x))
        throw NumericError("jacobi_zeros: Newton failed for root " +
                               std::to_string(roots.size() + 1),
                           static_cast<int>(roots.size()) + 1);
      roots.push_back(r);
    }
    x_prev = x;
    v_prev = v;
  }
  if (static_cast<int>(roots.size()) != n)
    throw NumericError("jacobi_zeros: found " + std::to_string(roots.size()) + " of " +
                           std::to_string(n) + " zeros",
                       static_cast<int>(roots.size()));
  return roots;
}

/// (1-x)^rho_a (1+x)^rho_b at x = cos(theta), evaluated through half angles.
inline double weight_at_angle(WeightParams w, double theta) {
  const double s = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  const double f1 = w.rho_a == 0.0 ? 1.0 : std::pow(2.0 * s * s, w.rho_a);
  const double f2 = w.rho_b == 0.0 ? 1.0 : std::pow(2.0 * c * c, w.rho_b);
  return f1 * f2;
}

/// sup over [-1,1] of (1-x)^rho_a (1+x)^rho_b |monic P_n^{(alpha,beta)}(x)|
/// with (alpha, beta) = weight_to_param(w).
inline double weighted_monic_jacobi_sup(WeightParams w, int n) {
  const JacobiParams p = weight_to_param(w);
  if (!(p.alpha > -1.0) || !(p.beta > -1.0))
    throw DomainError("weighted_monic_jacobi_sup: induced alpha, beta must exceed -1");
  if (n < 0) throw DomainError("weighted_monic_jacobi_sup: negative degree");
  const double scale = monic_scale(p, n);
  auto f = [&](double theta) {
    return weight_at_angle(w, theta) * std::abs(jacobi_eval(p, n, std::cos(theta)).value) * scale;
  };
  const auto points = static_cast<std::size_t>(50 * n + 501);
  return detail::maximize_on_grid(f, 0.0, std::numbers::pi, points).value;
}

}  // namespace jwidom
