#pragma once

// Coefficient-list polynomials (ascending powers) and Aberth-Ehrlich
// simultaneous root finding.

#include "jwidom/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace jwidom {

template <class T>
struct BasicPolynomial {
  std::vector<T> coeffs;  // coeffs[k] multiplies z^k

  BasicPolynomial() = default;
  explicit BasicPolynomial(std::vector<T> c) : coeffs(std::move(c)) { trim(); }

  static BasicPolynomial constant(T c) { return BasicPolynomial(std::vector<T>{c}); }
  static BasicPolynomial monomial(int k) {
    std::vector<T> c(k + 1, T{});
    c[k] = T{1};
    return BasicPolynomial(std::move(c));
  }

  [[nodiscard]] int degree() const noexcept {
    return coeffs.empty() ? -1 : static_cast<int>(coeffs.size()) - 1;
  }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs.empty(); }

  template <class U>
  [[nodiscard]] auto operator()(const U& z) const {
    using R = decltype(T{} * z);
    R acc{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + R(*it);
    return acc;
  }

  [[nodiscard]] BasicPolynomial derivative() const {
    if (coeffs.size() <= 1) return {};
    std::vector<T> d(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = coeffs[k] * static_cast<double>(k);
    return BasicPolynomial(std::move(d));
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    std::vector<T> c(std::max(a.coeffs.size(), b.coeffs.size()), T{});
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) c[k] += a.coeffs[k];
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) c[k] += b.coeffs[k];
    return BasicPolynomial(std::move(c));
  }
  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a + b * T{-1};
  }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.coeffs.size() + b.coeffs.size() - 1, T{});
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return BasicPolynomial(std::move(c));
  }
  friend BasicPolynomial operator*(const BasicPolynomial& a, T s) {
    std::vector<T> c = a.coeffs;
    for (auto& v : c) v *= s;
    return BasicPolynomial(std::move(c));
  }

 private:
  void trim() {
    while (!coeffs.empty() && coeffs.back() == T{}) coeffs.pop_back();
  }
};

using RealPolynomial = BasicPolynomial<double>;
using ComplexPolynomial = BasicPolynomial<std::complex<double>>;

inline ComplexPolynomial to_complex(const RealPolynomial& p) {
  std::vector<std::complex<double>> c(p.coeffs.begin(), p.coeffs.end());
  return ComplexPolynomial(std::move(c));
}

struct AberthOptions {
  double initial_radius = 0.9;
  double tolerance = 1e-12;
  int max_sweeps = 200;
};

/// All complex roots by Aberth-Ehrlich iteration, followed by a Newton polish.
inline std::vector<std::complex<double>> aberth_roots(const ComplexPolynomial& p,
                                                      const AberthOptions& opts = {}) {
  using C = std::complex<double>;
  const int n = p.degree();
  if (n < 1) return {};
  const C lead = p.coeffs.back();
  std::vector<C> mc(p.coeffs.size());
  for (std::size_t k = 0; k < mc.size(); ++k) mc[k] = p.coeffs[k] / lead;
  const ComplexPolynomial monic(mc);
  const ComplexPolynomial dp = monic.derivative();

  std::vector<C> z(n);
  for (int k = 0; k < n; ++k)
    z[k] = std::polar(opts.initial_radius, 2.0 * std::numbers::pi * k / n + 0.4);

  bool converged = false;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    double biggest = 0.0;
    for (int k = 0; k < n; ++k) {
      const C v = monic(z[k]);
      if (v == C{}) continue;
      const C ratio = v / dp(z[k]);
      C repulse{};
      for (int j = 0; j < n; ++j)
        if (j != k) repulse += 1.0 / (z[k] - z[j]);
      const C step = ratio / (1.0 - ratio * repulse);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      biggest = std::max(biggest, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    converged = biggest <= opts.tolerance;
  }
  if (!converged) throw NumericError("aberth_roots: no convergence");
  for (auto& r : z) {
    for (int it = 0; it < 2; ++it) {
      const C d = dp(r);
      if (d == C{}) break;
      const C step = monic(r) / d;
      if (std::abs(step) > 1e-8 * std::max(1.0, std::abs(r))) break;
      r -= step;
    }
  }
  return z;
}

}  // namespace jwidom
