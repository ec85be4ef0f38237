#pragma once

// Unit-circle side of the correspondence x = (z + 1/z)/2: the circle
// minimizer built from an interval Chebyshev polynomial, the norm relation
// C_n = 2^{n+rho_a+rho_b-1} I_n, and the two circle facts the construction
// relies on (Erdos-Lax equality for generalized polynomials with zeros on the
// circle, and the Polya-Szego combination).

#include "jwidom/bounds.hpp"
#include "jwidom/detail/maximize.hpp"
#include "jwidom/errors.hpp"
#include "jwidom/minimax.hpp"
#include "jwidom/polynomial.hpp"
#include "jwidom/special.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace jwidom {

/// |z-1|^{exp_plus} |z+1|^{exp_minus} |poly(z)| on |z| = 1.
struct CircleFunction {
  double exp_plus = 0.0;
  double exp_minus = 0.0;
  RealPolynomial poly = RealPolynomial::constant(1.0);

  [[nodiscard]] double modulus(double phi) const {
    const double dp = 2.0 * std::abs(std::sin(phi / 2.0));
    const double dm = 2.0 * std::abs(std::cos(phi / 2.0));
    const double fp = exp_plus == 0.0 ? 1.0 : std::pow(dp, exp_plus);
    const double fm = exp_minus == 0.0 ? 1.0 : std::pow(dm, exp_minus);
    return fp * fm * std::abs(poly(std::polar(1.0, phi)));
  }
};

/// R(z) = prod (z^2 - 2 cos(theta_k) z + 1).
inline RealPolynomial angles_to_real_poly(std::span<const double> angles) {
  RealPolynomial r = RealPolynomial::constant(1.0);
  for (double t : angles) r = r * RealPolynomial({1.0, -2.0 * std::cos(t), 1.0});
  return r;
}

/// Circle minimizer for exponents 2 rho - 1 from the interval roots
/// cos(theta_k): Q = [2 rho_a (z+1) R + 2 rho_b (z-1) R + (z^2-1) R'] / (2 rho_a + 2 rho_b + 2n).
inline CircleFunction circle_minimizer_from_roots(WeightParams w, std::span<const double> roots) {
  if (!(w.rho_a >= 0.5) || !(w.rho_b >= 0.5))
    throw DomainError("circle_minimizer_from_interval: requires rho_a, rho_b >= 1/2");
  std::vector<double> angles;
  angles.reserve(roots.size());
  for (double r : roots) angles.push_back(std::acos(std::clamp(r, -1.0, 1.0)));
  const RealPolynomial big_r = angles_to_real_poly(angles);
  const RealPolynomial zp1({1.0, 1.0});
  const RealPolynomial zm1({-1.0, 1.0});
  const RealPolynomial z2m1({-1.0, 0.0, 1.0});
  const double n = static_cast<double>(roots.size());
  RealPolynomial q = zp1 * big_r * (2.0 * w.rho_a) + zm1 * big_r * (2.0 * w.rho_b) +
                     z2m1 * big_r.derivative();
  q = q * (1.0 / (2.0 * w.rho_a + 2.0 * w.rho_b + 2.0 * n));
  return {2.0 * w.rho_a - 1.0, 2.0 * w.rho_b - 1.0, std::move(q)};
}

inline CircleFunction circle_minimizer_from_interval(WeightParams w, const ChebyshevSolution& sol) {
  if (!sol.poly.roots) throw DomainError("circle_minimizer_from_interval: solution has no roots");
  return circle_minimizer_from_roots(w, *sol.poly.roots);
}

/// max over |z| = 1 of f. The phi-grid starts at `grid` points (at least
/// 4096) and doubles until two successive maxima agree to 1e-10.
inline double circle_sup(const CircleFunction& f, int grid = 0) {
  auto g = [&](double phi) { return f.modulus(phi); };
  std::size_t points = static_cast<std::size_t>(std::max(grid, 4096));
  double prev = detail::maximize_on_grid(g, 0.0, 2.0 * std::numbers::pi, points).value;
  for (int round = 0; round < 6; ++round) {
    points *= 2;
    const double cur = detail::maximize_on_grid(g, 0.0, 2.0 * std::numbers::pi, points).value;
    if (std::abs(cur - prev) <= 1e-10 * std::max(cur, 1e-300)) return std::max(cur, prev);
    prev = std::max(cur, prev);
  }
  return prev;
}

struct CnRelation {
  double c_n;
  double i_n;
  double ratio_defect;  // |C_n - 2^{n+rho_a+rho_b-1} I_n| / C_n
};

inline CnRelation verify_cn_relation(WeightParams w, int n, const SolveOptions& opts = {}) {
  if (!(w.rho_a >= 0.5) || !(w.rho_b >= 0.5))
    throw DomainError("verify_cn_relation: requires rho_a, rho_b >= 1/2");
  if (n < 0) throw DomainError("verify_cn_relation: negative degree");
  double i_n = 0.0;
  CircleFunction f;
  if (n == 0) {
    i_n = weight_sup_bound(w);
    f = circle_minimizer_from_roots(w, {});
  } else {
    const ChebyshevSolution sol = solve(w, n, opts);
    i_n = sol.norm;
    f = circle_minimizer_from_interval(w, sol);
  }
  const double c_n = circle_sup(f);
  const double predicted = std::exp2(n + w.rho_a + w.rho_b - 1.0) * i_n;
  return {c_n, i_n, std::abs(c_n - predicted) / c_n};
}

struct ErdosLax {
  double lhs;  // max |F'| on the circle
  double rhs;  // (sum s_j)/2 * max |F|
};

namespace detail {

/// |F(e^{i phi})| and |F'(e^{i phi})| for F = prod (z - e^{i a_j})^{s_j}.
inline std::pair<double, double> generalized_poly_moduli(std::span<const double> angles,
                                                         std::span<const double> exps,
                                                         double phi) {
  using C = std::complex<double>;
  const std::size_t m = angles.size();
  std::vector<double> dist(m);
  double closest = INFINITY;
  double modf = 1.0;
  for (std::size_t j = 0; j < m; ++j) {
    dist[j] = 2.0 * std::abs(std::sin((phi - angles[j]) / 2.0));
    closest = std::min(closest, dist[j]);
    modf *= std::pow(dist[j], exps[j]);
  }
  // 1/(z - e^{i a}) has direction conj of (z - e^{i a}) / |.|, with
  // z - e^{i a} = 2i sin((phi - a)/2) e^{i (phi + a)/2}.
  auto inv_dir = [&](std::size_t j) {
    const double s = std::sin((phi - angles[j]) / 2.0);
    const C dir = C(0.0, s >= 0.0 ? 1.0 : -1.0) * std::polar(1.0, (phi + angles[j]) / 2.0);
    return std::conj(dir);
  };
  if (closest >= 1e-3) {
    C sum{};
    for (std::size_t j = 0; j < m; ++j) sum += exps[j] / dist[j] * inv_dir(j);
    return {modf, modf * std::abs(sum)};
  }
  // product rule, each term without the vanishing factor divided out
  C sum{};
  for (std::size_t j = 0; j < m; ++j) {
    double term = exps[j] * std::pow(dist[j], exps[j] - 1.0);
    for (std::size_t k = 0; k < m; ++k)
      if (k != j) term *= std::pow(dist[k], exps[k]);
    sum += term * inv_dir(j);
  }
  return {modf, std::abs(sum)};
}

}  // namespace detail

inline ErdosLax erdos_lax_check(std::span<const double> angles, std::span<const double> exponents,
                                int grid = 8192) {
  if (angles.size() != exponents.size())
    throw DomainError("erdos_lax_check: angles and exponents differ in length");
  double total = 0.0;
  for (double s : exponents) {
    if (!(s >= 1.0)) throw DomainError("erdos_lax_check: exponents must be >= 1");
    total += s;
  }
  auto mod_f = [&](double phi) { return detail::generalized_poly_moduli(angles, exponents, phi).first; };
  auto mod_df = [&](double phi) { return detail::generalized_poly_moduli(angles, exponents, phi).second; };
  // half-step offset keeps grid points off zeros placed at grid angles
  const double two_pi = 2.0 * std::numbers::pi;
  const double off = two_pi / (2.0 * grid) * 0.7310;
  auto pts = static_cast<std::size_t>(grid);
  const double max_f = detail::maximize_on_grid(mod_f, off, off + two_pi, pts).value;
  const double max_df = detail::maximize_on_grid(mod_df, off, off + two_pi, pts).value;
  return {max_df, total / 2.0 * max_f};
}

/// z^m prod (z - a_k) + u prod (1 - conj(a_k) z) with |u| = 1. The defaults
/// give z prod (z - a_k) - prod (1 - conj(a_k) z).
inline ComplexPolynomial polya_szego_combine(std::span<const std::complex<double>> points,
                                             int m = 1, std::complex<double> u = -1.0) {
  using C = std::complex<double>;
  ComplexPolynomial first = ComplexPolynomial::monomial(m);
  ComplexPolynomial second = ComplexPolynomial::constant(C{1.0});
  for (const C& a : points) {
    if (std::abs(a) > 1.0) throw DomainError("polya_szego_combine: points must satisfy |a| <= 1");
    first = first * ComplexPolynomial({-a, C{1.0}});
    second = second * ComplexPolynomial({C{1.0}, -std::conj(a)});
  }
  if (std::abs(std::abs(u) - 1.0) > 1e-14)
    throw DomainError("polya_szego_combine: rotation factor must be unimodular");
  return first + second * u;
}

}  // namespace jwidom
