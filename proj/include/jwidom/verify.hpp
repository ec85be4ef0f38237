#pragma once

// Batch property checks behind `jwidom verify ...`. Each check reports the
// largest violation it saw; a report passes iff every check does.

#include "jwidom/bounds.hpp"
#include "jwidom/circle.hpp"
#include "jwidom/minimax.hpp"
#include "jwidom/polynomial.hpp"
#include "jwidom/special.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace jwidom {

struct Check {
  std::string name;
  bool passed = true;
  double max_violation = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::string subject;
  std::vector<Check> checks;

  [[nodiscard]] bool passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

inline nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json j;
  j["subject"] = r.subject;
  j["passed"] = r.passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name},
                           {"passed", c.passed},
                           {"max_violation", c.max_violation},
                           {"tolerance", c.tolerance},
                           {"detail", c.detail}});
  return j;
}

inline void print_report(std::ostream& os, const VerifyReport& r) {
  for (const auto& c : r.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << "  max_violation=" << c.max_violation
       << " tol=" << c.tolerance;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << '\n';
  }
  os << r.subject << ": " << (r.passed() ? "all checks passed" : "VIOLATIONS FOUND") << '\n';
}

namespace detail {

inline std::vector<double> uniform_points(double lo, double hi, int count) {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = i + 1 == count ? hi : lo + (hi - lo) * i / (count - 1);
  return v;
}

inline bool is_bound_corner(JacobiParams p) {
  return std::abs(std::abs(p.alpha) - 0.5) < 1e-14 && std::abs(std::abs(p.beta) - 0.5) < 1e-14;
}

}  // namespace detail

/// M_n monotone on a grid x grid sample of [-1/2,1/2]^2 for n = 1..n_max and
/// strict away from the corners. The distance to the limit at n_max is
/// reported, and asserted only when `limit_tol` is given: M_n approaches its
/// limit like 1/n, so at n = 1000 the gap is still about 1.8e-4.
inline VerifyReport verify_bounds(int n_max = 1000, int grid = 9,
                                  std::optional<double> limit_tol = std::nullopt) {
  VerifyReport rep{"bounds", {}};
  Check mono{"M_n nondecreasing", true, 0.0, 0.0, ""};
  Check strict{"M_n strictly increasing off the corners", true, 0.0, 0.0, ""};
  Check limit{"|M_nmax - 2^(1-rho_a-rho_b)|", true, 0.0, limit_tol.value_or(0.0),
              limit_tol ? "" : "reported only"};
  for (double a : detail::uniform_points(-0.5, 0.5, grid)) {
    for (double b : detail::uniform_points(-0.5, 0.5, grid)) {
      const JacobiParams p{a, b};
      const BoundReport br = verify_m_monotone(p, n_max);
      if (!br.monotone) {
        mono.passed = false;
        mono.max_violation = std::max(mono.max_violation, br.max_violation);
      }
      if (!detail::is_bound_corner(p) && !br.strict) {
        strict.passed = false;
        strict.detail = "non-strict step at alpha=" + std::to_string(a) + " beta=" + std::to_string(b);
      }
      const double gap = std::abs(br.values.back() - br.limit);
      limit.max_violation = std::max(limit.max_violation, gap);
    }
  }
  if (limit_tol) limit.passed = limit.max_violation <= *limit_tol;
  rep.checks = {mono, strict, limit};
  return rep;
}

inline VerifyReport verify_coeffs(int samples = 200) {
  VerifyReport rep{"coeffs", {}};
  const CoeffLemmaReport r = verify_coeff_lemma(samples);
  rep.checks.push_back({"c0, c1, c2 <= 1e-12 on the triangle", r.violations.empty(), r.max_violation,
                        1e-12,
                        "max c0=" + std::to_string(r.max_c0) + " c1=" + std::to_string(r.max_c1) +
                            " c2=" + std::to_string(r.max_c2)});
  rep.checks.push_back({"equality only at |alpha|=|beta|=1/2", r.equality_only_at_vertices, 0.0, 0.0,
                        std::to_string(r.equality_points.size()) + " equality points"});
  rep.checks.push_back({"edge factorizations match direct evaluation",
                        r.max_factorization_error <= 1e-12, r.max_factorization_error, 1e-12, ""});
  return rep;
}

/// Circle correspondence for n = 0..n_max on fixed parameter pairs, plus
/// randomized Erdos-Lax and Polya-Szego checks.
inline VerifyReport verify_circle(int n_max = 5, int random_configs = 50, unsigned seed = 12345u) {
  VerifyReport rep{"circle", {}};
  Check cn{"C_n = 2^(n+rho_a+rho_b-1) I_n", true, 0.0, 1e-6, ""};
  const WeightParams pairs[] = {{0.5, 0.5}, {0.75, 0.75}, {1.0, 1.0}, {0.75, 1.25}};
  for (const auto& w : pairs) {
    for (int n = 0; n <= n_max; ++n) {
      const CnRelation r = verify_cn_relation(w, n);
      cn.max_violation = std::max(cn.max_violation, r.ratio_defect);
    }
  }
  cn.passed = cn.max_violation <= cn.tolerance;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> expo(1.0, 3.0);
  std::uniform_int_distribution<int> count(1, 5);

  Check el{"Erdos-Lax equality", true, 0.0, 1e-6, ""};
  for (int c = 0; c < random_configs; ++c) {
    std::vector<double> a, s;
    double total = 0.0;
    const int m = count(rng);
    for (int k = 0; k < m; ++k) {
      const double e = expo(rng);
      if (total + e > 12.0) break;
      a.push_back(angle(rng));
      s.push_back(e);
      total += e;
    }
    const ErdosLax r = erdos_lax_check(a, s);
    el.max_violation = std::max(el.max_violation, std::abs(r.lhs - r.rhs) / r.rhs);
  }
  el.passed = el.max_violation <= el.tolerance;

  Check ps{"Polya-Szego roots on |z|=1", true, 0.0, 1e-8, ""};
  std::uniform_real_distribution<double> radius(0.0, 0.99);
  std::uniform_int_distribution<int> npts(1, 7);
  for (int c = 0; c < random_configs; ++c) {
    std::vector<std::complex<double>> pts;
    const int m = npts(rng);
    for (int k = 0; k < m; ++k) pts.push_back(std::polar(radius(rng), angle(rng)));
    for (const auto& r : aberth_roots(polya_szego_combine(pts)))
      ps.max_violation = std::max(ps.max_violation, std::abs(std::abs(r) - 1.0));
  }
  ps.passed = ps.max_violation <= ps.tolerance;

  rep.checks = {cn, el, ps};
  return rep;
}

/// The chain W_n <= 2^n sup(weighted monic Jacobi) <= M_n <= 2^(1-rho_a-rho_b)
/// on a grid x grid sample of [0,1/2]^2, and the zero residuals of P_n.
inline VerifyReport verify_jacobi(int n_max = 20, int grid = 9) {
  constexpr double slack = 1e-9;
  VerifyReport rep{"jacobi", {}};
  Check w_le_sup{"W_n <= 2^n sup|w P_n monic|", true, 0.0, slack, ""};
  Check sup_le_m{"2^n sup|w P_n monic| <= M_n", true, 0.0, slack, ""};
  Check m_le_lim{"M_n <= 2^(1-rho_a-rho_b)", true, 0.0, slack, ""};
  Check zeros{"|P_n(zero)| <= 1e-10", true, 0.0, 1e-10, ""};
  for (double ra : detail::uniform_points(0.0, 0.5, grid)) {
    for (double rb : detail::uniform_points(0.0, 0.5, grid)) {
      const WeightParams w{ra, rb};
      const JacobiParams p = weight_to_param(w);
      const double lim = asymptote(w);
      for (int n = 1; n <= n_max; ++n) {
        const double wn = solve(w, n).widom;
        const double sup = std::ldexp(weighted_monic_jacobi_sup(w, n), n);
        const double m = m_bound(p, n);
        w_le_sup.max_violation = std::max(w_le_sup.max_violation, (wn - sup) / sup);
        sup_le_m.max_violation = std::max(sup_le_m.max_violation, (sup - m) / m);
        m_le_lim.max_violation = std::max(m_le_lim.max_violation, (m - lim) / lim);
        for (double z : jacobi_zeros(p, n))
          zeros.max_violation = std::max(zeros.max_violation, std::abs(jacobi_eval(p, n, z).value));
      }
    }
  }
  for (Check* c : {&w_le_sup, &sup_le_m, &m_le_lim, &zeros}) {
    c->max_violation = std::max(c->max_violation, 0.0);
    c->passed = c->max_violation <= c->tolerance;
  }
  rep.checks = {w_le_sup, sup_le_m, m_le_lim, zeros};
  return rep;
}

}  // namespace jwidom
