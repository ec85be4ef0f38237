// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include "jwidom/bounds.hpp"
#include "jwidom/circle.hpp"
#include "jwidom/minimax.hpp"
#include "jwidom/oracle.hpp"
#include "jwidom/polynomial.hpp"
#include "jwidom/special.hpp"
#include "jwidom/widom.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

using namespace jwidom;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

int failures = 0;

void criterion(int id, const char* title, double time_limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit_s > 0 && secs > time_limit_s) {
    o.pass = false;
    o.detail += "; over time limit " + num(time_limit_s) + " s";
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
  std::fflush(stdout);
}

Outcome classical_kinds() {
  struct Case {
    WeightParams w;
    double value;
  };
  const Case cases[] = {{{0.0, 0.0}, 2.0},
                        {{0.5, 0.5}, 1.0},
                        {{0.5, 0.0}, std::numbers::sqrt2},
                        {{0.0, 0.5}, std::numbers::sqrt2}};
  double worst = 0.0;
  for (const auto& c : cases)
    for (int n = 1; n <= 20; ++n)
      worst = std::max(worst, std::abs(widom_factor(c.w, n) - c.value) / c.value);
  return {worst <= 1e-8, "max relative error " + num(worst) + " (tol 1e-8)"};
}

Outcome interior_bound() {
  double worst_bound = -INFINITY, worst_chain = -INFINITY;
  bool trend = true;
  for (double ra : {0.1, 0.25, 0.4}) {
    for (double rb : {0.1, 0.25, 0.4}) {
      const WeightParams w{ra, rb};
      const JacobiParams p = weight_to_param(w);
      const double lim = asymptote(w);
      std::vector<double> wn;
      for (int n = 1; n <= 20; ++n) {
        wn.push_back(widom_factor(w, n));
        const double sup = std::ldexp(weighted_monic_jacobi_sup(w, n), n);
        const double m = m_bound(p, n);
        worst_bound = std::max(worst_bound, (wn.back() - lim) / lim);
        worst_chain = std::max({worst_chain, (wn.back() - sup) / sup, (sup - m) / m, (m - lim) / lim});
      }
      if (wn[19] < wn[4]) trend = false;
    }
  }
  const bool ok = worst_bound <= 1e-8 && worst_chain <= 1e-9 && trend;
  return {ok, "max (W_n - limit)/limit " + num(worst_bound) + ", worst chain link " + num(worst_chain) +
                  ", W_20 >= W_5 " + (trend ? "everywhere" : "VIOLATED")};
}

Outcome m_bound_lemma() {
  bool monotone = true, strict_ok = true;
  double gap = 0.0;
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 8; ++j) {
      const JacobiParams p{-0.5 + i / 8.0, -0.5 + j / 8.0};
      const BoundReport r = verify_m_monotone(p, 1000);
      const bool corner = (i == 0 || i == 8) && (j == 0 || j == 8);
      monotone = monotone && r.monotone;
      if (r.strict != !corner) strict_ok = false;
      gap = std::max(gap, std::abs(r.values.back() - r.limit));
    }
  }
  const bool ok = monotone && strict_ok && gap <= 1e-4;
  return {ok, std::string("monotone ") + (monotone ? "yes" : "NO") + ", strict off corners " +
                  (strict_ok ? "yes" : "NO") + ", max |M_1000 - limit| " + num(gap) + " (tol 1e-4)"};
}

Outcome coeff_lemma() {
  const CoeffLemmaReport r = verify_coeff_lemma(200);
  const bool ok = r.violations.empty() && r.equality_only_at_vertices && r.max_factorization_error <= 1e-12;
  return {ok, "max c0 " + num(r.max_c0) + ", c1 " + num(r.max_c1) + ", c2 " + num(r.max_c2) + ", " +
                  std::to_string(r.equality_points.size()) + " equality points" +
                  (r.equality_only_at_vertices ? " (all vertices)" : " (NOT all vertices)") +
                  ", factorization error " + num(r.max_factorization_error)};
}

Outcome circle_correspondence() {
  const WeightParams pairs[] = {{0.5, 0.5}, {0.75, 0.75}, {1.0, 1.0}, {0.75, 1.25}};
  double worst = 0.0;
  for (const auto& w : pairs)
    for (int n = 0; n <= 5; ++n) worst = std::max(worst, verify_cn_relation(w, n).ratio_defect);
  return {worst <= 1e-6, "max relative defect " + num(worst) + " (tol 1e-6)"};
}

Outcome outer_monotone() {
  double worst = 0.0;
  for (double ra : {0.5, 0.75, 1.0, 1.5}) {
    for (double rb : {0.5, 0.75, 1.0, 1.5}) {
      const WeightParams w{ra, rb};
      const auto s = widom_sequence(w, 10);
      for (std::size_t i = 1; i < s.values.size(); ++i)
        worst = std::max(worst, s.values[i] - s.values[i - 1]);
      worst = std::max(worst, s.asymptote - s.values.back());
      worst = std::max(worst, s.values.front() - weight_sup_bound(w));
    }
  }
  return {worst <= 1e-9, "largest violation " + num(worst) + " (slack 1e-9)"};
}

Outcome erdos_lax() {
  std::mt19937_64 rng(20250101);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi), expo(1.0, 3.0);
  std::uniform_int_distribution<int> count(1, 6);
  double worst = 0.0;
  for (int c = 0; c < 50; ++c) {
    std::vector<double> a, s;
    double total = 0.0;
    for (int k = count(rng); k > 0; --k) {
      const double e = expo(rng);
      if (total + e > 12.0) break;
      a.push_back(angle(rng));
      s.push_back(e);
      total += e;
    }
    const auto r = erdos_lax_check(a, s);
    worst = std::max(worst, std::abs(r.lhs - r.rhs) / r.rhs);
  }
  return {worst <= 1e-6, "50 configurations, max relative defect " + num(worst) + " (tol 1e-6)"};
}

Outcome polya_szego() {
  std::mt19937_64 rng(20250102);
  std::uniform_real_distribution<double> radius(0.0, 0.99), angle(0.0, 2 * std::numbers::pi);
  std::uniform_int_distribution<int> count(1, 7);
  double worst = 0.0;
  for (int c = 0; c < 50; ++c) {
    std::vector<std::complex<double>> pts;
    for (int k = count(rng); k > 0; --k) pts.push_back(std::polar(radius(rng), angle(rng)));
    for (const auto& r : aberth_roots(polya_szego_combine(pts)))
      worst = std::max(worst, std::abs(std::abs(r) - 1.0));
  }
  return {worst <= 1e-8, "50 point sets, max ||root| - 1| " + num(worst) + " (tol 1e-8)"};
}

Outcome oracle_equivalence() {
  std::mt19937 rng(20250103);
  std::uniform_real_distribution<double> rho(0.0, 1.5);
  std::uniform_int_distribution<int> deg(1, 3);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const WeightParams w{rho(rng), rho(rng)};
    const int n = deg(rng);
    const double a = solve(w, n).norm;
    const double b = brute_minimax(w, n).norm;
    worst = std::max(worst, std::abs(a - b) / a);
  }
  return {worst <= 1e-4, "10 instances, max relative gap " + num(worst) + " (tol 1e-4)"};
}

Outcome figure_scan() {
  ScanOptions o;
  o.lo = 0.0;
  o.hi = 0.8;
  o.resolution = 40;
  o.n_max = 10;
  o.threads = std::max(1u, std::thread::hardware_concurrency());
  const ScanResult r = scan(o);
  int inside = 0, inside_bad = 0, outside = 0, outside_bad = 0, between = 0, failed = 0;
  int between_inc = 0, between_dec = 0;
  for (const auto& c : r.cells) {
    if (c.failed) ++failed;
    const bool known_constant = (c.weight.rho_a == 0.0 || c.weight.rho_a == 0.5) &&
                                (c.weight.rho_b == 0.0 || c.weight.rho_b == 0.5);
    switch (conjecture_region(c.weight)) {
      case ConjectureRegion::Inside:
        if (known_constant) break;
        ++inside;
        if (c.failed || c.classification != Monotonicity::Increasing) ++inside_bad;
        break;
      case ConjectureRegion::Outside:
        ++outside;
        if (c.failed || c.classification != Monotonicity::Decreasing) ++outside_bad;
        break;
      case ConjectureRegion::Between:
        ++between;
        if (c.classification == Monotonicity::Increasing) ++between_inc;
        if (c.classification == Monotonicity::Decreasing) ++between_dec;
        break;
    }
  }
  const bool ok = inside_bad == 0 && outside_bad == 0 && failed == 0 && r.runtime_seconds < 600.0;
  return {ok, std::to_string(r.cells.size()) + " cells on " + std::to_string(o.threads) + " thread(s) in " +
                  num(r.runtime_seconds) + " s; inside " + std::to_string(inside - inside_bad) + "/" +
                  std::to_string(inside) + " Increasing, outside " + std::to_string(outside - outside_bad) +
                  "/" + std::to_string(outside) + " Decreasing, between-band " + std::to_string(between) +
                  " cells (" + std::to_string(between_inc) + " Increasing, " + std::to_string(between_dec) +
                  " Decreasing), " + std::to_string(failed) + " failed"};
}

Outcome continuity() {
  std::mt19937 rng(20250104);
  std::uniform_real_distribution<double> rho(1e-5, 1.5);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) worst = std::max(worst, continuity_probe({rho(rng), rho(rng)}, 1e-5, 5));
  return {worst <= 1e-3, "10 points, max |W_5 change| " + num(worst) + " (tol 1e-3)"};
}

}  // namespace

int main() {
  criterion(1, "classical kinds W_n constant, n = 1..20", 30, classical_kinds);
  criterion(2, "W_n <= 2^(1-rho_a-rho_b) and bound chain inside [0,1/2]^2", 0, interior_bound);
  criterion(3, "M_n monotone to its limit, n = 1..1000", 5, m_bound_lemma);
  criterion(4, "c0, c1, c2 <= 0 on the triangle", 0, coeff_lemma);
  criterion(5, "C_n = 2^(n+rho_a+rho_b-1) I_n", 60, circle_correspondence);
  criterion(6, "W_n decreasing for rho_a, rho_b >= 1/2", 0, outer_monotone);
  criterion(7, "Erdos-Lax equality", 0, erdos_lax);
  criterion(8, "Polya-Szego roots on the unit circle", 0, polya_szego);
  criterion(9, "exchange solver agrees with direct search", 0, oracle_equivalence);
  criterion(10, "40 x 40 monotonicity scan of [0,0.8]^2", 600, figure_scan);
  criterion(11, "continuity of W_5 under 1e-5 perturbations", 0, continuity);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures;
}
