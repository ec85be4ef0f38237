#include "jwidom/bounds.hpp"
#include "jwidom/special.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace jwidom;

namespace {

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

// M_n straight from its binomial definition, with the binomials as running
// products and Gamma(q+1) from the C library.
double m_bound_binomial(JacobiParams p, int n) {
  const double a = p.alpha, b = p.beta, q = p.q();
  double top = 1.0, bottom = 1.0;
  for (int k = 1; k <= n; ++k) {
    top *= (q + k) / k;
    bottom *= (n + a + b + k) / k;
  }
  const double h = n + (a + b + 1.0) / 2.0;
  return std::tgamma(q + 1.0) * std::pow(2.0, 2.0 * n + (a + b + 1.0) / 2.0) * top /
         (std::sqrt(std::numbers::pi) * std::pow(h, q + 0.5) * bottom);
}

std::vector<double> grid9() {
  std::vector<double> g;
  for (int i = 0; i <= 8; ++i) g.push_back(-0.5 + i / 8.0);
  return g;
}

}  // namespace

TEST(MBound, Examples) {
  for (int n : {1, 2, 7, 100, 100000}) EXPECT_NEAR(m_bound({0.5, 0.5}, n), 1.0, 1e-13) << n;
  const double m1 = std::sqrt(2.0) * std::tgamma(2.0) / (std::sqrt(1.5) * std::tgamma(1.5));
  EXPECT_NEAR(m_bound({0.0, 0.0}, 1), m1, 1e-14);
  EXPECT_NEAR(m_bound({0.0, 0.0}, 1), 1.3029400317411198, 1e-15);
  EXPECT_NEAR(m_bound({0.0, 0.0}, 1000000), std::sqrt(2.0), 1e-6);
}

TEST(MBound, AgreesWithBinomialDefinition) {
  for (double a : grid9())
    for (double b : grid9())
      for (int n = 1; n <= 20; ++n)
        EXPECT_LE(rel_err(m_bound({a, b}, n), m_bound_binomial({a, b}, n)), 1e-12) << a << ' ' << b << ' ' << n;
}

TEST(MBound, RejectsParametersOutsideSquare) {
  EXPECT_THROW(m_bound({0.6, 0.0}, 3), DomainError);
  EXPECT_THROW(m_bound({0.0, -0.7}, 3), DomainError);
  EXPECT_THROW(m_bound({0.0, 0.0}, 0), DomainError);
}

TEST(MRatio, Examples) {
  for (double x : {0.5, 1.0, 17.0, 1e6}) EXPECT_NEAR(m_ratio({0.5, 0.5}, x), 1.0, 1e-14);
  EXPECT_NEAR(m_ratio({0.0, 0.0}, 1.0), 1.0327955589886445, 1e-15);
  for (double a : grid9())
    for (double b : grid9()) EXPECT_NEAR(m_ratio({a, b}, 1e6), 1.0, 1e-6);
}

TEST(MRatio, MatchesConsecutiveQuotients) {
  for (double a : grid9())
    for (double b : grid9())
      for (int n = 1; n <= 50; ++n)
        EXPECT_NEAR(m_ratio({a, b}, n), m_bound({a, b}, n + 1) / m_bound({a, b}, n), 1e-12);
}

TEST(MBound, MonotoneOnGrid) {
  for (double a : grid9()) {
    for (double b : grid9()) {
      const BoundReport r = verify_m_monotone({a, b}, 1000);
      ASSERT_EQ(r.values.size(), 1000u);
      EXPECT_TRUE(r.monotone) << a << ' ' << b;
      EXPECT_EQ(r.max_violation, 0.0);
      const bool corner = std::abs(a) == 0.5 && std::abs(b) == 0.5;
      EXPECT_EQ(r.strict, !corner) << a << ' ' << b;
      EXPECT_LE(r.values.back(), r.limit * (1 + 1e-12));
    }
  }
}

TEST(MBound, ApproachesLimitLikeOneOverN) {
  // n (limit - M_n) settles to a constant, so the gap closes like 1/n
  for (double a : grid9()) {
    for (double b : grid9()) {
      const double lim = asymptote(param_to_weight({a, b}));
      const double g1 = 1e3 * (lim - m_bound({a, b}, 1000));
      const double g2 = 1e5 * (lim - m_bound({a, b}, 100000));
      EXPECT_NEAR(g1, g2, 2e-3 * std::max(1.0, std::abs(g2))) << a << ' ' << b;
      EXPECT_LE(std::abs(lim - m_bound({a, b}, 1000000)), 1e-6);
    }
  }
}

TEST(CCoeffs, Examples) {
  const auto h = c_coeffs({0.5, 0.5});
  EXPECT_NEAR(h.c2, 0.0, 1e-15);
  EXPECT_NEAR(h.c1, 0.0, 1e-15);
  const auto z = c_coeffs({0.0, 0.0});
  EXPECT_NEAR(z.c2, -0.25, 1e-15);
  EXPECT_NEAR(z.c0, -0.25, 1e-15);
}

TEST(CCoeffs, EdgeFactorizationExamples) {
  EXPECT_NEAR(c0_on_edge(TriangleEdge::AlphaHalf, 1.0), 0.0, 1e-15);
  EXPECT_NEAR(c1_on_edge(TriangleEdge::Diagonal, 0.5), -0.5, 1e-15);
  EXPECT_NEAR(c_coeffs(edge_point(TriangleEdge::Diagonal, 0.5)).c1, -0.5, 1e-15);
}

TEST(CCoeffs, EdgeFactorizationsMatchDirectEvaluation) {
  for (auto e : {TriangleEdge::AlphaHalf, TriangleEdge::BetaMinusHalf, TriangleEdge::Diagonal}) {
    for (int i = 0; i <= 400; ++i) {
      const double t = i / 400.0;
      const auto c = c_coeffs(edge_point(e, t));
      EXPECT_NEAR(c.c0, c0_on_edge(e, t), 1e-12);
      EXPECT_NEAR(c.c1, c1_on_edge(e, t), 1e-12);
    }
  }
}

TEST(CCoeffs, SignLemma) {
  const CoeffLemmaReport r = verify_coeff_lemma(200);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.max_violation, 0.0);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_LE(r.max_c0, 1e-12);
  EXPECT_LE(r.max_c1, 1e-12);
  EXPECT_LE(r.max_c2, 1e-12);
  EXPECT_TRUE(r.equality_only_at_vertices);
  EXPECT_FALSE(r.equality_points.empty());
  EXPECT_LE(r.max_factorization_error, 1e-12);
}

TEST(CCoeffs, LogDerivativeSignMatchesRatio) {
  // f decreasing towards 1 from above means f(x) > 1 on the interior: the
  // quadratic c2 x^2 + c1 x + c0 is negative there
  for (double a : grid9()) {
    for (double b : grid9()) {
      if (b > a) continue;
      const auto c = c_coeffs({a, b});
      const bool corner = std::abs(a) == 0.5 && std::abs(b) == 0.5;
      for (double x : {0.5, 1.0, 3.0, 10.0, 100.0}) {
        const double quad = (c.c2 * x + c.c1) * x + c.c0;
        if (corner) {
          EXPECT_NEAR(m_ratio({a, b}, x), 1.0, 1e-14);
        } else {
          EXPECT_LT(quad, 0.0) << a << ' ' << b << ' ' << x;
          EXPECT_GT(m_ratio({a, b}, x), 1.0) << a << ' ' << b << ' ' << x;
        }
      }
    }
  }
}

TEST(CgwRhs, Examples) {
  EXPECT_NEAR(cgw_rhs({0.5, 0.5}, 1), 0.375, 1e-15);
  // (-1/2, -1/2): sup |P_n| = P_n(1) = binom(n - 1/2, n) is attained
  for (int n = 1; n <= 10; ++n) {
    const double sup = jacobi_eval({-0.5, -0.5}, n, 1.0).value;
    EXPECT_NEAR(cgw_rhs({-0.5, -0.5}, n), sup, 1e-12 * sup) << n;
  }
}

TEST(CgwRhs, DominatesWeightedLegendre) {
  const int n = 4;
  const double rhs = cgw_rhs({0.0, 0.0}, n);
  double sup = 0.0;
  for (int i = 0; i <= 20000; ++i) {
    const double t = std::numbers::pi * i / 20000;
    sup = std::max(sup, std::sqrt(std::sin(t / 2) * std::cos(t / 2)) *
                            std::abs(jacobi_eval({0.0, 0.0}, n, std::cos(t)).value));
  }
  EXPECT_LE(sup, rhs);
}

TEST(CgwRhs, SaturatedAtCorners) {
  // (sin t/2)^{a+1/2} (cos t/2)^{b+1/2} |P_n^{(a,b)}(cos t)| reaches the bound
  // exactly when both parameters are +-1/2
  for (double a : {-0.5, 0.5}) {
    for (double b : {-0.5, 0.5}) {
      const JacobiParams p{a, b};
      const WeightParams w = param_to_weight(p);
      for (int n = 1; n <= 12; ++n) {
        // weight_at_angle carries 2^{rho_a + rho_b} and the monic scale
        // the binomial; undo both
        const double trig_sup = weighted_monic_jacobi_sup(w, n) / monic_scale(p, n) /
                                std::exp2(w.rho_a + w.rho_b);
        EXPECT_LE(rel_err(trig_sup, cgw_rhs(p, n)), 1e-9) << a << ' ' << b << ' ' << n;
      }
    }
  }
}

TEST(Asymptote, Examples) {
  EXPECT_DOUBLE_EQ(asymptote({0.0, 0.0}), 2.0);
  EXPECT_DOUBLE_EQ(asymptote({0.5, 0.5}), 1.0);
  EXPECT_DOUBLE_EQ(asymptote({1.0, 1.0}), 0.5);
}

TEST(WeightSupBound, Examples) {
  EXPECT_DOUBLE_EQ(weight_sup_bound({1.0, 1.0}), 1.0);
  EXPECT_DOUBLE_EQ(weight_sup_bound({1.0, 0.0}), 2.0);
  EXPECT_DOUBLE_EQ(weight_sup_bound({0.5, 0.5}), 1.0);
  EXPECT_DOUBLE_EQ(weight_sup_bound({0.0, 0.0}), 1.0);
}

TEST(WeightSupBound, IsTheMaximumOfTheWeight) {
  for (double ra : {0.1, 0.7, 1.3}) {
    for (double rb : {0.0, 0.4, 2.0}) {
      const WeightParams w{ra, rb};
      double best = 0.0;
      for (int i = 0; i <= 100000; ++i)
        best = std::max(best, weight_at_angle(w, std::numbers::pi * i / 100000));
      EXPECT_NEAR(best, weight_sup_bound(w), 1e-8 * best);
      EXPECT_GE(weight_sup_bound(w), best * (1 - 1e-15));
    }
  }
}
