#include "jwidom/minimax.hpp"
#include "jwidom/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace jwidom;

TEST(BruteMinimax, Examples) {
  auto r = brute_minimax({0.0, 0.0}, 1);
  ASSERT_EQ(r.nodes.size(), 1u);
  EXPECT_NEAR(r.nodes[0], 0.0, 1e-5);
  EXPECT_NEAR(r.norm, 1.0, 1e-5);

  r = brute_minimax({0.0, 0.0}, 2);
  ASSERT_EQ(r.nodes.size(), 2u);
  EXPECT_NEAR(r.nodes[0], -1 / std::sqrt(2.0), 1e-4);
  EXPECT_NEAR(r.nodes[1], 1 / std::sqrt(2.0), 1e-4);
  EXPECT_NEAR(r.norm, 0.5, 0.5e-5);

  r = brute_minimax({1.0, 1.0}, 1);
  EXPECT_NEAR(r.nodes[0], 0.0, 1e-4);
  EXPECT_NEAR(r.norm, 2 / (3 * std::sqrt(3.0)), 1e-5);
}

TEST(BruteMinimax, ClosedFormDegreeThree) {
  const auto r = brute_minimax({0.5, 0.5}, 3);
  EXPECT_NEAR(r.norm, 0.125, 1e-5 * 0.125);
  for (std::size_t k = 1; k < r.nodes.size(); ++k) EXPECT_LT(r.nodes[k - 1], r.nodes[k]);
}

TEST(BruteMinimax, NeverBelowCertifiedLowerBound) {
  const WeightParams ws[] = {{0.2, 1.3}, {0.9, 0.0}, {1.5, 1.5}};
  for (const auto& w : ws) {
    for (int n = 1; n <= 3; ++n) {
      const auto s = solve(w, n);
      EXPECT_GE(brute_minimax(w, n).norm, s.lower_bound);
    }
  }
}

TEST(BruteMinimax, RejectsDegree) {
  EXPECT_THROW(brute_minimax({0.0, 0.0}, 0), DomainError);
  EXPECT_THROW(brute_minimax({0.0, 0.0}, 4), DomainError);
}
