#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "liouville/catalog.hpp"
#include "liouville/diagonals.hpp"
#include "liouville/nd_liouville.hpp"

namespace {

using namespace liouville;

NdMetric squares(int n) {
  std::vector<std::vector<NdMetric::Coefficient>> c(n, std::vector<NdMetric::Coefficient>(n));
  for (auto& row : c) {
    for (auto& f : row) f = [](double w) { return w * w; };
  }
  return NdMetric(std::move(c));
}

TEST(NdDiagonals, Counts) {
  EXPECT_EQ(nd_diagonals(NdRect({0, 0}, {1, 1})).size(), 2u);
  EXPECT_EQ(nd_diagonals(NdRect({0, 0, 0}, {1, 2, 3})).size(), 4u);
  EXPECT_EQ(nd_diagonals(NdRect(std::vector<double>(12, 0.0), std::vector<double>(12, 1.0))).size(),
            2048u);
  EXPECT_THROW(nd_diagonals(NdRect(std::vector<double>(13, 0.0), std::vector<double>(13, 1.0))),
               ArgumentError);
  EXPECT_THROW(NdRect({0}, {1}), ArgumentError);
}

TEST(NdDiagonals, EndpointsAreOppositeVertices) {
  const NdRect r({0, 0, 0}, {1, 2, 3});
  for (const auto& d : nd_diagonals(r)) {
    const auto a = d.at(-1), b = d.at(1);
    for (int i = 0; i < 3; ++i) {
      EXPECT_TRUE(a[i] == r.p0[i] || a[i] == r.p1[i]);
      EXPECT_DOUBLE_EQ(a[i] + b[i], r.p0[i] + r.p1[i]);
      EXPECT_NE(a[i], b[i]);
    }
  }
}

TEST(NdEnergies, SquaresClosedForm) {
  // E = |delta|^2 (2 |M|^2 + 2/3 |delta|^2) = 3.5 (7 + 7/3) = 98/3 for every diagonal.
  const auto e = nd_diagonal_energies(squares(3), NdRect({0, 0, 0}, {1, 2, 3}));
  ASSERT_EQ(e.size(), 4u);
  for (double x : e) EXPECT_NEAR(x, 98.0 / 3.0, 1e-10);
}

TEST(NdEnergies, CrossTermBreaksEquality) {
  // Extra G_1 term u1 u2 adds delta1^2 (2 M1 M2 + 2/3 s1 s2 delta1 delta2).
  const NdMetric g = squares(3).with_perturbation(
      0, [](std::span<const double> u) { return u[0] * u[1]; });
  EXPECT_FALSE(g.liouville());
  const NdRect r({0, 0, 0}, {1, 2, 3});
  EXPECT_NEAR(nd_energy_gap(g, r), 0.25 * (4.0 / 3.0) * 0.5 * 1.0, 1e-12);
}

TEST(NdEnergies, TwoDimensionalReduction) {
  // Parabolic chart: G_1 = G_2 = 4 u1^2 + 4 u2^2.
  std::vector<std::vector<NdMetric::Coefficient>> c(2, std::vector<NdMetric::Coefficient>(2));
  for (auto& row : c) {
    for (auto& f : row) f = [](double w) { return 4 * w * w; };
  }
  const NdMetric g(std::move(c));
  const RectSpec r{{1, 1}, {0.5, 0.25}};
  const NdRect nr({0.5, 0.75}, {1.5, 1.25});
  const auto e = nd_diagonal_energies(g, nr);
  const DiagonalEnergies ref = diagonal_energies(catalog("parabolic").metric, r);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_NEAR(e[0], ref.e1, 1e-12);
  EXPECT_NEAR(e[1], ref.e2, 1e-12);
  EXPECT_NEAR(e[0], 505.0 / 96.0, 1e-12);
}

TEST(NdEnergies, RandomLiouvilleMetrics) {
  std::mt19937_64 rng(77);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const NdMetric g = random_polynomial_nd_metric(n, 2.0, rng);
      const NdRect r = random_nd_rect(n, 2.0, rng);
      const auto e = nd_diagonal_energies(g, r);
      EXPECT_LE(nd_energy_gap(g, r), 1e-9 * *std::max_element(e.begin(), e.end())) << n;
    }
  }
}

TEST(NdEnergies, InjectedCrossTermsDetected) {
  std::mt19937_64 rng(78);
  for (int n = 2; n <= 5; ++n) {
    const NdMetric g = random_polynomial_nd_metric(n, 1.0, rng).with_perturbation(
        0, [](std::span<const double> u) { return 0.5 * u[0] * u[1]; });
    const NdRect r(std::vector<double>(n, -0.8), std::vector<double>(n, 0.9));
    EXPECT_GT(nd_energy_gap(g, r), 1e-3) << n;
  }
}

TEST(NdEnergies, DegenerateRectangle) {
  std::mt19937_64 rng(79);
  const NdMetric g = random_polynomial_nd_metric(4, 2.0, rng);
  const NdRect r({0.1, -0.5, 0.3, 1.0}, {0.9, -0.5, -0.4, 1.2});
  EXPECT_TRUE(r.degenerate());
  EXPECT_EQ(nd_diagonals(r).size(), 4u);
  const auto e = nd_diagonal_energies(g, r);
  EXPECT_LE(nd_energy_gap(g, r), 1e-9 * *std::max_element(e.begin(), e.end()));
}

TEST(NdEnergies, PermutationEquivariance) {
  std::mt19937_64 rng(80);
  const NdMetric g = random_polynomial_nd_metric(3, 2.0, rng);
  const NdRect r = random_nd_rect(3, 2.0, rng);
  const std::vector<int> perm{2, 0, 1};
  const NdRect pr({r.p0[2], r.p0[0], r.p0[1]}, {r.p1[2], r.p1[0], r.p1[1]});
  auto a = nd_diagonal_energies(g, r);
  auto b = nd_diagonal_energies(g.permuted(perm), pr);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-11 * a[i]);
}

TEST(NdEnergies, PositivityViolation) {
  std::vector<std::vector<NdMetric::Coefficient>> c(2, std::vector<NdMetric::Coefficient>(2));
  for (auto& row : c) {
    for (auto& f : row) f = [](double w) { return w * w - 0.5; };
  }
  EXPECT_THROW(nd_diagonal_energies(NdMetric(std::move(c)), NdRect({-1, -1}, {1, 1})), InvalidMetricError);
}

}  // namespace
