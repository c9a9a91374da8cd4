#include <cmath>
#include <memory>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gtest/gtest.h>

#include "liouville/catalog.hpp"
#include "liouville/diagonals.hpp"
#include "liouville/ellipsoid.hpp"
#include "liouville/random.hpp"

namespace {

using namespace liouville;

const EllipsoidAxes kAxes{3, 2, 1};

const ConformalTables& tables() {
  static const ConformalTables t(kAxes);
  return t;
}

std::shared_ptr<const ConformalTables> shared_tables() {
  static const auto t = std::make_shared<const ConformalTables>(kAxes);
  return t;
}

// Oracle: tanh-sinh quadrature of sqrt|f| directly in t. The pole factors are rebuilt from the exact
// endpoint distance tanh-sinh supplies, so nodes crowding an endpoint keep full precision.
double sqrt_f_integral(double lo, double hi) {
  boost::math::quadrature::tanh_sinh<double> ts(15);
  const double w = hi - lo;
  return ts.integrate(
      [&](double t, double tc) {
        const double from_lo = tc <= 0 ? -tc : w - tc;
        const double to_hi = tc > 0 ? tc : w + tc;
        double den = 4.0;
        for (double p : {9.0, 4.0, 1.0}) {
          if (p == lo) den *= from_lo;
          else if (p == hi) den *= to_hi;
          else den *= std::abs(p - t);
        }
        return std::sqrt(t / den);
      },
      lo, hi, 1e-15);
}

TEST(EllipsoidAxes, Validation) {
  EXPECT_NO_THROW(kAxes.validate());
  EXPECT_THROW((EllipsoidAxes{2, 2, 1}.validate()), ArgumentError);
  EXPECT_THROW((EllipsoidAxes{3, 2, 0}.validate()), ArgumentError);
}

TEST(WeightF, Values) {
  EXPECT_DOUBLE_EQ(weight_f(kAxes, 5.0), 5.0 / 64.0);
  EXPECT_LT(weight_f(kAxes, 2.5), 0.0);
  EXPECT_GT(weight_f(kAxes, 6.0), 0.0);
  EXPECT_THROW(weight_f(kAxes, 4.0), SingularityError);
}

TEST(WeightF, SimplePoleAtLargestAxis) {
  const double r1 = weight_f(kAxes, 9.0 - 1e-4) * 1e-4;
  const double r2 = weight_f(kAxes, 9.0 - 1e-7) * 1e-7;
  EXPECT_NEAR(r1 / r2, 1.0, 1e-3);
}

TEST(CurvatureLines, OrderingEnforced) {
  EXPECT_THROW(curvature_line_embed(kAxes, 3.0, 2.0), DomainError);
  EXPECT_THROW(curvature_line_embed(kAxes, 5.0, 0.5), DomainError);
}

TEST(CurvatureLines, InducedMetricIsDiagonal) {
  const SurfaceChart c = catalog("ellipsoid_curvature_lines", {.axes = kAxes});
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) {
    const ParamPoint p{uniform(rng, 4.5, 8.5), uniform(rng, 1.5, 3.5)};
    const MetricTensor num = induced_metric(c, p, 1e-5);
    const MetricTensor ref = curvature_line_metric(kAxes, p.u, p.v);
    EXPECT_NEAR(num.g11, (p.u - p.v) * weight_f(kAxes, p.u), 1e-7 * ref.g11);
    EXPECT_NEAR(num.g22, -(p.u - p.v) * weight_f(kAxes, p.v), 1e-7 * ref.g22);
    EXPECT_NEAR(num.g12, 0.0, 1e-8);
  }
}

TEST(CurvatureLines, DiagonalsDifferInEnergy) {
  const SurfaceChart c = catalog("ellipsoid_curvature_lines", {.axes = kAxes});
  EXPECT_GT(std::abs(diagonal_energy_gap(c.metric, {{6.0, 2.5}, {1.0, 0.8}})), 1e-4);
}

TEST(ForwardMaps, BasePointsAndMonotone) {
  const auto& t = tables();
  EXPECT_EQ(t.X(4.0), 0.0);
  EXPECT_EQ(t.Y(1.0), 0.0);
  double prev = -1;
  for (double u = 4.0; u <= 9.0; u += 0.125) {
    const double x = t.X(u);
    EXPECT_GT(x, prev);
    prev = x;
  }
  EXPECT_THROW((void)t.X(3.9), ArgumentError);
  EXPECT_THROW((void)t.Y(4.1), ArgumentError);
}

TEST(ForwardMaps, RangesMatchIndependentQuadrature) {
  EXPECT_NEAR(tables().x_max(), sqrt_f_integral(4.0, 9.0), 1e-10);
  EXPECT_NEAR(tables().y_max(), sqrt_f_integral(1.0, 4.0), 1e-10);
  // Frozen values from an arbitrary-precision evaluation.
  EXPECT_NEAR(tables().x_max(), 1.72292628279648, 1e-13);
  EXPECT_NEAR(tables().y_max(), 0.977651575612103, 1e-13);
}

TEST(ForwardMaps, InteriorValuesMatchIndependentQuadrature) {
  for (double u : {4.3, 5.5, 6.5, 8.0, 8.9}) EXPECT_NEAR(tables().X(u), sqrt_f_integral(4.0, u), 1e-10) << u;
  for (double v : {1.2, 2.5, 3.9}) EXPECT_NEAR(tables().Y(v), sqrt_f_integral(1.0, v), 1e-10) << v;
}

TEST(InverseMaps, Endpoints) {
  const auto& t = tables();
  EXPECT_EQ(t.U(0.0), 4.0);
  EXPECT_EQ(t.V(0.0), 1.0);
  EXPECT_NEAR(t.U(t.x_max()), 9.0, 1e-14);
  EXPECT_NEAR(t.V(t.y_max()), 4.0, 1e-14);
  EXPECT_THROW((void)t.U(-0.01), ArgumentError);
  EXPECT_THROW((void)t.U(t.x_max() + 0.01), ArgumentError);
  EXPECT_THROW((void)t.V(t.y_max() + 0.01), ArgumentError);
}

TEST(InverseMaps, RoundTrip) {
  const auto& t = tables();
  for (int i = 1; i <= 20; ++i) {
    const double x = t.x_max() * i / 21.0;
    const double y = t.y_max() * i / 21.0;
    EXPECT_NEAR(t.X(t.U(x)), x, 1e-10);
    EXPECT_NEAR(t.Y(t.V(y)), y, 1e-10);
  }
}

TEST(InverseMaps, SatisfyDifferentialEquations) {
  const auto& t = tables();
  const double h = 1e-5;
  for (int i = 1; i <= 9; ++i) {
    const double x = t.x_max() * i / 10.0;
    const double y = t.y_max() * i / 10.0;
    const double du = (t.U(x + h) - t.U(x - h)) / (2 * h);
    const double dv = (t.V(y + h) - t.V(y - h)) / (2 * h);
    const double ru = std::sqrt(1.0 / weight_f(kAxes, t.U(x)));
    const double rv = std::sqrt(-1.0 / weight_f(kAxes, t.V(y)));
    EXPECT_NEAR(du, ru, 1e-6 * ru);
    EXPECT_NEAR(dv, rv, 1e-6 * rv);
    EXPECT_NEAR(t.dU_dx(x), ru, 1e-12 * ru);
    EXPECT_NEAR(t.dV_dy(y), rv, 1e-12 * rv);
  }
}

TEST(ConformalChart, PullbackIsConformal) {
  const SurfaceChart c = liouville_chart(shared_tables());
  SampleGrid{9, 9, 0.05}.for_each(c.domain(), [&](ParamPoint p) {
    const MetricTensor num = induced_metric(c, p, 1e-5);
    const double lam = c.metric.at(p).g11;
    EXPECT_GT(lam, 0.0);
    EXPECT_LE(std::abs(num.g12), 1e-6 * lam) << to_string(p);
    EXPECT_NEAR(num.g11, lam, 1e-6 * lam);
    EXPECT_NEAR(num.g22, lam, 1e-6 * lam);
  });
}

TEST(ConformalChart, PointsOnEllipsoid) {
  const SurfaceChart c = liouville_chart(shared_tables());
  SampleGrid{7, 7, 0.0}.for_each(c.domain(), [&](ParamPoint p) {
    const AmbientPoint x = c.point(p);
    EXPECT_NEAR(std::pow(x[0] / 3, 2) + std::pow(x[1] / 2, 2) + x[2] * x[2], 1.0, 1e-10);
  });
}

TEST(ConformalChart, ClassifiedIsothermalLiouville) {
  const SurfaceChart c = liouville_chart(shared_tables());
  EXPECT_EQ(classify_line_element(c.metric).most_specific, LineElementClass::isothermal_liouville);
}

TEST(ConformalChart, EqualDiagonalEnergies) {
  const SurfaceChart c = liouville_chart(shared_tables());
  for (const RectSpec& r : random_rects(c.domain(), 50, 2024)) {
    const DiagonalEnergies e = diagonal_energies(c.metric, r);
    EXPECT_LE(std::abs(e.gap()), 1e-7 * e.e1);
  }
}

TEST(ClosedForm, AgreesWithTables) {
  EXPECT_LE(gen_sn_cross_check(tables(), tables().y_max() / 2), 1e-7);
  for (int i = 1; i < 10; ++i) EXPECT_LE(gen_sn_cross_check(tables(), tables().y_max() * i / 10), 1e-7);
  EXPECT_NEAR(closed_form_V(kAxes, 1e-9), 1.0, 1e-12);
  EXPECT_THROW(gen_sn_cross_check(tables(), 0.0), ArgumentError);
}

TEST(ClosedForm, ModulusBelowOne) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const double c = uniform(rng, 0.1, 1.0);
    const double b = c + uniform(rng, 0.01, 2.0);
    const double a = b + uniform(rng, 0.01, 2.0);
    const double m2 = a * a * (b * b - c * c) / (b * b * (a * a - c * c));
    EXPECT_LT(m2, 1.0);
    EXPECT_GT(m2, 0.0);
  }
}

TEST(ClosedForm, OtherAxes) {
  const EllipsoidAxes ax{2.5, 1.7, 0.6};
  const ConformalTables t(ax);
  for (double f : {0.2, 0.5, 0.8}) EXPECT_LE(gen_sn_cross_check(t, f * t.y_max()), 1e-7);
}

}  // namespace
