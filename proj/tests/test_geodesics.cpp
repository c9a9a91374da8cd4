#include <cmath>

#include <gtest/gtest.h>

#include "liouville/catalog.hpp"
#include "liouville/geodesics.hpp"

namespace {

using namespace liouville;

// (sin^2 u + sinh^2 v)(du^2 + dv^2) = 1/2 (cosh 2v - cos 2u)(du^2 + dv^2): the elliptic plane chart.
LiouvilleSplit elliptic_split(double a) {
  return {[](double u) { return std::pow(std::sin(u), 2); },
          [](double v) { return std::pow(std::sinh(v), 2); }, a};
}

LiouvilleSplit mercator_split(double a) {
  return {[](double u) { return 1.0 / std::pow(std::cosh(u), 2); }, [](double) { return 0.0; }, a};
}

LiouvilleSplit flat_split(double a) {
  return {[](double) { return 1.0; }, [](double) { return 0.0; }, a};
}

TEST(GeodesicField, UnitSpeedIdentity) {
  const LiouvilleSplit s = elliptic_split(0.1);
  for (ParamPoint p : {ParamPoint{1, 1}, ParamPoint{0.5, 0.3}, ParamPoint{1.4, 1.8}}) {
    const Tangent t = liouville_geodesic_field(s, p);
    const double w = s.U(p.u) + s.V(p.v);
    EXPECT_NEAR(w * (t.du * t.du + t.dv * t.dv), 1.0, 1e-15);
  }
}

TEST(GeodesicField, FlatDiagonal) {
  const Tangent t = liouville_geodesic_field(flat_split(0.5), {0.2, 0.3});
  EXPECT_DOUBLE_EQ(t.du, 1 / std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(t.dv, 1 / std::sqrt(2.0));
}

TEST(GeodesicField, MercatorMeridian) {
  const Tangent t = liouville_geodesic_field(mercator_split(0.0), {0.7, 1.0});
  EXPECT_EQ(t.dv, 0.0);
  EXPECT_NEAR(t.du, std::cosh(0.7), 1e-14);
}

TEST(GeodesicField, TurningPoint) {
  EXPECT_THROW(liouville_geodesic_field(mercator_split(0.5), {1.5, 0.0}), TurningPointError);
  EXPECT_THROW(liouville_geodesic_field(elliptic_split(-2.0), {1.0, 0.2}), TurningPointError);
}

TEST(GeodesicIntegration, UnitSpeedAndArcLength) {
  const LiouvilleSplit s = elliptic_split(0.1);
  const GeodesicPolyline g = integrate_liouville_geodesic(s, {0.6, 0.4}, 1.0);
  ASSERT_TRUE(g.complete());
  EXPECT_EQ(g.samples.size(), 4097u);
  EXPECT_LE(unit_speed_defect(s, g), 1e-12);
  const MetricField m = s.metric(Domain(0.05, 3, 0.05, 3));
  EXPECT_NEAR(polyline_length(m, g), 1.0, 1e-9);
}

TEST(GeodesicIntegration, ImageIsStraightInThePlane) {
  // The elliptic chart maps to the Euclidean plane, so geodesics are straight segments.
  const LiouvilleSplit s = elliptic_split(0.1);
  const SurfaceChart c = catalog("elliptic_plane");
  const GeodesicPolyline g = integrate_liouville_geodesic(s, {0.6, 0.4}, 1.0);
  const AmbientPoint a = c.point(g.samples.front().p);
  const AmbientPoint b = c.point(g.samples.back().p);
  const double len = std::hypot(b[0] - a[0], b[1] - a[1]);
  EXPECT_NEAR(len, 1.0, 1e-9);
  double worst = 0;
  for (const auto& smp : g.samples) {
    const AmbientPoint x = c.point(smp.p);
    const double cross = (b[0] - a[0]) * (x[1] - a[1]) - (b[1] - a[1]) * (x[0] - a[0]);
    worst = std::max(worst, std::abs(cross) / len);
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(GeodesicIntegration, CartesianIsStraight) {
  const LiouvilleSplit s = flat_split(0.3);
  const GeodesicPolyline g = integrate_liouville_geodesic(s, {-1, -1}, 2.0, 2.0 / 100);
  const Tangent dir{std::sqrt(0.7), std::sqrt(0.3)};
  for (const auto& smp : g.samples) {
    EXPECT_NEAR(smp.p.u, -1 + smp.t * dir.du, 1e-10);
    EXPECT_NEAR(smp.p.v, -1 + smp.t * dir.dv, 1e-10);
  }
  const auto [r1, r2] = geodesic_residual(catalog("cartesian").metric, g, 0.1);
  EXPECT_LE(r1, 1e-10);
  EXPECT_LE(r2, 1e-10);
}

TEST(GeodesicResidual, SmallAndSecondOrder) {
  const LiouvilleSplit s = elliptic_split(0.1);
  const MetricField m = catalog("elliptic_plane").metric;
  const GeodesicPolyline g = integrate_liouville_geodesic(s, {1.2, 1.0}, 1.0);
  ASSERT_TRUE(g.complete());
  double prev = 0;
  for (double h : {0.01, 0.005, 0.0025}) {
    const auto [r1, r2] = geodesic_residual(m, g, h);
    const double r = std::max(r1, r2);
    if (prev > 0) EXPECT_NEAR(prev / r, 4.0, 0.5) << h;
    prev = r;
  }
  const auto [r1, r2] = geodesic_residual(m, g, g.step);
  EXPECT_LE(r1, 1e-6);
  EXPECT_LE(r2, 1e-6);
}

TEST(GeodesicResidual, NearFocusStillSecondOrder) {
  // Passing close to a focus the constant grows, but the rate does not.
  const GeodesicPolyline g = integrate_liouville_geodesic(elliptic_split(0.1), {0.6, 0.4}, 1.0);
  const MetricField m = catalog("elliptic_plane").metric;
  const auto [a1, a2] = geodesic_residual(m, g, 0.005);
  const auto [b1, b2] = geodesic_residual(m, g, 0.0025);
  EXPECT_NEAR(std::max(a1, a2) / std::max(b1, b2), 4.0, 0.5);
  EXPECT_LE(std::max(b1, b2), 2e-4);
}

TEST(GeodesicResidual, MercatorMeridianIsArcLengthULine) {
  const LiouvilleSplit s = mercator_split(0.0);
  const GeodesicPolyline g = integrate_liouville_geodesic(s, {-0.5, 1.0}, 1.0);
  ASSERT_TRUE(g.complete());
  for (const auto& smp : g.samples) EXPECT_EQ(smp.p.v, 1.0);
  const auto [r1, r2] = geodesic_residual(catalog("sphere_mercator").metric, g, g.step);
  EXPECT_LE(r1, 1e-6);
  EXPECT_EQ(r2, 0.0);
}

TEST(GeodesicIntegration, StopsAtTurningPoint) {
  const GeodesicPolyline g = integrate_liouville_geodesic(mercator_split(0.2), {0.0, 1.0}, 5.0);
  EXPECT_TRUE(g.turning_point);
  EXPECT_FALSE(g.complete());
  EXPECT_LT(g.length_parameter(), 5.0);
  // Turning latitude: sech^2 u = a.
  EXPECT_NEAR(g.samples.back().p.u, std::acosh(std::sqrt(5.0)), 1e-2);
}

TEST(GeodesicIntegration, StopsAtDomainBoundary) {
  const GeodesicPolyline g =
      integrate_liouville_geodesic(flat_split(0.5), {0, 0}, 10.0, 0.0, Domain(-1, 1, -1, 1));
  EXPECT_TRUE(g.left_domain);
  EXPECT_NEAR(g.length_parameter(), std::sqrt(2.0), 1e-2);
}

TEST(GeodesicIntegration, ArgumentChecks) {
  EXPECT_THROW(integrate_liouville_geodesic(flat_split(0.5), {0, 0}, 0.0), ArgumentError);
  EXPECT_THROW(integrate_liouville_geodesic(flat_split(0.5), {0, 0}, 1.0, 2.0), ArgumentError);
  EXPECT_THROW(integrate_liouville_geodesic(flat_split(0.5), {5, 0}, 1.0, 0.0, Domain(-1, 1, -1, 1)),
               DomainError);
}

}  // namespace
