#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "liouville/classify.hpp"
#include "liouville/geometry.hpp"
#include "liouville/quadrature.hpp"

namespace liouville {

/// Isothermal Liouville metric (U(u) + V(v)) (du^2 + dv^2) with a separation constant a.
struct LiouvilleSplit {
  ScalarFn U;
  ScalarFn V;
  double a_const = 0.0;

  [[nodiscard]] MetricField metric(const Domain& d) const {
    return MetricField::conformal([U = U, V = V](ParamPoint p) { return U(p.u) + V(p.v); }, d);
  }
};

/// Recovers U, V from a conformal factor lambda = U(u) + V(v) by slicing through `base`:
/// U(u) = lambda(u, v0), V(v) = lambda(u0, v) - lambda(u0, v0). Exact only for Liouville lambda.
inline LiouvilleSplit isothermal_split(const MetricField& metric, ParamPoint base, double a) {
  const double l0 = metric.at(base).g11;
  return {[metric, v0 = base.v](double u) { return metric.unchecked({u, v0}).g11; },
          [metric, u0 = base.u, l0](double v) { return metric.unchecked({u0, v}).g11 - l0; }, a};
}

/// du/dt = sqrt(U - a) / (U + V), dv/dt = sqrt(a + V) / (U + V); t is arc length.
inline Tangent liouville_geodesic_field(const LiouvilleSplit& s, ParamPoint p) {
  const double U = s.U(p.u);
  const double V = s.V(p.v);
  const double ru = U - s.a_const;
  const double rv = s.a_const + V;
  if (ru < 0.0 || rv < 0.0) {
    throw TurningPointError("geodesic radicand negative at " + to_string(p));
  }
  const double w = U + V;
  if (!(w > 0.0)) throw InvalidMetricError("U + V not positive at " + to_string(p));
  return {std::sqrt(ru) / w, std::sqrt(rv) / w};
}

struct GeodesicSample {
  double t = 0.0;
  ParamPoint p;
  Tangent vel;
};

struct GeodesicPolyline {
  std::vector<GeodesicSample> samples;
  double step = 0.0;
  bool turning_point = false;  // stopped where a radicand crossed 0
  bool left_domain = false;    // stopped at the domain boundary

  [[nodiscard]] bool complete() const { return !turning_point && !left_domain; }
  [[nodiscard]] double length_parameter() const { return samples.empty() ? 0.0 : samples.back().t; }
};

/// Classical RK4 with fixed step (default T / 4096) on the first-order geodesic system.
inline GeodesicPolyline integrate_liouville_geodesic(const LiouvilleSplit& split, ParamPoint start,
                                                     double T, double step = 0.0,
                                                     std::optional<Domain> domain = std::nullopt) {
  if (!(T > 0.0)) throw ArgumentError("integrate_liouville_geodesic: T must be positive");
  if (step <= 0.0) step = T / 4096.0;
  if (step > T) throw ArgumentError("integrate_liouville_geodesic: step larger than T");
  const auto n = std::max(1L, static_cast<long>(std::llround(T / step)));
  step = T / static_cast<double>(n);
  if (domain && !domain->contains(start)) throw DomainError("geodesic start outside the domain");

  GeodesicPolyline out;
  out.step = step;
  out.samples.reserve(static_cast<std::size_t>(n) + 1);
  ParamPoint p = start;
  out.samples.push_back({0.0, p, liouville_geodesic_field(split, p)});
  for (long i = 1; i <= n; ++i) {
    ParamPoint next;
    Tangent vel;
    try {
      const Tangent k1 = out.samples.back().vel;
      const Tangent k2 = liouville_geodesic_field(split, p + (0.5 * step) * k1);
      const Tangent k3 = liouville_geodesic_field(split, p + (0.5 * step) * k2);
      const Tangent k4 = liouville_geodesic_field(split, p + step * k3);
      next = {p.u + step / 6.0 * (k1.du + 2 * k2.du + 2 * k3.du + k4.du),
              p.v + step / 6.0 * (k1.dv + 2 * k2.dv + 2 * k3.dv + k4.dv)};
      vel = liouville_geodesic_field(split, next);
    } catch (const TurningPointError&) {
      out.turning_point = true;
      break;
    }
    if (domain && !domain->contains(next)) {
      out.left_domain = true;
      break;
    }
    p = next;
    out.samples.push_back({step * static_cast<double>(i), p, vel});
  }
  return out;
}

/// Largest |(U + V)(u'^2 + v'^2) - 1| over the samples.
inline double unit_speed_defect(const LiouvilleSplit& split, const GeodesicPolyline& poly) {
  double worst = 0.0;
  for (const auto& s : poly.samples) {
    const double w = split.U(s.p.u) + split.V(s.p.v);
    worst = std::max(worst, std::abs(w * (s.vel.du * s.vel.du + s.vel.dv * s.vel.dv) - 1.0));
  }
  return worst;
}

/// Residuals of the orthogonal geodesic equations
///   2 g11 u'' + g11_u u'^2 + 2 g11_v u' v' - g22_u v'^2 = 0
///   2 g22 v'' - g11_v u'^2 + 2 g22_u u' v' + g22_v v'^2 = 0
/// with u'', v'' and the metric partials from central differences of step h.
/// Returns the maxima over all samples at least h away from both ends.
inline std::pair<double, double> geodesic_residual(const MetricField& metric,
                                                   const GeodesicPolyline& poly, double h) {
  if (!(h > 0.0)) throw ArgumentError("geodesic_residual: h must be positive");
  const auto k = static_cast<std::size_t>(std::max(1L, std::lround(h / poly.step)));
  const double hh = static_cast<double>(k) * poly.step;
  const auto& s = poly.samples;
  if (s.size() < 2 * k + 1) throw ArgumentError("geodesic_residual: polyline too short for h");
  double r1 = 0.0, r2 = 0.0;
  for (std::size_t i = k; i + k < s.size(); ++i) {
    const ParamPoint p = s[i].p;
    if (!metric.domain().contains_with_margin(p, hh, hh)) {
      throw DomainError("geodesic_residual: stencil leaves the domain at " + to_string(p));
    }
    const double du = s[i].vel.du, dv = s[i].vel.dv;
    const double uu = (s[i + k].vel.du - s[i - k].vel.du) / (2 * hh);
    const double vv = (s[i + k].vel.dv - s[i - k].vel.dv) / (2 * hh);
    const MetricTensor g = metric.at(p);
    const MetricTensor up = metric.at({p.u + hh, p.v}), um = metric.at({p.u - hh, p.v});
    const MetricTensor vp = metric.at({p.u, p.v + hh}), vm = metric.at({p.u, p.v - hh});
    const double g11_u = (up.g11 - um.g11) / (2 * hh), g22_u = (up.g22 - um.g22) / (2 * hh);
    const double g11_v = (vp.g11 - vm.g11) / (2 * hh), g22_v = (vp.g22 - vm.g22) / (2 * hh);
    r1 = std::max(r1, std::abs(2 * g.g11 * uu + g11_u * du * du + 2 * g11_v * du * dv -
                               g22_u * dv * dv));
    r2 = std::max(r2, std::abs(2 * g.g22 * vv - g11_v * du * du + 2 * g22_u * du * dv +
                               g22_v * dv * dv));
  }
  return {r1, r2};
}

/// Length of the piecewise cubic Hermite curve through the samples.
inline double polyline_length(const MetricField& metric, const GeodesicPolyline& poly,
                              const QuadratureSpec& quad = {QuadratureScheme::gauss_legendre, 8,
                                                            1e-12, 40}) {
  double total = 0.0;
  const auto& s = poly.samples;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const GeodesicSample& a = s[i];
    const GeodesicSample& b = s[i + 1];
    const double dt = b.t - a.t;
    const auto speed = [&](double t) {
      const double w = (t - a.t) / dt;
      const double w2 = w * w;
      const double h00 = 2 * w2 * w - 3 * w2 + 1, h10 = w2 * w - 2 * w2 + w;
      const double h01 = -2 * w2 * w + 3 * w2, h11 = w2 * w - w2;
      // Derivatives of the basis with respect to t.
      const double d00 = (6 * w2 - 6 * w) / dt, d10 = 3 * w2 - 4 * w + 1;
      const double d01 = (-6 * w2 + 6 * w) / dt, d11 = 3 * w2 - 2 * w;
      const ParamPoint p{h00 * a.p.u + h10 * dt * a.vel.du + h01 * b.p.u + h11 * dt * b.vel.du,
                         h00 * a.p.v + h10 * dt * a.vel.dv + h01 * b.p.v + h11 * dt * b.vel.dv};
      const Tangent v{d00 * a.p.u + d10 * a.vel.du + d01 * b.p.u + d11 * b.vel.du,
                      d00 * a.p.v + d10 * a.vel.dv + d01 * b.p.v + d11 * b.vel.dv};
      return std::sqrt(metric.at(p).form(v));
    };
    total += integrate(speed, a.t, b.t, quad);
  }
  return total;
}

}  // namespace liouville
