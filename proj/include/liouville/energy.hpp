#pragma once

#include <cmath>
#include <span>

#include "liouville/geometry.hpp"
#include "liouville/quadrature.hpp"

namespace liouville {

namespace detail {

inline double checked_form(const MetricField& metric, const ParamCurve& curve, double t) {
  const ParamPoint p = curve.position(t);
  if (!metric.domain().contains(p)) {
    throw DomainError("curve leaves the metric domain at t = " + std::to_string(t) + ", point " +
                      to_string(p));
  }
  return metric.at(p).form(curve.velocity(t));
}

}  // namespace detail

/// E = integral of c'(t)^t G(c(t)) c'(t) dt over [t_a, t_b].
inline double curve_energy(const MetricField& metric, const ParamCurve& curve,
                           const QuadratureSpec& quad = {}) {
  return integrate([&](double t) { return detail::checked_form(metric, curve, t); }, curve.t_a,
                   curve.t_b, quad);
}

/// L = integral of sqrt(c'^t G c') dt over [t_a, t_b].
inline double curve_length(const MetricField& metric, const ParamCurve& curve,
                           const QuadratureSpec& quad = {}) {
  return integrate(
      [&](double t) { return std::sqrt(std::max(0.0, detail::checked_form(metric, curve, t))); },
      curve.t_a, curve.t_b, quad);
}

namespace detail {

inline double squared_distance(const AmbientPoint& a, const AmbientPoint& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

inline void require_polygon(std::span<const AmbientPoint> points, double t_a, double t_b) {
  if (points.size() < 2) throw ArgumentError("discrete energy/length needs at least 2 points");
  if (!(t_a < t_b)) throw ArgumentError("discrete energy/length needs t_a < t_b");
}

}  // namespace detail

/// Sum of |p_{j+1} - p_j|^2 / dt for points sampled on a uniform partition of [t_a, t_b].
inline double discrete_energy(std::span<const AmbientPoint> points, double t_a, double t_b) {
  detail::require_polygon(points, t_a, t_b);
  const double dt = (t_b - t_a) / static_cast<double>(points.size() - 1);
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < points.size(); ++j) {
    sum += detail::squared_distance(points[j + 1], points[j]);
  }
  return sum / dt;
}

/// Sum of |p_{j+1} - p_j|.
inline double discrete_length(std::span<const AmbientPoint> points, double t_a, double t_b) {
  detail::require_polygon(points, t_a, t_b);
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < points.size(); ++j) {
    sum += std::sqrt(detail::squared_distance(points[j + 1], points[j]));
  }
  return sum;
}

}  // namespace liouville
