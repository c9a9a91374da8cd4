#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "liouville/chart.hpp"
#include "liouville/energy.hpp"
#include "liouville/random.hpp"

namespace liouville {

/// Parameter-line rectangle with center M and half-diagonal delta = (alpha, beta).
///
/// Corners: A = M + delta, C = M - delta, B = M + delta_bar, D = M - delta_bar,
/// where delta_bar = (-alpha, beta).
struct RectSpec {
  ParamPoint center;
  Tangent half_diagonal;

  [[nodiscard]] double alpha() const { return half_diagonal.du; }
  [[nodiscard]] double beta() const { return half_diagonal.dv; }
  [[nodiscard]] Tangent half_diagonal_bar() const { return {-alpha(), beta()}; }

  [[nodiscard]] ParamPoint A() const { return center + half_diagonal; }
  [[nodiscard]] ParamPoint C() const { return center - half_diagonal; }
  [[nodiscard]] ParamPoint B() const { return center + half_diagonal_bar(); }
  [[nodiscard]] ParamPoint D() const { return center - half_diagonal_bar(); }

  [[nodiscard]] bool degenerate() const { return alpha() == 0.0 || beta() == 0.0; }

  /// Rectangle with corners A and C.
  static RectSpec from_corners(ParamPoint a, ParamPoint c) {
    return {{0.5 * (a.u + c.u), 0.5 * (a.v + c.v)}, {0.5 * (a.u - c.u), 0.5 * (a.v - c.v)}};
  }
};

inline void require_corners_inside(const RectSpec& r, const Domain& d) {
  for (ParamPoint p : {r.A(), r.B(), r.C(), r.D()}) {
    if (!d.contains(p)) throw DomainError("rectangle corner " + to_string(p) + " outside the domain");
  }
}

inline void require_nondegenerate(const RectSpec& r) {
  if (r.degenerate()) throw ArgumentError("degenerate rectangle: alpha and beta must be nonzero");
}

struct DiagonalPair {
  ParamCurve d1;  // M + t delta, t in [-1, 1]
  ParamCurve d2;  // M + t delta_bar
};

inline DiagonalPair diagonals(const RectSpec& rect, const Domain& domain) {
  require_corners_inside(rect, domain);
  return {ParamCurve::line(rect.center, rect.half_diagonal, -1.0, 1.0),
          ParamCurve::line(rect.center, rect.half_diagonal_bar(), -1.0, 1.0)};
}

struct DiagonalEnergies {
  double e1 = 0.0;
  double e2 = 0.0;
  [[nodiscard]] double gap() const { return e1 - e2; }
};

/// Energies of both diagonals; degenerate rectangles are allowed here.
inline DiagonalEnergies diagonal_energies(const MetricField& metric, const RectSpec& rect,
                                          const QuadratureSpec& quad = {}) {
  const DiagonalPair d = diagonals(rect, metric.domain());
  return {curve_energy(metric, d.d1, quad), curve_energy(metric, d.d2, quad)};
}

/// E(d1) - E(d2).
inline double diagonal_energy_gap(const MetricField& metric, const RectSpec& rect,
                                  const QuadratureSpec& quad = {}) {
  require_nondegenerate(rect);
  return diagonal_energies(metric, rect, quad).gap();
}

/// f(t) = q1(t) - q2(t) with q_i = d_i'^t G(d_i) d_i'.
inline double diagonal_form_difference(const MetricField& metric, const RectSpec& rect, double t) {
  const Tangent d = rect.half_diagonal;
  const Tangent db = rect.half_diagonal_bar();
  return quadratic_form(metric, rect.center + t * d, d) -
         quadratic_form(metric, rect.center + t * db, db);
}

/// f(t) + f(-t); vanishes for orthogonal Liouville metrics.
inline double oddness_defect(const MetricField& metric, const RectSpec& rect, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw ArgumentError("oddness_defect: t must be in [0, 1]");
  require_corners_inside(rect, metric.domain());
  return diagonal_form_difference(metric, rect, t) + diagonal_form_difference(metric, rect, -t);
}

struct ConverseDiagnostics {
  double g12_estimate = 0.0;  // g12(M)
  double mixed_sum = 0.0;     // d2g11/dudv + d2g22/dudv at M
  double mixed_g11 = 0.0;     // d2g11/dudv at M
};

namespace detail {

/// Second derivative at 0 of the even function c(t) = f(t) + f(-t):
/// 2 (c(h) - c(0)) / h^2 with one Richardson step.
inline double even_second_derivative(const MetricField& metric, const RectSpec& rect, double h) {
  const auto c = [&](double t) {
    return diagonal_form_difference(metric, rect, t) + diagonal_form_difference(metric, rect, -t);
  };
  const double c0 = c(0.0);
  const auto D = [&](double s) { return 2.0 * (c(s) - c0) / (s * s); };
  return (4.0 * D(0.5 * h) - D(h)) / 3.0;
}

}  // namespace detail

/// Finite-difference estimates of g12 and of the mixed partials of g11, g22 at M,
/// from the square delta = (alpha, alpha) and the rectangle delta = (alpha, eps alpha).
///
/// The square gives c1''(0) = 8 alpha^4 (g11_uv + g22_uv); the rectangle gives
/// c2''(0) = 8 alpha^4 eps (g11_uv + eps^2 g22_uv). Eliminating g22_uv:
///   g11_uv = (c2''(0) / (8 alpha^4 eps) - eps^2 mixed_sum) / (1 - eps^2).
inline ConverseDiagnostics converse_diagnostics(const MetricField& metric, ParamPoint m, double alpha,
                                                double eps, double h = 1e-3) {
  if (!(eps > 0.0 && eps < 1.0)) throw ArgumentError("converse_diagnostics: eps must be in (0, 1)");
  if (alpha == 0.0) throw ArgumentError("converse_diagnostics: alpha must be nonzero");
  if (!(h > 0.0)) throw ArgumentError("converse_diagnostics: h must be positive");
  const RectSpec square{m, {alpha, alpha}};
  const RectSpec rect{m, {alpha, eps * alpha}};
  require_corners_inside(square, metric.domain());
  require_corners_inside(rect, metric.domain());

  const double a2 = alpha * alpha;
  const double a4 = a2 * a2;
  ConverseDiagnostics r;
  r.g12_estimate = diagonal_form_difference(metric, square, 0.0) / (4.0 * a2);
  r.mixed_sum = detail::even_second_derivative(metric, square, h) / (8.0 * a4);
  const double c2 = detail::even_second_derivative(metric, rect, h) / (8.0 * a4 * eps);
  r.mixed_g11 = (c2 - eps * eps * r.mixed_sum) / (1.0 - eps * eps);
  return r;
}

namespace detail {

inline void require_planar(const SurfaceChart& chart) {
  if (!chart.planar() || !chart.has_embedding()) {
    throw UnsupportedError("chart '" + chart.name +
                           "' is not a plane map; discrete diagonals are only defined in the plane");
  }
}

inline std::vector<AmbientPoint> image_polygon(const SurfaceChart& chart, const ParamCurve& c, int k) {
  std::vector<AmbientPoint> pts;
  pts.reserve(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    const double t = j == k ? c.t_b : c.t_a + (c.t_b - c.t_a) * j / k;
    pts.push_back(chart.point(c(t)));
  }
  return pts;
}

}  // namespace detail

/// Discrete energies of the two image polygons with k uniform pieces of [-1, 1].
inline DiagonalEnergies discrete_diagonal_energies(const SurfaceChart& chart, const RectSpec& rect,
                                                   int k) {
  detail::require_planar(chart);
  if (k < 1) throw ArgumentError("discrete diagonals need k >= 1");
  const DiagonalPair d = diagonals(rect, chart.domain());
  const auto p1 = detail::image_polygon(chart, d.d1, k);
  const auto p2 = detail::image_polygon(chart, d.d2, k);
  return {discrete_energy(p1, -1.0, 1.0), discrete_energy(p2, -1.0, 1.0)};
}

inline double discrete_diagonal_gap(const SurfaceChart& chart, const RectSpec& rect, int k) {
  return discrete_diagonal_energies(chart, rect, k).gap();
}

/// Euclidean lengths |x(A) - x(C)| and |x(B) - x(D)|.
inline std::pair<double, double> ivory_chords(const SurfaceChart& chart, const RectSpec& rect) {
  detail::require_planar(chart);
  require_corners_inside(rect, chart.domain());
  const auto dist = [&](ParamPoint p, ParamPoint q) {
    return std::sqrt(detail::squared_distance(chart.point(p), chart.point(q)));
  };
  return {dist(rect.A(), rect.C()), dist(rect.B(), rect.D())};
}

/// Rectangle with M uniform in the middle 60% of the domain and
/// |alpha|, |beta| in [0.05, 0.4] of the distance from M to the boundary.
inline RectSpec random_rect(const Domain& d, std::mt19937_64& rng) {
  const double u = d.u_min + d.u_extent() * uniform(rng, 0.2, 0.8);
  const double v = d.v_min + d.v_extent() * uniform(rng, 0.2, 0.8);
  const double mu = std::min(u - d.u_min, d.u_max - u);
  const double mv = std::min(v - d.v_min, d.v_max - v);
  const double alpha = random_sign(rng) * mu * uniform(rng, 0.05, 0.4);
  const double beta = random_sign(rng) * mv * uniform(rng, 0.05, 0.4);
  return {{u, v}, {alpha, beta}};
}

inline std::vector<RectSpec> random_rects(const Domain& d, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RectSpec> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) out.push_back(random_rect(d, rng));
  return out;
}

}  // namespace liouville
