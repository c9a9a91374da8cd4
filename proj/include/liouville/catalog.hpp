#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "liouville/chart.hpp"
#include "liouville/ellipsoid.hpp"

namespace liouville {

/// Parameters for the parametric catalog families.
struct CatalogParams {
  double helicoid_t = 0.0;  // helicoid (0) to catenoid (1)
  EllipsoidAxes axes{};
};

namespace detail {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline SurfaceChart plane_chart(std::string name, std::function<AmbientPoint(ParamPoint)> embed,
                                MetricField metric, LineElementClass cls, bool staeckel = true) {
  return SurfaceChart{std::move(name), std::move(embed), std::move(metric), cls, 2, staeckel};
}

inline SurfaceChart space_chart(std::string name, std::function<AmbientPoint(ParamPoint)> embed,
                                MetricField metric, LineElementClass cls, bool staeckel = true) {
  return SurfaceChart{std::move(name), std::move(embed), std::move(metric), cls, 3, staeckel};
}

}  // namespace detail

/// All names accepted by `catalog`.
inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{
      "cartesian",
      "polar_log",
      "parabolic",
      "elliptic_plane",
      "polar_standard",
      "plane_u2_v5",
      "sphere_rotation",
      "sphere_mercator",
      "pseudosphere_rotation",
      "pseudosphere_isothermal",
      "parabolic_cylinder_translation",
      "parabolic_cylinder_simple",
      "plane_translation",
      "enneper_polynomial",
      "enneper_isothermal_clairaut",
      "helicoid_catenoid",
      "ellipsoid_curvature_lines",
  };
  return names;
}

/// Named example chart with its closed-form line element.
inline SurfaceChart catalog(std::string_view name, const CatalogParams& params = {}) {
  using C = LineElementClass;
  using std::cos, std::sin, std::cosh, std::sinh, std::exp;
  const Domain square(-2, 2, -2, 2);
  const Domain positive(0.1, 2, 0.1, 2);

  if (name == "cartesian") {
    return detail::plane_chart(
        "cartesian", [](ParamPoint p) { return AmbientPoint{p.u, p.v, 0}; },
        MetricField::conformal([](ParamPoint) { return 1.0; }, square), C::clairaut_u);
  }
  if (name == "polar_log") {
    return detail::plane_chart(
        "polar_log",
        [](ParamPoint p) { return AmbientPoint{exp(p.u) * cos(p.v), exp(p.u) * sin(p.v), 0}; },
        MetricField::conformal([](ParamPoint p) { return exp(2 * p.u); },
                               Domain(-1, 1, 0, detail::kTwoPi)),
        C::clairaut_u);
  }
  if (name == "parabolic") {
    return detail::plane_chart(
        "parabolic",
        [](ParamPoint p) { return AmbientPoint{p.u * p.u - p.v * p.v, 2 * p.u * p.v, 0}; },
        MetricField::conformal([](ParamPoint p) { return 4 * (p.u * p.u + p.v * p.v); }, positive),
        C::isothermal_liouville);
  }
  if (name == "elliptic_plane") {
    return detail::plane_chart(
        "elliptic_plane",
        [](ParamPoint p) { return AmbientPoint{cos(p.u) * cosh(p.v), -sin(p.u) * sinh(p.v), 0}; },
        MetricField::conformal([](ParamPoint p) { return 0.5 * (cosh(2 * p.v) - cos(2 * p.u)); },
                               positive),
        C::isothermal_liouville);
  }
  if (name == "polar_standard") {
    return detail::plane_chart(
        "polar_standard",
        [](ParamPoint p) { return AmbientPoint{p.u * cos(p.v), p.u * sin(p.v), 0}; },
        MetricField::orthogonal([](ParamPoint) { return 1.0; },
                                [](ParamPoint p) { return p.u * p.u; },
                                Domain(0.1, 2, 0, detail::kTwoPi)),
        C::clairaut_u);
  }
  if (name == "plane_u2_v5") {
    return detail::plane_chart(
        "plane_u2_v5", [](ParamPoint p) { return AmbientPoint{std::pow(p.v, 5), p.u * p.u, 0}; },
        MetricField::orthogonal([](ParamPoint p) { return 4 * p.u * p.u; },
                                [](ParamPoint p) { return 25 * std::pow(p.v, 8); }, positive),
        C::liouville_U1_V2);
  }
  if (name == "sphere_rotation") {
    const double lim = std::numbers::pi / 2 - 0.1;
    return detail::space_chart(
        "sphere_rotation",
        [](ParamPoint p) {
          return AmbientPoint{cos(p.u) * cos(p.v), cos(p.u) * sin(p.v), sin(p.u)};
        },
        MetricField::orthogonal([](ParamPoint) { return 1.0; },
                                [](ParamPoint p) { return std::pow(cos(p.u), 2); },
                                Domain(-lim, lim, 0, detail::kTwoPi)),
        C::clairaut_u);
  }
  if (name == "sphere_mercator") {
    return detail::space_chart(
        "sphere_mercator",
        [](ParamPoint p) {
          return AmbientPoint{cos(p.v) / cosh(p.u), sin(p.v) / cosh(p.u), std::tanh(p.u)};
        },
        MetricField::conformal([](ParamPoint p) { return 1.0 / std::pow(cosh(p.u), 2); },
                               Domain(-2, 2, 0, detail::kTwoPi)),
        C::clairaut_u);
  }
  if (name == "pseudosphere_rotation") {
    // Induced form of the embedding; g11 = tanh^2 u, g22 = 1 / cosh^2 u.
    return detail::space_chart(
        "pseudosphere_rotation",
        [](ParamPoint p) {
          return AmbientPoint{cos(p.v) / cosh(p.u), sin(p.v) / cosh(p.u), p.u - std::tanh(p.u)};
        },
        MetricField::orthogonal([](ParamPoint p) { return std::pow(std::tanh(p.u), 2); },
                                [](ParamPoint p) { return 1.0 / std::pow(cosh(p.u), 2); },
                                Domain(0.1, 3, 0, detail::kTwoPi)),
        C::clairaut_u);
  }
  if (name == "pseudosphere_isothermal") {
    return detail::space_chart(
        "pseudosphere_isothermal",
        [](ParamPoint p) {
          return AmbientPoint{cos(p.v) / p.u, sin(p.v) / p.u,
                              std::acosh(p.u) - std::sqrt(p.u * p.u - 1) / p.u};
        },
        MetricField::conformal([](ParamPoint p) { return 1.0 / (p.u * p.u); },
                               Domain(1.1, 5, 0, detail::kTwoPi)),
        C::clairaut_u);
  }
  if (name == "parabolic_cylinder_translation") {
    // g22 = 8 v^2 degenerates at v = 0, so v stays positive.
    return detail::space_chart(
        "parabolic_cylinder_translation",
        [](ParamPoint p) {
          return AmbientPoint{p.u, p.u * p.u + p.v * p.v, p.u * p.u - p.v * p.v};
        },
        MetricField::orthogonal([](ParamPoint p) { return 1 + 8 * p.u * p.u; },
                                [](ParamPoint p) { return 8 * p.v * p.v; }, Domain(-2, 2, 0.1, 2)),
        C::liouville_U1_V2);
  }
  if (name == "parabolic_cylinder_simple") {
    return detail::space_chart(
        "parabolic_cylinder_simple", [](ParamPoint p) { return AmbientPoint{p.u, p.v, p.u * p.u}; },
        MetricField::orthogonal([](ParamPoint p) { return 1 + 4 * p.u * p.u; },
                                [](ParamPoint) { return 1.0; }, square),
        C::clairaut_u);
  }
  if (name == "plane_translation") {
    return detail::space_chart(
        "plane_translation",
        [](ParamPoint p) { return AmbientPoint{p.u, p.u + p.v, p.u - p.v}; },
        MetricField::orthogonal([](ParamPoint) { return 3.0; }, [](ParamPoint) { return 2.0; },
                                square),
        C::clairaut_u);
  }
  if (name == "enneper_polynomial") {
    return detail::space_chart(
        "enneper_polynomial",
        [](ParamPoint p) {
          const double u = p.u, v = p.v;
          return AmbientPoint{v * (-3 * u * u + v * v + 3), u * (u * u - 3 * v * v + 3), 6 * u * v};
        },
        MetricField::conformal(
            [](ParamPoint p) { return 9 * std::pow(1 + p.u * p.u + p.v * p.v, 2); }, square),
        C::isothermal, false);
  }
  if (name == "enneper_isothermal_clairaut") {
    return detail::space_chart(
        "enneper_isothermal_clairaut",
        [](ParamPoint p) {
          const double e = exp(p.u), e2 = exp(2 * p.u), c2 = cos(2 * p.v);
          return AmbientPoint{-e * sin(p.v) * (2 * e2 * c2 + e2 - 3),
                              e * cos(p.v) * (2 * e2 * c2 - e2 + 3), 3 * e2 * sin(2 * p.v)};
        },
        MetricField::conformal(
            [](ParamPoint p) { return 9 * exp(2 * p.u) * std::pow(1 + exp(2 * p.u), 2); },
            Domain(-1, 1, 0, detail::kTwoPi)),
        C::clairaut_u);
  }
  if (name == "helicoid_catenoid") {
    const double t = params.helicoid_t;
    if (!(t >= 0.0 && t <= 1.0)) throw ArgumentError("helicoid_catenoid: t must be in [0, 1]");
    const double w = std::numbers::pi * t / 2;
    return detail::space_chart(
        "helicoid_catenoid",
        [w](ParamPoint p) {
          const double em = exp(-p.u), ep = exp(p.u);
          return AmbientPoint{-em * sin(w - p.v) - 4 * ep * sin(w + p.v),
                              em * cos(w - p.v) - 4 * ep * cos(w + p.v),
                              -4 * (p.u * sin(w) + p.v * cos(w))};
        },
        MetricField::conformal(
            [](ParamPoint p) { return exp(-2 * p.u) + 16 * exp(2 * p.u) + 8; },
            Domain(-1, 1, 0, detail::kTwoPi)),
        C::clairaut_u);
  }
  if (name == "ellipsoid_curvature_lines") {
    const EllipsoidAxes ax = params.axes;
    ax.validate();
    return detail::space_chart(
        "ellipsoid_curvature_lines",
        [ax](ParamPoint p) { return curvature_line_embed(ax, p.u, p.v); },
        MetricField([ax](ParamPoint p) { return curvature_line_metric(ax, p.u, p.v); },
                    curvature_line_domain(ax)),
        C::orthogonal);
  }
  throw LookupError("unknown chart '" + std::string(name) + "'");
}

/// Per-chart comparison of induced and closed-form metrics over the whole catalog.
inline std::vector<ChartMetricCheck> verify_catalog_metrics(double tol,
                                                            const CatalogParams& params = {}) {
  std::vector<ChartMetricCheck> report;
  for (const auto& name : catalog_names()) report.push_back(check_chart_metric(catalog(name, params), tol));
  return report;
}

}  // namespace liouville
