#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liouville/classify.hpp"
#include "liouville/geometry.hpp"

namespace liouville {

/// A parametrized surface (or plane map) with its closed-form line element.
struct SurfaceChart {
  using Embedding = std::function<AmbientPoint(ParamPoint)>;

  std::string name;
  Embedding embed;  // empty for metric-only charts
  MetricField metric;
  LineElementClass expected_class = LineElementClass::general;
  int ambient_dim = 3;
  bool staeckel = false;  // admits a Staeckel form, so Ivory's chord property applies

  [[nodiscard]] const Domain& domain() const { return metric.domain(); }
  [[nodiscard]] bool has_embedding() const { return static_cast<bool>(embed); }
  [[nodiscard]] bool planar() const { return ambient_dim == 2; }

  [[nodiscard]] AmbientPoint point(ParamPoint p) const {
    if (!embed) throw UnsupportedError("chart '" + name + "' has no embedding");
    return embed(p);
  }
};

inline double dot(const AmbientPoint& a, const AmbientPoint& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

/// (x_u.x_u, x_u.x_v; x_u.x_v, x_v.x_v) from central differences of the embedding.
inline MetricTensor induced_metric(const SurfaceChart& chart, ParamPoint p, double h = 1e-5) {
  if (!chart.domain().contains_with_margin(p, h, h)) {
    throw DomainError("induced_metric: stencil leaves the domain at " + to_string(p));
  }
  const AmbientPoint up = chart.point({p.u + h, p.v});
  const AmbientPoint um = chart.point({p.u - h, p.v});
  const AmbientPoint vp = chart.point({p.u, p.v + h});
  const AmbientPoint vm = chart.point({p.u, p.v - h});
  AmbientPoint xu{}, xv{};
  for (int i = 0; i < 3; ++i) {
    xu[i] = (up[i] - um[i]) / (2 * h);
    xv[i] = (vp[i] - vm[i]) / (2 * h);
  }
  return {dot(xu, xu), dot(xu, xv), dot(xv, xv)};
}

struct ChartMetricCheck {
  std::string chart;
  double max_deviation = 0.0;  // relative to max(1, |g|)
  bool passed = false;
};

/// Largest relative deviation between the induced and the stored metric on a grid.
inline ChartMetricCheck check_chart_metric(const SurfaceChart& chart, double tol,
                                           const SampleGrid& grid = {9, 9, 0.05},
                                           double h = 1e-5) {
  ChartMetricCheck r{chart.name, 0.0, false};
  grid.for_each(chart.domain(), [&](ParamPoint p) {
    const MetricTensor num = induced_metric(chart, p, h);
    const MetricTensor ref = chart.metric.at(p);
    const double scale = std::max({1.0, std::abs(ref.g11), std::abs(ref.g22)});
    r.max_deviation = std::max({r.max_deviation, std::abs(num.g11 - ref.g11) / scale,
                                std::abs(num.g12 - ref.g12) / scale,
                                std::abs(num.g22 - ref.g22) / scale});
  });
  r.passed = r.max_deviation <= tol;
  return r;
}

}  // namespace liouville
