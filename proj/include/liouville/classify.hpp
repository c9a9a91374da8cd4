#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <string_view>

#include "liouville/geometry.hpp"

namespace liouville {

enum class LineElementClass {
  general,
  orthogonal,
  isothermal,
  orthogonal_liouville,
  isothermal_liouville,
  clairaut_u,
  clairaut_v,
  liouville_U1_V2,
  liouville_V1_U2,
};

inline std::string_view to_string(LineElementClass c) {
  switch (c) {
    case LineElementClass::general: return "general";
    case LineElementClass::orthogonal: return "orthogonal";
    case LineElementClass::isothermal: return "isothermal";
    case LineElementClass::orthogonal_liouville: return "orthogonal_liouville";
    case LineElementClass::isothermal_liouville: return "isothermal_liouville";
    case LineElementClass::clairaut_u: return "clairaut_u";
    case LineElementClass::clairaut_v: return "clairaut_v";
    case LineElementClass::liouville_U1_V2: return "liouville_U1_V2";
    case LineElementClass::liouville_V1_U2: return "liouville_V1_U2";
  }
  return "unknown";
}

/// Which defining identities held on the sample grid.
struct LineElementTraits {
  bool orthogonal = false;    // g12 = 0
  bool isothermal = false;    // plus g11 = g22
  bool liouville = false;     // plus d2/dudv g11 = d2/dudv g22 = 0
  bool clairaut_u = false;    // plus d/dv g11 = d/dv g22 = 0
  bool clairaut_v = false;    // plus d/du g11 = d/du g22 = 0
  bool u1_v2 = false;         // plus d/dv g11 = d/du g22 = 0
  bool v1_u2 = false;         // plus d/du g11 = d/dv g22 = 0
};

/// Result of classification: the most specific class plus all predicates.
struct Classification {
  LineElementClass most_specific = LineElementClass::general;
  LineElementTraits traits;

  /// True when the metric satisfies the defining identities of `c`
  /// (so an isothermal Clairaut metric satisfies orthogonal_liouville, etc.).
  [[nodiscard]] bool satisfies(LineElementClass c) const {
    const auto& t = traits;
    switch (c) {
      case LineElementClass::general: return true;
      case LineElementClass::orthogonal: return t.orthogonal;
      case LineElementClass::isothermal: return t.isothermal;
      case LineElementClass::orthogonal_liouville: return t.liouville;
      case LineElementClass::isothermal_liouville: return t.liouville && t.isothermal;
      case LineElementClass::clairaut_u: return t.clairaut_u;
      case LineElementClass::clairaut_v: return t.clairaut_v;
      case LineElementClass::liouville_U1_V2: return t.u1_v2;
      case LineElementClass::liouville_V1_U2: return t.v1_u2;
    }
    return false;
  }
};

/// Whether every metric of class `c` is an orthogonal Liouville metric.
inline bool is_liouville_family(LineElementClass c) {
  switch (c) {
    case LineElementClass::orthogonal_liouville:
    case LineElementClass::isothermal_liouville:
    case LineElementClass::clairaut_u:
    case LineElementClass::clairaut_v:
    case LineElementClass::liouville_U1_V2:
    case LineElementClass::liouville_V1_U2: return true;
    default: return false;
  }
}

struct SampleGrid {
  int nu = 17;
  int nv = 17;
  double margin = 0.05;  // fraction of each extent kept clear of the boundary

  [[nodiscard]] ParamPoint point(const Domain& d, int i, int j) const {
    const double u0 = d.u_min + margin * d.u_extent();
    const double u1 = d.u_max - margin * d.u_extent();
    const double v0 = d.v_min + margin * d.v_extent();
    const double v1 = d.v_max - margin * d.v_extent();
    return {nu == 1 ? 0.5 * (u0 + u1) : u0 + (u1 - u0) * i / (nu - 1.0),
            nv == 1 ? 0.5 * (v0 + v1) : v0 + (v1 - v0) * j / (nv - 1.0)};
  }

  template <class F>
  void for_each(const Domain& d, F&& f) const {
    for (int i = 0; i < nu; ++i) {
      for (int j = 0; j < nv; ++j) f(point(d, i, j));
    }
  }
};

namespace detail {

struct MetricPartials {
  MetricTensor g;
  double g11_u, g11_v, g22_u, g22_v, g11_uv, g22_uv;
};

// Central differences; the mixed partial uses the four-point cross stencil.
inline MetricPartials metric_partials(const MetricField& metric, ParamPoint p, double hu,
                                      double hv) {
  const auto at = [&](double du, double dv) { return metric.unchecked({p.u + du, p.v + dv}); };
  const MetricTensor up = at(hu, 0), um = at(-hu, 0), vp = at(0, hv), vm = at(0, -hv);
  const MetricTensor pp = at(hu, hv), pm = at(hu, -hv), mp = at(-hu, hv), mm = at(-hu, -hv);
  MetricPartials r;
  r.g = metric.unchecked(p);
  r.g11_u = (up.g11 - um.g11) / (2 * hu);
  r.g22_u = (up.g22 - um.g22) / (2 * hu);
  r.g11_v = (vp.g11 - vm.g11) / (2 * hv);
  r.g22_v = (vp.g22 - vm.g22) / (2 * hv);
  r.g11_uv = (pp.g11 - pm.g11 - mp.g11 + mm.g11) / (4 * hu * hv);
  r.g22_uv = (pp.g22 - pm.g22 - mp.g22 + mm.g22) / (4 * hu * hv);
  return r;
}

}  // namespace detail

/// Numeric classification of a line element on a sample grid.
///
/// A quantity counts as zero when it is below `tol` times the largest |g_ij|
/// on the grid; derivatives are first made dimensionless by multiplying with
/// the domain extents. Finite-difference steps are extent * 1e-4.
inline Classification classify_line_element(const MetricField& metric, const SampleGrid& grid = {},
                                            double tol = 1e-6) {
  const Domain& d = metric.domain();
  const double hu = d.u_extent() * 1e-4;
  const double hv = d.v_extent() * 1e-4;
  const double eu = d.u_extent();
  const double ev = d.v_extent();

  double gmax = 0.0;
  double g12 = 0.0, iso = 0.0;
  double g11_u = 0.0, g11_v = 0.0, g22_u = 0.0, g22_v = 0.0, mixed = 0.0;
  grid.for_each(d, [&](ParamPoint p) {
    if (!d.contains_with_margin(p, hu, hv)) {
      throw DomainError("classification grid point too close to the boundary: " + to_string(p));
    }
    const auto dp = detail::metric_partials(metric, p, hu, hv);
    if (!dp.g.positive_definite()) {
      throw InvalidMetricError("metric not positive definite at " + to_string(p));
    }
    gmax = std::max({gmax, std::abs(dp.g.g11), std::abs(dp.g.g12), std::abs(dp.g.g22)});
    g12 = std::max(g12, std::abs(dp.g.g12));
    iso = std::max(iso, std::abs(dp.g.g11 - dp.g.g22));
    g11_u = std::max(g11_u, std::abs(dp.g11_u) * eu);
    g11_v = std::max(g11_v, std::abs(dp.g11_v) * ev);
    g22_u = std::max(g22_u, std::abs(dp.g22_u) * eu);
    g22_v = std::max(g22_v, std::abs(dp.g22_v) * ev);
    mixed = std::max({mixed, std::abs(dp.g11_uv) * eu * ev, std::abs(dp.g22_uv) * eu * ev});
  });

  const double zero = tol * gmax;
  Classification c;
  auto& t = c.traits;
  t.orthogonal = g12 <= zero;
  t.isothermal = t.orthogonal && iso <= zero;
  t.liouville = t.orthogonal && mixed <= zero;
  t.clairaut_u = t.orthogonal && g11_v <= zero && g22_v <= zero;
  t.clairaut_v = t.orthogonal && g11_u <= zero && g22_u <= zero;
  t.u1_v2 = t.orthogonal && g11_v <= zero && g22_u <= zero;
  t.v1_u2 = t.orthogonal && g11_u <= zero && g22_v <= zero;
  // Single-parameter dependence forces the mixed partials to vanish.
  t.liouville = t.liouville || t.clairaut_u || t.clairaut_v || t.u1_v2 || t.v1_u2;

  using C = LineElementClass;
  if (t.clairaut_u) c.most_specific = C::clairaut_u;
  else if (t.clairaut_v) c.most_specific = C::clairaut_v;
  else if (t.u1_v2) c.most_specific = C::liouville_U1_V2;
  else if (t.v1_u2) c.most_specific = C::liouville_V1_U2;
  else if (t.liouville && t.isothermal) c.most_specific = C::isothermal_liouville;
  else if (t.liouville) c.most_specific = C::orthogonal_liouville;
  else if (t.isothermal) c.most_specific = C::isothermal;
  else if (t.orthogonal) c.most_specific = C::orthogonal;
  return c;
}

/// Scalar function of one parameter.
using ScalarFn = std::function<double(double)>;

/// Checks ds^2 = |U V; U1 V1| (du^2 / V1 - dv^2 / U1) with g12 = 0 on the grid.
inline bool is_staeckel_decomposition(const ScalarFn& U, const ScalarFn& U1, const ScalarFn& V,
                                      const ScalarFn& V1, const MetricField& metric,
                                      const SampleGrid& grid = {}, double tol = 1e-9) {
  bool ok = true;
  grid.for_each(metric.domain(), [&](ParamPoint p) {
    const double u1 = U1(p.u);
    const double v1 = V1(p.v);
    if (u1 == 0.0 || v1 == 0.0 || !std::isfinite(u1) || !std::isfinite(v1)) {
      throw SingularityError("Staeckel decomposition: U1 or V1 vanishes at " + to_string(p));
    }
    const double det = U(p.u) * v1 - V(p.v) * u1;
    const MetricTensor g = metric.at(p);
    const double scale = std::max({1.0, std::abs(g.g11), std::abs(g.g22)});
    if (std::abs(g.g11 - det / v1) > tol * scale || std::abs(g.g22 + det / u1) > tol * scale ||
        std::abs(g.g12) > tol * scale) {
      ok = false;
    }
  });
  return ok;
}

}  // namespace liouville
