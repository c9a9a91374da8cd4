#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "liouville/chart.hpp"
#include "liouville/quadrature.hpp"
#include "liouville/special/lie_series.hpp"

namespace liouville {

/// Semi-axes of a triaxial ellipsoid, 0 < c < b < a.
struct EllipsoidAxes {
  double a = 3.0;
  double b = 2.0;
  double c = 1.0;

  void validate() const {
    if (!(c > 0.0 && c < b && b < a)) {
      throw ArgumentError("EllipsoidAxes: need 0 < c < b < a");
    }
  }
};

/// f(t) = t / (4 (a^2 - t)(b^2 - t)(c^2 - t)).
inline double weight_f(const EllipsoidAxes& ax, double t) {
  const double d = 4.0 * (ax.a * ax.a - t) * (ax.b * ax.b - t) * (ax.c * ax.c - t);
  if (d == 0.0) throw SingularityError("weight_f: t is a squared semi-axis");
  return t / d;
}

/// Curvature-line parametrization, c^2 <= v <= b^2 <= u <= a^2 (first octant).
inline AmbientPoint curvature_line_embed(const EllipsoidAxes& ax, double u, double v) {
  const double a2 = ax.a * ax.a, b2 = ax.b * ax.b, c2 = ax.c * ax.c;
  if (!(c2 <= v && v <= b2 && b2 <= u && u <= a2)) {
    throw DomainError("curvature_line_embed: need c^2 <= v <= b^2 <= u <= a^2");
  }
  const auto root = [](double x) { return std::sqrt(std::max(0.0, x)); };
  return {root(a2 * (a2 - u) * (a2 - v) / ((a2 - b2) * (a2 - c2))),
          root(b2 * (b2 - u) * (b2 - v) / ((b2 - c2) * (b2 - a2))),
          root(c2 * (c2 - u) * (c2 - v) / ((c2 - a2) * (c2 - b2)))};
}

inline MetricTensor curvature_line_metric(const EllipsoidAxes& ax, double u, double v) {
  return {(u - v) * weight_f(ax, u), 0.0, -(u - v) * weight_f(ax, v)};
}

/// (b^2 + eps, a^2 - eps) x (c^2 + eps, b^2 - eps) with eps = 1e-3 (a^2 - c^2).
inline Domain curvature_line_domain(const EllipsoidAxes& ax) {
  const double a2 = ax.a * ax.a, b2 = ax.b * ax.b, c2 = ax.c * ax.c;
  const double eps = 1e-3 * (a2 - c2);
  return {b2 + eps, a2 - eps, c2 + eps, b2 - eps};
}

namespace detail {

/// Integral of sqrt|f| between two adjacent poles lo < hi of f, with the
/// third pole `other`. Each half of the interval is integrated in the
/// variable s with t = lo + s^2 (resp. t = hi - s^2), where the integrand
///   sqrt(t / |(hi - t)(other - t)|)   (resp. with lo in place of hi)
/// is smooth. The inverse uses tables in s as Newton seeds.
class PoleInterval {
 public:
  PoleInterval(double lo, double hi, double other, QuadratureSpec quad, int points)
      : lo_(lo), hi_(hi), other_(other), quad_(quad) {
    quad_.validate();
    if (points < 8) throw ArgumentError("ellipsoid tables need at least 8 points");
    const double mid = 0.5 * (lo + hi);
    for (int side = 0; side < 2; ++side) {
      Half& h = half_[side];
      h.from_hi = side == 1;
      const double s_end = std::sqrt(side == 0 ? mid - lo : hi - mid);
      const int n = points / 2;
      h.s.resize(n + 1);
      h.phi.resize(n + 1);
      h.phi[0] = 0.0;
      for (int k = 0; k <= n; ++k) h.s[k] = s_end * k / n;
      for (int k = 1; k <= n; ++k) {
        h.phi[k] = h.phi[k - 1] + integrate([&](double s) { return integrand(h, s); }, h.s[k - 1],
                                            h.s[k], quad_);
      }
    }
    total_ = half_[0].phi.back() + half_[1].phi.back();
  }

  [[nodiscard]] double total() const { return total_; }
  [[nodiscard]] double lo() const { return lo_; }
  [[nodiscard]] double hi() const { return hi_; }

  /// Integral from lo to t.
  [[nodiscard]] double forward(double t) const {
    if (!(t >= lo_ && t <= hi_)) throw ArgumentError("ellipsoid forward map: argument out of range");
    const double mid = 0.5 * (lo_ + hi_);
    if (t <= mid) return phi(half_[0], std::sqrt(t - lo_));
    return total_ - phi(half_[1], std::sqrt(hi_ - t));
  }

  /// t with forward(t) = x.
  [[nodiscard]] double inverse(double x) const {
    if (!(x >= 0.0 && x <= total_)) throw ArgumentError("ellipsoid inverse map: argument out of range");
    if (x <= half_[0].phi.back()) {
      const double s = solve(half_[0], x);
      return lo_ + s * s;
    }
    const double s = solve(half_[1], total_ - x);
    return hi_ - s * s;
  }

  /// d inverse / dx = 1 / sqrt|f|, written as 2 s / h(s) so that it stays finite at the poles.
  [[nodiscard]] double inverse_slope(double x) const {
    if (x <= half_[0].phi.back()) {
      const double s = solve(half_[0], x);
      return 2.0 * s / integrand(half_[0], s);
    }
    const double s = solve(half_[1], total_ - x);
    return 2.0 * s / integrand(half_[1], s);
  }

 private:
  struct Half {
    bool from_hi = false;
    std::vector<double> s;
    std::vector<double> phi;
  };

  [[nodiscard]] double integrand(const Half& h, double s) const {
    const double t = h.from_hi ? hi_ - s * s : lo_ + s * s;
    const double near = h.from_hi ? lo_ : hi_;
    return std::sqrt(t / std::abs((near - t) * (other_ - t)));
  }

  [[nodiscard]] std::size_t cell(const Half& h, double s) const {
    const auto it = std::upper_bound(h.s.begin(), h.s.end(), s);
    const auto k = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, it - h.s.begin() - 1));
    return std::min(k, h.s.size() - 2);
  }

  [[nodiscard]] double phi(const Half& h, double s) const {
    const std::size_t k = cell(h, s);
    return h.phi[k] + integrate([&](double r) { return integrand(h, r); }, h.s[k], s, local_quad());
  }

  static QuadratureSpec local_quad() { return {QuadratureScheme::gauss_legendre, 20, 1e-14, 40}; }

  [[nodiscard]] double solve(const Half& h, double x) const {
    if (x <= 0.0) return 0.0;
    const auto it = std::upper_bound(h.phi.begin(), h.phi.end(), x);
    std::size_t k = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, it - h.phi.begin() - 1));
    k = std::min(k, h.phi.size() - 2);
    // Cubic Hermite seed for s(phi) with exact slopes ds/dphi = 1 / h(s).
    const double p0 = h.phi[k], p1 = h.phi[k + 1];
    const double s0 = h.s[k], s1 = h.s[k + 1];
    const double dp = p1 - p0;
    const double w = (x - p0) / dp;
    const double m0 = dp / integrand(h, s0), m1 = dp / integrand(h, s1);
    const double w2 = w * w, w3 = w2 * w;
    double s = (2 * w3 - 3 * w2 + 1) * s0 + (w3 - 2 * w2 + w) * m0 + (-2 * w3 + 3 * w2) * s1 +
               (w3 - w2) * m1;
    s = std::clamp(s, s0, s1);
    for (int it_n = 0; it_n < 30; ++it_n) {
      const double r =
          p0 + integrate([&](double q) { return integrand(h, q); }, s0, s, local_quad()) - x;
      const double step = r / integrand(h, s);
      s = std::clamp(s - step, s0, s1);
      if (std::abs(step) <= 1e-16 * (1.0 + s)) return s;
    }
    return s;
  }

  double lo_, hi_, other_;
  QuadratureSpec quad_;
  Half half_[2];
  double total_ = 0.0;
};

}  // namespace detail

/// X(u) = integral of sqrt(f) from b^2 to u, Y(v) = integral of sqrt(-f) from c^2 to v,
/// and their inverses U(x), V(y).
class ConformalTables {
 public:
  explicit ConformalTables(EllipsoidAxes axes,
                           QuadratureSpec quad = {QuadratureScheme::adaptive, 64, 1e-14, 40},
                           int points = 512)
      : axes_((axes.validate(), axes)),
        x_(axes.b * axes.b, axes.a * axes.a, axes.c * axes.c, quad, points),
        y_(axes.c * axes.c, axes.b * axes.b, axes.a * axes.a, quad, points),
        points_(points) {}

  [[nodiscard]] const EllipsoidAxes& axes() const { return axes_; }
  [[nodiscard]] double x_max() const { return x_.total(); }
  [[nodiscard]] double y_max() const { return y_.total(); }
  [[nodiscard]] int points() const { return points_; }

  [[nodiscard]] double X(double u) const { return x_.forward(u); }
  [[nodiscard]] double Y(double v) const { return y_.forward(v); }
  [[nodiscard]] double U(double x) const { return x == 0.0 ? x_.lo() : x_.inverse(x); }
  [[nodiscard]] double V(double y) const { return y == 0.0 ? y_.lo() : y_.inverse(y); }
  [[nodiscard]] double dU_dx(double x) const { return x_.inverse_slope(x); }
  [[nodiscard]] double dV_dy(double y) const { return y_.inverse_slope(y); }

 private:
  EllipsoidAxes axes_;
  detail::PoleInterval x_;
  detail::PoleInterval y_;
  int points_;
};

inline ConformalTables forward_maps(const EllipsoidAxes& axes, const QuadratureSpec& quad = {
                                        QuadratureScheme::adaptive, 64, 1e-14, 40}) {
  return ConformalTables(axes, quad);
}

/// x(U(x), V(y)) on (0, x_max) x (0, y_max) with ds^2 = (U(x) - V(y)) (dx^2 + dy^2).
inline SurfaceChart liouville_chart(std::shared_ptr<const ConformalTables> tables) {
  const Domain dom(0.0, tables->x_max(), 0.0, tables->y_max());
  SurfaceChart chart;
  chart.name = "ellipsoid_conformal";
  chart.embed = [tables](ParamPoint p) {
    return curvature_line_embed(tables->axes(), tables->U(p.u), tables->V(p.v));
  };
  chart.metric = MetricField::conformal(
      [tables](ParamPoint p) { return tables->U(p.u) - tables->V(p.v); }, dom);
  chart.expected_class = LineElementClass::isothermal_liouville;
  chart.ambient_dim = 3;
  chart.staeckel = true;
  return chart;
}

inline SurfaceChart liouville_chart(const EllipsoidAxes& axes) {
  return liouville_chart(std::make_shared<const ConformalTables>(axes));
}

/// V(y) = c^2 / (1 - n2 sn^2(n2; y b sqrt(a^2 - c^2) / c^2 | m2)),
/// n2 = 1 - c^2 / b^2, m2 = a^2 (b^2 - c^2) / (b^2 (a^2 - c^2)).
inline double closed_form_V(const EllipsoidAxes& ax, double y,
                            const special::LieSeriesSpec& spec = {}) {
  ax.validate();
  const double a2 = ax.a * ax.a, b2 = ax.b * ax.b, c2 = ax.c * ax.c;
  const double n2 = 1.0 - c2 / b2;
  const double m2 = a2 * (b2 - c2) / (b2 * (a2 - c2));
  const double z = y * ax.b * std::sqrt(a2 - c2) / c2;
  const double s = special::gen_sn(n2, z, m2, spec);
  return c2 / (1.0 - n2 * s * s);
}

/// |closed-form V(y) - V(y) from the tables|.
inline double gen_sn_cross_check(const ConformalTables& tables, double y) {
  if (!(y > 0.0 && y < tables.y_max())) throw ArgumentError("gen_sn_cross_check: y out of range");
  return std::abs(closed_form_V(tables.axes(), y) - tables.V(y));
}

}  // namespace liouville
