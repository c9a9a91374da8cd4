#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "liouville/errors.hpp"

namespace liouville {

struct ParamPoint {
  double u = 0.0;
  double v = 0.0;

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

/// Tangent vector (du, dv) in the parameter plane.
struct Tangent {
  double du = 0.0;
  double dv = 0.0;

  friend bool operator==(const Tangent&, const Tangent&) = default;
};

inline ParamPoint operator+(ParamPoint p, Tangent d) { return {p.u + d.du, p.v + d.dv}; }
inline ParamPoint operator-(ParamPoint p, Tangent d) { return {p.u - d.du, p.v - d.dv}; }
inline Tangent operator*(double s, Tangent d) { return {s * d.du, s * d.dv}; }

/// Point in the ambient space R^k, k in {2, 3}; planar charts leave the third entry 0.
using AmbientPoint = std::array<double, 3>;

inline bool is_finite(ParamPoint p) { return std::isfinite(p.u) && std::isfinite(p.v); }

/// Open rectangle ]u_min, u_max[ x ]v_min, v_max[.
struct Domain {
  double u_min = 0.0;
  double u_max = 1.0;
  double v_min = 0.0;
  double v_max = 1.0;

  Domain() = default;
  Domain(double umin, double umax, double vmin, double vmax)
      : u_min(umin), u_max(umax), v_min(vmin), v_max(vmax) {
    if (!(u_min < u_max) || !(v_min < v_max)) {
      throw ArgumentError("Domain: bounds must satisfy min < max");
    }
  }

  [[nodiscard]] bool contains(ParamPoint p) const {
    return p.u > u_min && p.u < u_max && p.v > v_min && p.v < v_max;
  }

  /// True when the closed box [p - margin, p + margin] lies inside the open domain.
  [[nodiscard]] bool contains_with_margin(ParamPoint p, double mu, double mv) const {
    return p.u - mu > u_min && p.u + mu < u_max && p.v - mv > v_min && p.v + mv < v_max;
  }

  [[nodiscard]] double u_extent() const { return u_max - u_min; }
  [[nodiscard]] double v_extent() const { return v_max - v_min; }
  [[nodiscard]] ParamPoint center() const { return {0.5 * (u_min + u_max), 0.5 * (v_min + v_max)}; }
};

inline std::string to_string(ParamPoint p) {
  return "(" + std::to_string(p.u) + ", " + std::to_string(p.v) + ")";
}

/// Coefficients of the first fundamental form at one point.
struct MetricTensor {
  double g11 = 1.0;
  double g12 = 0.0;
  double g22 = 1.0;

  [[nodiscard]] double det() const { return g11 * g22 - g12 * g12; }
  [[nodiscard]] bool positive_definite() const { return g11 > 0.0 && det() > 0.0; }

  /// vel^t G vel
  [[nodiscard]] double form(Tangent t) const {
    return g11 * t.du * t.du + 2.0 * g12 * t.du * t.dv + g22 * t.dv * t.dv;
  }
};

/// Line element ds^2 = g11 du^2 + 2 g12 du dv + g22 dv^2 over a domain.
///
/// The coefficient function is evaluated through `at`, which rejects points
/// outside the domain. g21 is g12 by construction.
class MetricField {
 public:
  using Coefficients = std::function<MetricTensor(ParamPoint)>;
  using Scalar = std::function<double(ParamPoint)>;

  MetricField() = default;
  MetricField(Coefficients g, Domain domain) : g_(std::move(g)), domain_(domain) {}

  static MetricField orthogonal(Scalar g11, Scalar g22, Domain domain) {
    return MetricField(
        [g11 = std::move(g11), g22 = std::move(g22)](ParamPoint p) {
          return MetricTensor{g11(p), 0.0, g22(p)};
        },
        domain);
  }

  /// Isothermal: g11 = g22 = lambda, g12 = 0.
  static MetricField conformal(Scalar lambda, Domain domain) {
    return MetricField(
        [lambda = std::move(lambda)](ParamPoint p) {
          const double l = lambda(p);
          return MetricTensor{l, 0.0, l};
        },
        domain);
  }

  [[nodiscard]] MetricTensor at(ParamPoint p) const {
    if (!domain_.contains(p)) {
      throw DomainError("metric evaluated outside its domain at " + to_string(p));
    }
    return g_(p);
  }

  /// Evaluation without the domain check; for stencils that may touch the boundary.
  [[nodiscard]] MetricTensor unchecked(ParamPoint p) const { return g_(p); }

  [[nodiscard]] const Domain& domain() const { return domain_; }
  [[nodiscard]] MetricField with_domain(Domain d) const { return MetricField(g_, d); }
  [[nodiscard]] const Coefficients& coefficients() const { return g_; }

 private:
  Coefficients g_ = [](ParamPoint) { return MetricTensor{}; };
  Domain domain_{};
};

/// q = vel^t G(p) vel.
inline double quadratic_form(const MetricField& metric, ParamPoint p, Tangent vel) {
  return metric.at(p).form(vel);
}

/// Differentiable parameter curve c : [t_a, t_b] -> parameter plane with analytic velocity.
struct ParamCurve {
  std::function<ParamPoint(double)> position;
  std::function<Tangent(double)> velocity;
  double t_a = 0.0;
  double t_b = 1.0;

  ParamCurve() = default;
  ParamCurve(std::function<ParamPoint(double)> c, std::function<Tangent(double)> dc, double ta,
             double tb)
      : position(std::move(c)), velocity(std::move(dc)), t_a(ta), t_b(tb) {
    if (!(t_a < t_b)) throw ArgumentError("ParamCurve: t_a must be < t_b");
  }

  /// Straight segment t -> origin + t * direction.
  static ParamCurve line(ParamPoint origin, Tangent direction, double ta, double tb) {
    return ParamCurve([=](double t) { return origin + t * direction; },
                      [=](double) { return direction; }, ta, tb);
  }

  ParamPoint operator()(double t) const { return position(t); }

  /// Largest deviation between the supplied velocity and a central difference
  /// of the position, over `samples` interior points.
  [[nodiscard]] double velocity_defect(int samples = 16, double h = 1e-6) const {
    double worst = 0.0;
    for (int i = 1; i <= samples; ++i) {
      const double t = t_a + (t_b - t_a) * i / (samples + 1.0);
      const ParamPoint p = position(t + h);
      const ParamPoint m = position(t - h);
      const Tangent fd{(p.u - m.u) / (2 * h), (p.v - m.v) / (2 * h)};
      const Tangent an = velocity(t);
      worst = std::max({worst, std::abs(fd.du - an.du), std::abs(fd.dv - an.dv)});
    }
    return worst;
  }
};

}  // namespace liouville
