#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <vector>

#include "liouville/errors.hpp"

namespace liouville {

enum class QuadratureScheme { gauss_legendre, adaptive };

struct QuadratureSpec {
  QuadratureScheme scheme = QuadratureScheme::gauss_legendre;
  int order = 64;
  double rel_tol = 1e-12;
  int max_depth = 40;

  void validate() const {
    if (order < 2) throw ArgumentError("QuadratureSpec: order must be >= 2");
    if (!(rel_tol > 0.0)) throw ArgumentError("QuadratureSpec: rel_tol must be > 0");
  }
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

namespace detail {

// Newton iteration on P_n from the Chebyshev-like initial guesses; symmetric pairs.
inline GaussLegendreRule compute_gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace detail

/// Cached rule of the given order. Thread-safe; rules are immutable once built.
inline const GaussLegendreRule& gauss_legendre_rule(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussLegendreRule>(detail::compute_gauss_legendre(n));
  return *slot;
}

/// Result of one fixed-order application: the integral and the integral of |f|.
struct RuleValue {
  double value = 0.0;
  double magnitude = 0.0;
};

template <class F>
RuleValue apply_rule(const GaussLegendreRule& rule, F&& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  RuleValue r;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double fx = f(mid + half * rule.nodes[i]);
    r.value += rule.weights[i] * fx;
    r.magnitude += rule.weights[i] * std::abs(fx);
  }
  r.value *= half;
  r.magnitude *= std::abs(half);
  return r;
}

namespace detail {

template <class F>
double adaptive_segment(F& f, double a, double b, const GaussLegendreRule& coarse,
                        const GaussLegendreRule& fine, double abs_tol, int depth,
                        int max_depth) {
  const RuleValue lo = apply_rule(coarse, f, a, b);
  const RuleValue hi = apply_rule(fine, f, a, b);
  const double diff = std::abs(hi.value - lo.value);
  // Second clause: the two rules agree to rounding, nothing left to refine.
  if (diff <= abs_tol || diff <= 1e-15 * hi.magnitude) return hi.value;
  if (depth >= max_depth) {
    throw AccuracyError("quadrature: bisection depth exhausted before reaching tolerance");
  }
  const double m = 0.5 * (a + b);
  return adaptive_segment(f, a, m, coarse, fine, 0.5 * abs_tol, depth + 1, max_depth) +
         adaptive_segment(f, m, b, coarse, fine, 0.5 * abs_tol, depth + 1, max_depth);
}

}  // namespace detail

/// Integral of f over [a, b].
///
/// gauss_legendre: a single rule of `order` points on the whole interval,
/// accepted when it agrees with the rule of half the order; otherwise falls
/// back to adaptive bisection. adaptive: bisection from the start. The
/// tolerance is relative to the integral of |f| so cancelling integrands
/// (energy gaps) still terminate.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  spec.validate();
  if (a == b) return 0.0;
  const GaussLegendreRule& fine = gauss_legendre_rule(spec.order);
  const GaussLegendreRule& coarse = gauss_legendre_rule(std::max(2, spec.order / 2));
  const RuleValue hi = apply_rule(fine, f, a, b);
  const double abs_tol = spec.rel_tol * std::max(hi.magnitude, 1e-300);
  if (spec.scheme == QuadratureScheme::gauss_legendre) {
    const RuleValue lo = apply_rule(coarse, f, a, b);
    if (std::abs(hi.value - lo.value) <= abs_tol) return hi.value;
  }
  return detail::adaptive_segment(f, a, b, coarse, fine, abs_tol, 0, spec.max_depth);
}

}  // namespace liouville
